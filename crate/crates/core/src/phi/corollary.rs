//! Prime ideals of Φ(L) from those of L, and an exhaustive cross-check.
//!
//! Every prime ideal of Φ(L) is `(I × I) ∩ Φ(L)` or `(I × L) ∩ Φ(L)` for a
//! prime ideal `I` of `L`. The check below recomputes the prime ideals of
//! Φ(L) by brute force and also confirms, for each of them `S` with
//! projections `S₁`, `S₂`:
//!
//! - `S = (S₁ × S₂) ∩ Φ(L)`,
//! - `S₁` is prime and `S₂` is prime or all of `L`,
//! - `S₂ ∈ {S₁, L}`.

use super::{phi_lattice, PhiCarrierMap};
use crate::bits;
use crate::duality::{is_prime_ideal, prime_ideals, PrimeIdeal};
use crate::error::Result;
use crate::lattice::DistLattice;
use crate::limits::{check_mask_cap, Limits, MASK_BITS};

fn restrict(map: &PhiCarrierMap, first: u64, second: u64) -> u64 {
    map.pairs()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| bits::has(first, a) && bits::has(second, b))
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn closed_form(l: &DistLattice, phi: &DistLattice, map: &PhiCarrierMap, limits: &Limits) -> Result<Vec<PrimeIdeal>> {
    check_mask_cap("Φ(L) size", MASK_BITS, phi.size())?;
    let whole = bits::full(l.size());
    let mut out = Vec::new();
    for ideal in prime_ideals(l, limits)? {
        for second in [ideal.mask(), whole] {
            out.push(PrimeIdeal::new(phi, restrict(map, ideal.mask(), second))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `{(I×I) ∩ Φ(L)} ∪ {(I×L) ∩ Φ(L)}` over the prime ideals `I` of `l`, as masks
/// over the carrier of `phi_lattice(l)`, deduplicated and sorted.
pub fn primes_of_phi_closed_form(l: &DistLattice, limits: &Limits) -> Result<Vec<PrimeIdeal>> {
    let (phi, map) = phi_lattice(l, limits)?;
    closed_form(l, &phi, &map, limits)
}

/// First discrepancy found by [`verify_corollary`]. Subsets of Φ(L) are
/// listed as pairs of `L`, subsets of `L` as element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorollaryCounterexample {
    /// A brute-force prime ideal of Φ(L) missing from the closed form.
    MissingFromClosedForm { ideal: Vec<(usize, usize)> },
    /// A closed-form member that brute force did not find.
    MissingFromBruteForce { ideal: Vec<(usize, usize)> },
    ProductDecomposition {
        ideal: Vec<(usize, usize)>,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    FirstProjectionNotPrime {
        ideal: Vec<(usize, usize)>,
        first: Vec<usize>,
    },
    SecondProjectionNotPrimeOrWhole {
        ideal: Vec<(usize, usize)>,
        second: Vec<usize>,
    },
    ProjectionsNotEqualOrWhole {
        ideal: Vec<(usize, usize)>,
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryOutcome {
    pub lattice_size: usize,
    pub phi_size: usize,
    /// Prime ideals of Φ(L) found by brute force.
    pub prime_count: usize,
    /// How many of them have `S₂ = L`.
    pub whole_second_projection: usize,
    pub counterexample: Option<CorollaryCounterexample>,
}

impl CorollaryOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn verify_corollary(l: &DistLattice, limits: &Limits) -> Result<CorollaryOutcome> {
    let (phi, map) = phi_lattice(l, limits)?;
    let closed = closed_form(l, &phi, &map, limits)?;
    let brute = prime_ideals(&phi, limits)?;
    let pairs = |mask: u64| bits::iter(mask).map(|i| map.pair(i)).collect::<Vec<_>>();
    let mut outcome = CorollaryOutcome {
        lattice_size: l.size(),
        phi_size: phi.size(),
        prime_count: brute.len(),
        whole_second_projection: 0,
        counterexample: None,
    };

    if let Some(s) = brute.iter().find(|s| closed.binary_search(s).is_err()) {
        outcome.counterexample = Some(CorollaryCounterexample::MissingFromClosedForm { ideal: pairs(s.mask()) });
        return Ok(outcome);
    }
    if let Some(s) = closed.iter().find(|s| brute.binary_search(s).is_err()) {
        outcome.counterexample = Some(CorollaryCounterexample::MissingFromBruteForce { ideal: pairs(s.mask()) });
        return Ok(outcome);
    }

    let whole = bits::full(l.size());
    for s in &brute {
        let (first, second) = bits::iter(s.mask()).fold((0u64, 0u64), |(f, g), i| {
            let (a, b) = map.pair(i);
            (f | 1 << a, g | 1 << b)
        });
        let ideal = pairs(s.mask());
        let counterexample = if restrict(&map, first, second) != s.mask() {
            Some(CorollaryCounterexample::ProductDecomposition {
                ideal,
                first: bits::members(first),
                second: bits::members(second),
            })
        } else if !is_prime_ideal(l, first) {
            Some(CorollaryCounterexample::FirstProjectionNotPrime {
                ideal,
                first: bits::members(first),
            })
        } else if second != whole && !is_prime_ideal(l, second) {
            Some(CorollaryCounterexample::SecondProjectionNotPrimeOrWhole {
                ideal,
                second: bits::members(second),
            })
        } else if second != first && second != whole {
            Some(CorollaryCounterexample::ProjectionsNotEqualOrWhole {
                ideal,
                first: bits::members(first),
                second: bits::members(second),
            })
        } else {
            None
        };
        if counterexample.is_some() {
            outcome.counterexample = counterexample;
            return Ok(outcome);
        }
        if second == whole {
            outcome.whole_second_projection += 1;
        }
    }
    Ok(outcome)
}
