//! Finite Priestley duality.
//!
//! A finite Priestley space is a finite poset with the discrete topology, so
//! its clopen down-sets are simply its down-sets and the spectrum of a finite
//! lattice is the poset of its prime ideals under inclusion. Subsets of a
//! carrier are `u64` bitmasks throughout, so every carrier here has at most
//! 64 elements.

use crate::bits;
use crate::error::{Error, Result};
use crate::lattice::{DistLattice, LatticeHom};
use crate::limits::{check_cap, check_mask_cap, Limits};
use crate::poset::{down_sets, IsoWitness, Poset};

/// Nonempty down-set closed under binary joins.
pub fn is_ideal(l: &DistLattice, mask: u64) -> bool {
    mask != 0
        && l.order().is_down_set(mask)
        && bits::iter(mask).all(|a| bits::iter(mask).all(|b| bits::has(mask, l.join(a, b))))
}

/// Nonempty up-set closed under binary meets.
pub fn is_filter(l: &DistLattice, mask: u64) -> bool {
    mask != 0
        && l.order().is_up_set(mask)
        && bits::iter(mask).all(|a| bits::iter(mask).all(|b| bits::has(mask, l.meet(a, b))))
}

/// Proper ideal whose complement is closed under meets.
pub fn is_prime_ideal(l: &DistLattice, mask: u64) -> bool {
    let complement = bits::full(l.size()) & !mask;
    is_ideal(l, mask)
        && complement != 0
        && bits::iter(complement).all(|a| bits::iter(complement).all(|b| !bits::has(mask, l.meet(a, b))))
}

/// A prime ideal of a lattice, as the mask of its members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    members: u64,
}

impl PrimeIdeal {
    /// Checks the prime-ideal predicate before wrapping `mask`.
    pub fn new(l: &DistLattice, mask: u64) -> Result<PrimeIdeal> {
        if is_prime_ideal(l, mask) {
            Ok(PrimeIdeal { members: mask })
        } else {
            Err(Error::Internal(format!(
                "{:?} is not a prime ideal",
                bits::members(mask)
            )))
        }
    }

    pub fn mask(&self) -> u64 {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        bits::has(self.members, a)
    }

    pub fn members(&self) -> Vec<usize> {
        bits::members(self.members)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }
}

fn set_label(labels: &[String], mask: u64) -> String {
    let inner: Vec<&str> = bits::iter(mask).map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Every prime ideal of `l`, found by filtering the down-sets of its order,
/// sorted by mask.
pub fn prime_ideals(l: &DistLattice, limits: &Limits) -> Result<Vec<PrimeIdeal>> {
    check_mask_cap("prime-ideal lattice size", limits.max_prime_size, l.size())?;
    let all = Limits {
        max_downset_size: l.size(),
        ..limits.clone()
    };
    Ok(down_sets(l.order(), &all)?
        .into_iter()
        .filter(|&m| is_prime_ideal(l, m))
        .map(|members| PrimeIdeal { members })
        .collect())
}

/// The prime ideals of a lattice ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub ideals: Vec<PrimeIdeal>,
    pub order: Poset,
}

impl Spectrum {
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.ideals.binary_search_by_key(&mask, |i| i.mask()).ok()
    }

    pub fn size(&self) -> usize {
        self.ideals.len()
    }
}

pub fn spec(l: &DistLattice, limits: &Limits) -> Result<Spectrum> {
    let ideals = prime_ideals(l, limits)?;
    let labels = ideals.iter().map(|i| set_label(l.order().labels(), i.mask())).collect();
    let order = Poset::from_fn(ideals.len(), labels, |i, j| ideals[i].mask() & !ideals[j].mask() == 0);
    Ok(Spectrum { ideals, order })
}

/// The dual of a lattice homomorphism `f: L -> K`: `I ↦ f⁻¹(I)` from the
/// spectrum of `K` to the spectrum of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumMap {
    pub source: Spectrum,
    pub target: Spectrum,
    pub map: Vec<usize>,
}

pub fn spec_hom(f: &LatticeHom, limits: &Limits) -> Result<SpectrumMap> {
    let source = spec(f.target(), limits)?;
    let target = spec(f.source(), limits)?;
    let mut map = Vec::with_capacity(source.size());
    for ideal in &source.ideals {
        let preimage = (0..f.source().size())
            .filter(|&a| ideal.contains(f.apply(a)))
            .fold(0u64, |m, a| m | 1 << a);
        let index = target.index_of(preimage).ok_or_else(|| {
            Error::Internal(format!(
                "preimage {:?} of a prime ideal is not prime",
                bits::members(preimage)
            ))
        })?;
        map.push(index);
    }
    for i in 0..source.size() {
        for j in 0..source.size() {
            if source.order.leq(i, j) && !target.order.leq(map[i], map[j]) {
                return Err(Error::Internal("spectrum map is not order-preserving".into()));
            }
        }
    }
    Ok(SpectrumMap { source, target, map })
}

/// The lattice of down-sets of a finite poset together with the down-set
/// behind each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownsetLattice {
    pub lattice: DistLattice,
    /// `sets[i]` is the down-set represented by element `i`, sorted ascending.
    pub sets: Vec<u64>,
}

impl DownsetLattice {
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.sets.binary_search(&mask).ok()
    }

    pub fn size(&self) -> usize {
        self.sets.len()
    }
}

/// All down-sets of `x` under inclusion, with `∧ = ∩`, `∨ = ∪`, `0 = ∅` and
/// `1 = X`.
pub fn clopen_downset_lattice(x: &Poset, limits: &Limits) -> Result<DownsetLattice> {
    if x.is_empty() {
        return Err(Error::DegenerateBounds);
    }
    let sets = down_sets(x, limits)?;
    check_cap("down-set lattice size", limits.max_size, sets.len())?;
    let labels = sets.iter().map(|&m| set_label(x.labels(), m)).collect();
    let order = Poset::from_fn(sets.len(), labels, |i, j| sets[i] & !sets[j] == 0);
    let lattice = DistLattice::from_poset(order)?;
    let result = DownsetLattice { lattice, sets };
    let n = result.size();
    for a in 0..n {
        for b in 0..n {
            let (sa, sb) = (result.sets[a], result.sets[b]);
            if result.sets[result.lattice.meet(a, b)] != sa & sb || result.sets[result.lattice.join(a, b)] != sa | sb {
                return Err(Error::Internal("down-set lattice operations are not ∩ and ∪".into()));
            }
        }
    }
    Ok(result)
}

/// A validated order-preserving map between posets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Poset,
    target: Poset,
    map: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Poset, target: Poset, map: Vec<usize>) -> Result<MonotoneMap> {
        if map.len() != source.size() {
            return Err(Error::MatrixShape {
                expected: source.size(),
                actual: map.len(),
            });
        }
        if let Some(&index) = map.iter().find(|&&m| m >= target.size()) {
            return Err(Error::IndexOutOfRange {
                index,
                size: target.size(),
            });
        }
        for a in 0..source.size() {
            for b in 0..source.size() {
                if source.leq(a, b) && !target.leq(map[a], map[b]) {
                    return Err(Error::NotOrderPreserving(a, b));
                }
            }
        }
        Ok(MonotoneMap { source, target, map })
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// The dual of an order-preserving `g: X -> Y`: `d ↦ g⁻¹(d)` from `ℰ(Y)` to `ℰ(X)`.
pub fn e_hom(g: &MonotoneMap, limits: &Limits) -> Result<LatticeHom> {
    let ex = clopen_downset_lattice(g.source(), limits)?;
    let ey = clopen_downset_lattice(g.target(), limits)?;
    let mut map = Vec::with_capacity(ey.size());
    for &d in &ey.sets {
        let preimage = (0..g.source().size())
            .filter(|&x| bits::has(d, g.map()[x]))
            .fold(0u64, |m, x| m | 1 << x);
        map.push(
            ex.index_of(preimage).ok_or_else(|| {
                Error::Internal("preimage of a down-set under a monotone map is not a down-set".into())
            })?,
        );
    }
    LatticeHom::new(ey.lattice, ex.lattice, map)
}

/// The unit `a ↦ X_a = {I : a ∉ I}` from `l` onto the down-set lattice of its
/// spectrum, returned with that lattice and the spectrum itself.
pub fn unit_lattice(l: &DistLattice, limits: &Limits) -> Result<(Spectrum, DownsetLattice, IsoWitness)> {
    let spectrum = spec(l, limits)?;
    let dual = clopen_downset_lattice(&spectrum.order, limits)?;
    let mut forward = Vec::with_capacity(l.size());
    for a in 0..l.size() {
        let x_a = spectrum
            .ideals
            .iter()
            .enumerate()
            .filter(|(_, ideal)| !ideal.contains(a))
            .fold(0u64, |m, (i, _)| m | 1 << i);
        forward.push(
            dual.index_of(x_a)
                .ok_or_else(|| Error::Internal(format!("X_{a} is not a down-set of the spectrum")))?,
        );
    }
    let witness = IsoWitness::from_forward(forward)
        .map_err(|e| Error::Internal(format!("duality unit is not a bijection: {e}")))?;
    witness
        .verify(l.order(), dual.lattice.order())
        .map_err(|e| Error::Internal(format!("duality unit is not an isomorphism: {e}")))?;
    Ok((spectrum, dual, witness))
}

/// The unit `x ↦ {d : x ∉ d}` from `x` onto the spectrum of its down-set
/// lattice, returned with that lattice and spectrum.
pub fn unit_space(x: &Poset, limits: &Limits) -> Result<(DownsetLattice, Spectrum, IsoWitness)> {
    let e = clopen_downset_lattice(x, limits)?;
    let spectrum = spec(&e.lattice, limits)?;
    let mut forward = Vec::with_capacity(x.size());
    for p in 0..x.size() {
        let ideal = e
            .sets
            .iter()
            .enumerate()
            .filter(|(_, &d)| !bits::has(d, p))
            .fold(0u64, |m, (i, _)| m | 1 << i);
        forward.push(
            spectrum
                .index_of(ideal)
                .ok_or_else(|| Error::Internal(format!("point {p} does not give a prime ideal")))?,
        );
    }
    let witness = IsoWitness::from_forward(forward)
        .map_err(|e| Error::Internal(format!("space unit is not a bijection: {e}")))?;
    witness
        .verify(x, &spectrum.order)
        .map_err(|e| Error::Internal(format!("space unit is not an isomorphism: {e}")))?;
    Ok((e, spectrum, witness))
}
