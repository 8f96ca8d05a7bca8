//! Exhaustive small-scale scans around fixed points and order dimension of Φ.

use rayon::prelude::*;

use super::{lemma51_iso, phi_poset};
use crate::bits;
use crate::duality::clopen_downset_lattice;
use crate::error::{Error, Result};
use crate::lattice::DistLattice;
use crate::limits::{check_cap, Limits};
use crate::poset::{enumerate_posets, is_isomorphic, order_dimension, width, IsoWitness, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedPointMode {
    Lattices,
    Posets,
    ConnectedPosets,
}

impl FixedPointMode {
    pub fn name(&self) -> &'static str {
        match self {
            FixedPointMode::Lattices => "lattices",
            FixedPointMode::Posets => "posets",
            FixedPointMode::ConnectedPosets => "connected_posets",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointHit {
    /// `<size>-<canonical code in hex>`.
    pub id: String,
    pub poset: Poset,
    pub witness: IsoWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointReport {
    pub mode: FixedPointMode,
    pub n_max: usize,
    pub scanned: usize,
    pub hits: Vec<FixedPointHit>,
    pub expectation: &'static str,
    pub expectation_holds: bool,
}

pub(crate) fn poset_id(p: &Poset) -> String {
    format!("{}-{}", p.size(), p.canonical_code())
}

/// Scans every isomorphism class of size `1..=n_max` admitted by `mode` for
/// `Φ(P) ≅ P`, then checks the hits against the cardinality argument
/// `|Φ(P)| = #{a <= b}`: among posets exactly the antichains, among lattices
/// none, among connected posets only the singleton.
pub fn find_fixed_points(n_max: usize, mode: FixedPointMode, limits: &Limits) -> Result<FixedPointReport> {
    check_cap("fixed-point scan size", limits.max_enum_size, n_max)?;
    let mut candidates = Vec::new();
    for n in 1..=n_max {
        for p in enumerate_posets(n, limits)? {
            let admitted = match mode {
                FixedPointMode::Posets => true,
                FixedPointMode::ConnectedPosets => p.is_connected()?,
                FixedPointMode::Lattices => match DistLattice::from_poset(p.clone()) {
                    Ok(_) => true,
                    Err(e) if e.is_not_a_lattice() => false,
                    Err(Error::NotDistributive(..) | Error::DegenerateBounds) => false,
                    Err(e) => return Err(e),
                },
            };
            if admitted {
                candidates.push(p);
            }
        }
    }
    let scanned = candidates.len();
    let checked: Vec<Result<Option<FixedPointHit>>> = candidates
        .into_par_iter()
        .map(|p| {
            let (phi, _) = phi_poset(&p, limits)?;
            Ok(is_isomorphic(&phi, &p).map(|witness| FixedPointHit {
                id: poset_id(&p),
                poset: p,
                witness,
            }))
        })
        .collect();
    let mut hits = Vec::new();
    for hit in checked {
        if let Some(h) = hit? {
            hits.push(h);
        }
    }

    let (expectation, expectation_holds) = match mode {
        FixedPointMode::Posets => {
            let mut antichains = 0;
            for n in 1..=n_max {
                antichains += enumerate_posets(n, limits)?.iter().filter(|p| p.is_antichain()).count();
            }
            (
                "hits are exactly the antichains",
                hits.len() == antichains && hits.iter().all(|h| h.poset.is_antichain()),
            )
        }
        FixedPointMode::Lattices => ("no hits", hits.is_empty()),
        FixedPointMode::ConnectedPosets => (
            "only the singleton",
            hits.len() == usize::from(n_max >= 1) && hits.iter().all(|h| h.poset.size() == 1),
        ),
    };
    Ok(FixedPointReport {
        mode,
        n_max,
        scanned,
        hits,
        expectation,
        expectation_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftReport {
    pub n: usize,
    /// `|ℰ(2̲ⁿ)|`.
    pub lattice_size: usize,
    /// Related pairs `a <= b` of `ℰ(2̲ⁿ)`, i.e. `|Φ(ℰ(2̲ⁿ))|`.
    pub comparable_pairs: usize,
    /// `|ℰ(2̲ⁿ⁺¹)|`, from its own down-set enumeration.
    pub target_size: usize,
    /// Forward map from `Φ(ℰ(2̲ⁿ))` onto `ℰ(2̲ⁿ⁺¹)`.
    pub witness: IsoWitness,
    pub holds: bool,
}

/// Checks `Φ(ℰ(2̲ⁿ)) ≅ ℰ(2̲ⁿ⁺¹)` with an explicit witness: the Φ/ℰ isomorphism
/// for `X = 2̲ⁿ` followed by the image of down-sets under the coordinate
/// shuffle `2̲ⁿ × 2̲ → 2̲ⁿ⁺¹`, `(z, b) ↦ (b, z)`. That shuffle is the inverse of
/// `y ↦ (ls(y), y(0))` with `ls` the left shift.
pub fn free_lattice_shift_check(n: usize, limits: &Limits) -> Result<ShiftReport> {
    let cube = Poset::cube(n, limits)?;
    let next = Poset::cube(n + 1, limits)?;
    let lemma = lemma51_iso(&cube, limits)?;
    let target = clopen_downset_lattice(&next, limits)?;

    let high = 1usize << n;
    let shuffle = IsoWitness::from_forward((0..2 * high).map(|k| (k % 2) * high + k / 2).collect())?;
    shuffle
        .verify(&lemma.product, &next)
        .map_err(|e| Error::Internal(format!("coordinate shuffle: {e}")))?;

    let mut forward = Vec::with_capacity(lemma.phi.size());
    for p in 0..lemma.phi.size() {
        let c = lemma.product_downsets.sets[lemma.witness.forward[p]];
        let image = bits::iter(c).fold(0u64, |m, q| m | 1 << shuffle.forward[q]);
        forward.push(
            target
                .index_of(image)
                .ok_or_else(|| Error::Internal("shuffled down-set is not a down-set".into()))?,
        );
    }
    let holds = lemma.phi.size() == target.size();
    let witness = if holds {
        IsoWitness::from_forward(forward)?
    } else {
        IsoWitness {
            forward,
            backward: Vec::new(),
        }
    };
    let holds = holds && witness.is_valid(lemma.phi.order(), target.lattice.order());
    Ok(ShiftReport {
        n,
        lattice_size: lemma.downsets.size(),
        comparable_pairs: lemma.downsets.lattice.order().related_pairs(),
        target_size: target.size(),
        witness,
        holds,
    })
}

/// One row of the dimension table; `None` marks a value skipped by the
/// dimension cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionRow {
    pub id: String,
    pub size: usize,
    pub phi_size: usize,
    pub dim: Option<usize>,
    pub dim_phi: Option<usize>,
    pub width: usize,
    pub width_phi: usize,
}

fn capped_dimension(p: &Poset, limits: &Limits) -> Result<Option<usize>> {
    match order_dimension(p, limits) {
        Ok(d) => Ok(Some(d)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Dimension and width of `P` and `Φ(P)` for every class of size `1..=n_max`.
pub fn dimension_report(n_max: usize, limits: &Limits) -> Result<Vec<DimensionRow>> {
    check_cap("dimension table size", limits.max_enum_size.min(6), n_max)?;
    let mut posets = Vec::new();
    for n in 1..=n_max {
        posets.extend(enumerate_posets(n, limits)?);
    }
    posets
        .into_par_iter()
        .map(|p| {
            let (phi, _) = phi_poset(&p, limits)?;
            Ok(DimensionRow {
                id: poset_id(&p),
                size: p.size(),
                phi_size: phi.size(),
                dim: capped_dimension(&p, limits)?,
                dim_phi: capped_dimension(&phi, limits)?,
                width: width(&p),
                width_phi: width(&phi),
            })
        })
        .collect()
}
