//! The functor Φ: a poset's ordering relation `{(a, b) : a <= b}` ordered
//! coordinatewise as a subposet of `P × P`.

mod corollary;
mod explore;
mod image;

pub use corollary::{primes_of_phi_closed_form, verify_corollary, CorollaryCounterexample, CorollaryOutcome};
pub use explore::{
    dimension_report, find_fixed_points, free_lattice_shift_check, DimensionRow, FixedPointHit, FixedPointMode,
    FixedPointReport, ShiftReport,
};
pub use image::{factor_by_two, in_image_of_phi, lemma51_iso, FactorWitness, ImageDecision, ImageWitness, Lemma51Iso};

use crate::error::{Error, Result};
use crate::lattice::{DistLattice, LatticeHom};
use crate::limits::{check_cap, Limits};
use crate::poset::Poset;

/// Bijection between the elements of Φ(P) and the related pairs of P, in
/// lexicographic order of `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiCarrierMap {
    base_size: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl PhiCarrierMap {
    fn new(p: &Poset) -> PhiCarrierMap {
        let n = p.size();
        let mut pairs = Vec::new();
        let mut index = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if p.leq(a, b) {
                    index[a * n + b] = Some(pairs.len());
                    pairs.push((a, b));
                }
            }
        }
        PhiCarrierMap {
            base_size: n,
            pairs,
            index,
        }
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Index of `(a, b)` in Φ(P), if `a <= b`.
    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.base_size || b >= self.base_size {
            return None;
        }
        self.index[a * self.base_size + b]
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn phi_poset(p: &Poset, limits: &Limits) -> Result<(Poset, PhiCarrierMap)> {
    check_cap("Φ carrier size", limits.max_size, p.related_pairs())?;
    let map = PhiCarrierMap::new(p);
    let labels = map
        .pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", p.label(a), p.label(b)))
        .collect();
    let phi = Poset::from_fn(map.len(), labels, |i, j| {
        let ((a, b), (c, d)) = (map.pairs[i], map.pairs[j]);
        p.leq(a, c) && p.leq(b, d)
    });
    Ok((phi, map))
}

/// Φ(L) as a lattice, checked to be a (0,1)-sublattice of `L × L`: the
/// componentwise operations stay inside Φ(L) and agree with the meet and join
/// computed from its order.
pub fn phi_lattice(l: &DistLattice, limits: &Limits) -> Result<(DistLattice, PhiCarrierMap)> {
    let (order, map) = phi_poset(l.order(), limits)?;
    let n = map.len();
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let ((a, b), (c, d)) = (map.pair(i), map.pair(j));
            let closed = |x: usize, y: usize, op: &str| {
                map.index_of(x, y)
                    .ok_or_else(|| Error::Internal(format!("Φ(L) not closed under componentwise {op}")))
            };
            meet[i * n + j] = closed(l.meet(a, c), l.meet(b, d), "meet")?;
            join[i * n + j] = closed(l.join(a, c), l.join(b, d), "join")?;
        }
    }
    let phi = DistLattice::from_poset(order)?;
    for i in 0..n {
        for j in 0..n {
            if phi.meet(i, j) != meet[i * n + j] || phi.join(i, j) != join[i * n + j] {
                return Err(Error::Internal(format!(
                    "lattice operations of Φ(L) are not componentwise at ({i}, {j})"
                )));
            }
        }
    }
    let bottom = map.index_of(l.bottom(), l.bottom());
    let top = map.index_of(l.top(), l.top());
    if bottom != Some(phi.bottom()) || top != Some(phi.top()) {
        return Err(Error::Internal("bounds of Φ(L) are not (0,0) and (1,1)".into()));
    }
    Ok((phi, map))
}

/// Φ(f): `(a, b) ↦ (f(a), f(b))`.
pub fn phi_hom(f: &LatticeHom, limits: &Limits) -> Result<LatticeHom> {
    let (source, smap) = phi_lattice(f.source(), limits)?;
    let (target, tmap) = phi_lattice(f.target(), limits)?;
    let map = smap
        .pairs()
        .iter()
        .map(|&(a, b)| {
            tmap.index_of(f.apply(a), f.apply(b))
                .ok_or_else(|| Error::Internal("image pair leaves Φ(K)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    LatticeHom::new(source, target, map)
}
