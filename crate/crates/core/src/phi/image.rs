//! Deciding whether a finite lattice is Φ of another one.
//!
//! `L ≅ Φ(K)` for some `K` iff the spectrum of `L` factors as `Y × 2̲`, and
//! then `K = ℰ(Y)` works. The witness is assembled from three explicit maps:
//! the isomorphism `Φ(ℰ(Y)) ≅ ℰ(Y × 2̲)`, the image of down-sets under the
//! factorization `Y × 2̲ ≅ 𝒳(L)`, and the inverse of the duality unit.

use super::{phi_lattice, PhiCarrierMap};
use crate::bits;
use crate::duality::{clopen_downset_lattice, unit_lattice, DownsetLattice};
use crate::error::{Error, Result};
use crate::lattice::DistLattice;
use crate::limits::Limits;
use crate::poset::{down_sets, IsoWitness, Poset};

/// The isomorphism `Φ(ℰ(X)) → ℰ(X × 2̲)` with all the structures it connects.
///
/// In `X × 2̲` the point `(x, i)` has index `2x + i`; layer `1` is the top copy.
#[derive(Debug, Clone)]
pub struct Lemma51Iso {
    pub downsets: DownsetLattice,
    pub phi: DistLattice,
    pub pairs: PhiCarrierMap,
    pub product: Poset,
    pub product_downsets: DownsetLattice,
    /// `(d, e) ↦ d × {1} ∪ e × {0}` and its inverse `c ↦ (c₁, c₀)`.
    pub witness: IsoWitness,
}

/// Builds φ and ψ from their defining formulas and checks that they are
/// mutually inverse and order-preserving.
pub fn lemma51_iso(x: &Poset, limits: &Limits) -> Result<Lemma51Iso> {
    let downsets = clopen_downset_lattice(x, limits)?;
    let (phi, pairs) = phi_lattice(&downsets.lattice, limits)?;
    let product = x.product(&Poset::chain(2), limits)?;
    let product_downsets = clopen_downset_lattice(&product, limits)?;

    let layer = |mask: u64, i: usize| -> u64 { bits::iter(mask).fold(0, |m, p| m | 1 << (2 * p + i)) };
    let slice = |mask: u64, i: usize| -> u64 {
        (0..x.size())
            .filter(|&p| bits::has(mask, 2 * p + i))
            .fold(0, |m, p| m | 1 << p)
    };

    let mut forward = Vec::with_capacity(phi.size());
    for &(d, e) in pairs.pairs() {
        let c = layer(downsets.sets[d], 1) | layer(downsets.sets[e], 0);
        forward.push(
            product_downsets
                .index_of(c)
                .ok_or_else(|| Error::Internal("φ(d, e) is not a down-set of X × 2".into()))?,
        );
    }
    let mut backward = Vec::with_capacity(product_downsets.size());
    for &c in &product_downsets.sets {
        let missing = || Error::Internal("a slice of a down-set of X × 2 is not a down-set".into());
        let c1 = downsets.index_of(slice(c, 1)).ok_or_else(missing)?;
        let c0 = downsets.index_of(slice(c, 0)).ok_or_else(missing)?;
        backward.push(
            pairs
                .index_of(c1, c0)
                .ok_or_else(|| Error::Internal("ψ(c) = (c₁, c₀) has c₁ ⊄ c₀".into()))?,
        );
    }

    let witness = IsoWitness { forward, backward };
    witness
        .verify(phi.order(), product_downsets.lattice.order())
        .map_err(|e| Error::Internal(format!("φ/ψ: {e}")))?;
    // verify covers ψ as the order-reflecting half; check it directly as well
    let q = product_downsets.lattice.order();
    for a in 0..q.size() {
        for b in 0..q.size() {
            if q.leq(a, b) && !phi.leq(witness.backward[a], witness.backward[b]) {
                return Err(Error::Internal("ψ is not order-preserving".into()));
            }
        }
    }
    Ok(Lemma51Iso {
        downsets,
        phi,
        pairs,
        product,
        product_downsets,
        witness,
    })
}

/// A factorization `P ≅ Y × 2̲` with `Y` the bottom layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorWitness {
    /// The bottom layer `B`, ascending; a down-set with `|B| = |P| / 2`.
    pub bottom_layer: Vec<usize>,
    /// `matching[k]` is the partner in `P ∖ B` of `bottom_layer[k]`.
    pub matching: Vec<usize>,
    /// `Y`, the subposet induced on `B`.
    pub factor: Poset,
    /// `(y, 0) ↦ B[y]`, `(y, 1) ↦ matching[y]`, from `product(Y, chain 2)` to `P`.
    pub assembled: IsoWitness,
}

impl FactorWitness {
    /// Re-checks every invariant against `p`.
    pub fn verify(&self, p: &Poset, limits: &Limits) -> Result<()> {
        let b = &self.bottom_layer;
        let mask = bits::from_members(b.iter().copied());
        if 2 * b.len() != p.size() || !p.is_down_set(mask) {
            return Err(Error::NotIsomorphism(
                "bottom layer is not a down-set of half size".into(),
            ));
        }
        for i in 0..b.len() {
            for j in 0..b.len() {
                let (mi, mj) = (self.matching[i], self.matching[j]);
                if p.leq(b[i], b[j]) != p.leq(mi, mj) || p.leq(b[i], mj) != p.leq(b[i], b[j]) {
                    return Err(Error::NotIsomorphism(format!("matching fails at ({i}, {j})")));
                }
            }
        }
        let product = self.factor.product(&Poset::chain(2), limits)?;
        self.assembled.verify(&product, p)
    }
}

/// Searches for `P ≅ Y × 2̲`: down-sets `B` of half size in mask order, then a
/// backtracking matching `m: B → P ∖ B` with `b <= b' ⇔ m(b) <= m(b')` and the
/// cross law `b <= m(b') ⇔ b <= b'`.
pub fn factor_by_two(p: &Poset, limits: &Limits) -> Result<Option<FactorWitness>> {
    let n = p.size();
    if n % 2 == 1 {
        return Ok(None);
    }
    let half = n / 2;
    for mask in down_sets(p, limits)? {
        if mask.count_ones() as usize != half {
            continue;
        }
        let bottom: Vec<usize> = bits::members(mask);
        let upper: Vec<usize> = (0..n).filter(|&i| !bits::has(mask, i)).collect();
        let mut matching = Vec::with_capacity(half);
        let mut used = vec![false; half];
        if match_layers(p, &bottom, &upper, &mut matching, &mut used) {
            let factor = p.induced(&bottom);
            let forward = (0..n)
                .map(|k| if k % 2 == 0 { bottom[k / 2] } else { matching[k / 2] })
                .collect();
            let witness = FactorWitness {
                bottom_layer: bottom,
                matching,
                factor,
                assembled: IsoWitness::from_forward(forward)?,
            };
            witness
                .verify(p, limits)
                .map_err(|e| Error::Internal(format!("factorization witness: {e}")))?;
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

fn match_layers(p: &Poset, bottom: &[usize], upper: &[usize], matching: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = matching.len();
    if i == bottom.len() {
        return true;
    }
    let b = bottom[i];
    for (slot, &m) in upper.iter().enumerate() {
        if used[slot] || !p.leq(b, m) {
            continue;
        }
        let fits = (0..i).all(|j| {
            let (bj, mj) = (bottom[j], matching[j]);
            p.leq(b, bj) == p.leq(m, mj)
                && p.leq(bj, b) == p.leq(mj, m)
                && p.leq(b, mj) == p.leq(b, bj)
                && p.leq(bj, m) == p.leq(bj, b)
        });
        if !fits {
            continue;
        }
        used[slot] = true;
        matching.push(m);
        if match_layers(p, bottom, upper, matching, used) {
            return true;
        }
        matching.pop();
        used[slot] = false;
    }
    false
}

/// A lattice `K` with an explicit isomorphism `Φ(K) → L`.
#[derive(Debug, Clone)]
pub struct ImageWitness {
    pub k: DistLattice,
    pub phi_k: DistLattice,
    pub pairs: PhiCarrierMap,
    pub factor: FactorWitness,
    /// Forward map from the carrier of `phi_k` to that of `L`.
    pub witness: IsoWitness,
}

#[derive(Debug, Clone)]
pub enum ImageDecision {
    Yes(Box<ImageWitness>),
    /// The spectrum has odd size, so it cannot be `Y × 2̲`.
    OddSpectrum(usize),
    /// No half-size down-set of the spectrum admits a matching.
    NoFactorization(usize),
}

impl ImageDecision {
    pub fn witness(&self) -> Option<&ImageWitness> {
        match self {
            ImageDecision::Yes(w) => Some(w),
            _ => None,
        }
    }
}

pub fn in_image_of_phi(l: &DistLattice, limits: &Limits) -> Result<ImageDecision> {
    let (spectrum, dual, unit) = unit_lattice(l, limits)?;
    let x = &spectrum.order;
    if x.size() % 2 == 1 {
        return Ok(ImageDecision::OddSpectrum(x.size()));
    }
    let Some(factor) = factor_by_two(x, limits)? else {
        return Ok(ImageDecision::NoFactorization(x.size()));
    };
    let lemma = lemma51_iso(&factor.factor, limits)?;
    let alpha = &factor.assembled;

    let mut forward = Vec::with_capacity(lemma.phi.size());
    for p in 0..lemma.phi.size() {
        let c = lemma.product_downsets.sets[lemma.witness.forward[p]];
        let image = bits::iter(c).fold(0u64, |m, q| m | 1 << alpha.forward[q]);
        let d = dual
            .index_of(image)
            .ok_or_else(|| Error::Internal("image of a down-set under Y × 2 ≅ 𝒳(L) is not a down-set".into()))?;
        forward.push(unit.backward[d]);
    }
    let witness = IsoWitness::from_forward(forward).map_err(|e| Error::Internal(format!("Φ(K) → L: {e}")))?;
    witness
        .verify(lemma.phi.order(), l.order())
        .map_err(|e| Error::Internal(format!("Φ(K) → L: {e}")))?;
    Ok(ImageDecision::Yes(Box::new(ImageWitness {
        k: lemma.downsets.lattice,
        phi_k: lemma.phi,
        pairs: lemma.pairs,
        factor,
        witness,
    })))
}
