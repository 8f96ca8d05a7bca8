//! Validated finite bounded distributive lattices and (0,1)-homomorphisms.

use crate::error::{Bound, Error, HomViolation, Result};
use crate::limits::{check_cap, Limits};
use crate::poset::Poset;

/// A finite bounded distributive lattice with `0 != 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistLattice {
    order: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl DistLattice {
    /// Computes meet and join tables from the order and validates boundedness,
    /// the lattice property and distributivity (full triple loop).
    pub fn from_poset(order: Poset) -> Result<DistLattice> {
        let n = order.size();
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| order.leq(b, x)))
            .ok_or(Error::Unbounded(Bound::Bottom))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| order.leq(x, t)))
            .ok_or(Error::Unbounded(Bound::Top))?;
        if bottom == top {
            return Err(Error::DegenerateBounds);
        }
        let below: Vec<usize> = (0..n).map(|i| (0..n).filter(|&j| order.leq(j, i)).count()).collect();

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m =
                    greatest_lower_bound(&order, &below, a, b).ok_or(Error::NotALattice { a, b, missing: "meet" })?;
                let j = least_upper_bound(&order, &below, a, b).ok_or(Error::NotALattice { a, b, missing: "join" })?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        let lattice = DistLattice {
            order,
            meet,
            join,
            bottom,
            top,
        };
        if let Some((a, b, c)) = lattice.distributivity_witness() {
            return Err(Error::NotDistributive(a, b, c));
        }
        Ok(lattice)
    }

    fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                let ab = self.meet(a, b);
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(ab, self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn chain(n: usize) -> Result<DistLattice> {
        DistLattice::from_poset(Poset::chain(n))
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, a: usize) -> &str {
        self.order.label(a)
    }

    /// Elements `j != 0` such that `j = a ∨ b` forces `j ∈ {a, b}`.
    pub fn join_irreducible_elements(&self) -> Vec<usize> {
        let n = self.size();
        (0..n)
            .filter(|&j| j != self.bottom)
            .filter(|&j| (0..n).all(|a| (0..n).all(|b| self.join(a, b) != j || a == j || b == j)))
            .collect()
    }

    /// The join-irreducibles as an induced subposet.
    pub fn join_irreducibles(&self) -> Poset {
        self.order.induced(&self.join_irreducible_elements())
    }
}

fn greatest_lower_bound(order: &Poset, below: &[usize], a: usize, b: usize) -> Option<usize> {
    let n = order.size();
    let lower = (0..n).filter(|&x| order.leq(x, a) && order.leq(x, b));
    let candidate = lower.clone().max_by_key(|&x| (below[x], std::cmp::Reverse(x)))?;
    lower.clone().all(|x| order.leq(x, candidate)).then_some(candidate)
}

fn least_upper_bound(order: &Poset, below: &[usize], a: usize, b: usize) -> Option<usize> {
    let n = order.size();
    let upper = (0..n).filter(|&x| order.leq(a, x) && order.leq(b, x));
    let candidate = upper.clone().min_by_key(|&x| (below[x], x))?;
    upper.clone().all(|x| order.leq(candidate, x)).then_some(candidate)
}

/// A validated (0,1)-lattice homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom {
    source: DistLattice,
    target: DistLattice,
    map: Vec<usize>,
}

impl LatticeHom {
    pub fn new(source: DistLattice, target: DistLattice, map: Vec<usize>) -> Result<LatticeHom> {
        if let Some(v) = hom_violation(&source, &target, &map) {
            return Err(Error::NotHomomorphism(v));
        }
        Ok(LatticeHom { source, target, map })
    }

    pub fn identity(l: &DistLattice) -> LatticeHom {
        LatticeHom {
            source: l.clone(),
            target: l.clone(),
            map: (0..l.size()).collect(),
        }
    }

    pub fn source(&self) -> &DistLattice {
        &self.source
    }

    pub fn target(&self) -> &DistLattice {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`. The target of `self` must equal the source of `next`.
    pub fn then(&self, next: &LatticeHom) -> Result<LatticeHom> {
        if self.target != next.source {
            return Err(Error::Internal(
                "composing homomorphisms with mismatched lattices".into(),
            ));
        }
        LatticeHom::new(
            self.source.clone(),
            next.target.clone(),
            self.map.iter().map(|&a| next.map[a]).collect(),
        )
    }
}

fn hom_violation(l: &DistLattice, k: &DistLattice, map: &[usize]) -> Option<HomViolation> {
    let n = l.size();
    if map.len() != n {
        return Some(HomViolation::WrongLength {
            expected: n,
            actual: map.len(),
        });
    }
    if let Some((element, &image)) = map.iter().enumerate().find(|(_, &m)| m >= k.size()) {
        return Some(HomViolation::OutOfRange { element, image });
    }
    if map[l.bottom()] != k.bottom() {
        return Some(HomViolation::Bound(Bound::Bottom));
    }
    if map[l.top()] != k.top() {
        return Some(HomViolation::Bound(Bound::Top));
    }
    for a in 0..n {
        for b in 0..n {
            if map[l.meet(a, b)] != k.meet(map[a], map[b]) {
                return Some(HomViolation::Meet { a, b });
            }
            if map[l.join(a, b)] != k.join(map[a], map[b]) {
                return Some(HomViolation::Join { a, b });
            }
        }
    }
    None
}

/// Every (0,1)-homomorphism `l -> k`, in lexicographic order of the map.
pub fn enumerate_homs(l: &DistLattice, k: &DistLattice, limits: &Limits) -> Result<Vec<LatticeHom>> {
    check_cap("homomorphism source size", limits.max_hom_size, l.size())?;
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; l.size()];
    extend_hom(l, k, 0, &mut map, &mut out);
    Ok(out)
}

fn extend_hom(l: &DistLattice, k: &DistLattice, a: usize, map: &mut [usize], out: &mut Vec<LatticeHom>) {
    let n = l.size();
    if a == n {
        if hom_violation(l, k, map).is_none() {
            out.push(LatticeHom {
                source: l.clone(),
                target: k.clone(),
                map: map.to_vec(),
            });
        }
        return;
    }
    let forced = if a == l.bottom() {
        Some(k.bottom())
    } else if a == l.top() {
        Some(k.top())
    } else {
        None
    };
    for image in 0..k.size() {
        if forced.is_some_and(|f| f != image) {
            continue;
        }
        map[a] = image;
        let consistent = (0..=a).all(|b| {
            let (m, j) = (l.meet(a, b), l.join(a, b));
            (!l.leq(a, b) || k.leq(map[a], map[b]))
                && (!l.leq(b, a) || k.leq(map[b], map[a]))
                && (m > a || map[m] == usize::MAX || map[m] == k.meet(map[a], map[b]))
                && (j > a || map[j] == usize::MAX || map[j] == k.join(map[a], map[b]))
        });
        if consistent {
            extend_hom(l, k, a + 1, map, out);
        }
    }
    map[a] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> Poset {
        // 0 bottom, 1..=3 atoms, 4 top
        Poset::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    fn n5() -> Poset {
        Poset::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn chain_lattice_operations() {
        let c = DistLattice::chain(4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(c.meet(a, b), a.min(b));
                assert_eq!(c.join(a, b), a.max(b));
            }
        }
        assert_eq!((c.bottom(), c.top()), (0, 3));
    }

    #[test]
    fn rejections() {
        let e = DistLattice::from_poset(Poset::antichain(2)).unwrap_err();
        assert!(e.is_not_a_lattice());
        assert_eq!(
            DistLattice::from_poset(Poset::singleton()),
            Err(Error::DegenerateBounds)
        );
        assert!(DistLattice::from_poset(Poset::antichain(0))
            .unwrap_err()
            .is_not_a_lattice());
        // bounded but two incomparable upper bounds with no least one
        let bowtie = Poset::new(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]).unwrap();
        assert!(matches!(
            DistLattice::from_poset(bowtie),
            Err(Error::NotALattice {
                a: 1,
                b: 2,
                missing: "join"
            })
        ));
    }

    #[test]
    fn m3_and_n5_are_not_distributive() {
        match DistLattice::from_poset(m3()) {
            Err(Error::NotDistributive(a, b, c)) => {
                // the first witness in loop order is a triple of atoms
                assert_eq!((a, b, c), (1, 2, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(DistLattice::from_poset(n5()), Err(Error::NotDistributive(..))));
    }

    #[test]
    fn homomorphism_validation() {
        let c3 = DistLattice::chain(3).unwrap();
        let c2 = DistLattice::chain(2).unwrap();
        LatticeHom::new(c3.clone(), c3.clone(), vec![0, 1, 2]).unwrap();
        LatticeHom::new(c3.clone(), c2.clone(), vec![0, 1, 1]).unwrap();
        assert_eq!(
            LatticeHom::new(c2.clone(), c2.clone(), vec![1, 0]),
            Err(Error::NotHomomorphism(HomViolation::Bound(Bound::Bottom)))
        );
        let b4 = DistLattice::from_poset(Poset::cube(2, &Limits::default()).unwrap()).unwrap();
        // collapsing one atom and not the other breaks the meet of the two atoms
        assert!(LatticeHom::new(b4, c3, vec![0, 1, 2, 2]).is_err());
    }

    #[test]
    fn hom_counts_between_chains() {
        let limits = Limits::default();
        let c2 = DistLattice::chain(2).unwrap();
        let c3 = DistLattice::chain(3).unwrap();
        assert_eq!(enumerate_homs(&c2, &c2, &limits).unwrap().len(), 1);
        let down: Vec<Vec<usize>> = enumerate_homs(&c3, &c2, &limits)
            .unwrap()
            .iter()
            .map(|h| h.map().to_vec())
            .collect();
        assert_eq!(down, vec![vec![0, 0, 1], vec![0, 1, 1]]);
        assert_eq!(enumerate_homs(&c2, &c3, &limits).unwrap()[0].map(), &[0, 2]);
        let big = DistLattice::chain(7).unwrap();
        assert!(enumerate_homs(&big, &c2, &limits).is_err());
    }

    #[test]
    fn join_irreducibles_of_small_lattices() {
        let c3 = DistLattice::chain(3).unwrap();
        assert_eq!(c3.join_irreducible_elements(), vec![1, 2]);
        assert!(c3.join_irreducibles().is_chain());
        assert_eq!(DistLattice::chain(2).unwrap().join_irreducibles().size(), 1);
    }
}
