//! Finite posets stored as a fully closed relation matrix.
//!
//! A finite Priestley space carries the discrete topology, so every subset is
//! clopen and a plain [`Poset`] is all that is needed to represent one.

mod canonical;
mod dimension;
mod downsets;
mod enumerate;
mod iso;
mod width;

pub use canonical::CanonicalCode;
pub use dimension::{linear_extensions, order_dimension, realizer};
pub use downsets::down_sets;
pub use enumerate::enumerate_posets;
pub use iso::{is_isomorphic, IsoWitness};
pub use width::width;

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{check_cap, Limits};

/// A finite partially ordered set on the indices `0..size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    labels: Vec<String>,
    /// Row-major `size × size`; `leq[i * size + j]` means `i <= j`.
    leq: Vec<bool>,
}

/// The standard families used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Chain(usize),
    Antichain(usize),
    /// Product of `n` copies of the two-element chain.
    Cube(usize),
}

fn default_labels(size: usize) -> Vec<String> {
    (0..size).map(|i| i.to_string()).collect()
}

impl Poset {
    /// Builds the reflexive-transitive closure of `pairs` on `0..size`.
    ///
    /// Each pair `(i, j)` asserts `i <= j`. Fails if the closure has a cycle.
    pub fn new(size: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
            }
            leq[i * size + j] = true;
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if !leq[i * size + k] {
                    continue;
                }
                for j in 0..size {
                    if leq[k * size + j] {
                        leq[i * size + j] = true;
                    }
                }
            }
        }
        for i in 0..size {
            for j in i + 1..size {
                if leq[i * size + j] && leq[j * size + i] {
                    return Err(Error::AntisymmetryViolation(i, j));
                }
            }
        }
        Ok(Poset {
            size,
            labels: default_labels(size),
            leq,
        })
    }

    /// Accepts an explicit relation matrix and checks all three order axioms.
    pub fn from_matrix(size: usize, leq: Vec<bool>) -> Result<Poset> {
        if leq.len() != size * size {
            return Err(Error::MatrixShape {
                expected: size * size,
                actual: leq.len(),
            });
        }
        let p = Poset {
            size,
            labels: default_labels(size),
            leq,
        };
        p.check_axioms()?;
        Ok(p)
    }

    /// Trusted constructor for relations that are closed by construction.
    pub(crate) fn from_closed(size: usize, labels: Vec<String>, leq: Vec<bool>) -> Poset {
        debug_assert_eq!(leq.len(), size * size);
        debug_assert_eq!(labels.len(), size);
        let p = Poset { size, labels, leq };
        debug_assert!(p.check_axioms().is_ok());
        p
    }

    pub(crate) fn from_fn(size: usize, labels: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Poset {
        let mut leq = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                leq.push(f(i, j));
            }
        }
        Poset::from_closed(size, labels, leq)
    }

    pub fn singleton() -> Poset {
        Poset::chain(1)
    }

    pub fn chain(n: usize) -> Poset {
        Poset::from_fn(n, default_labels(n), |i, j| i <= j)
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_fn(n, default_labels(n), |i, j| i == j)
    }

    /// The `n`-fold power of the two-element chain, indexed so that the last
    /// coordinate is the least significant bit (the same indexing as
    /// iterated [`Poset::product`]).
    pub fn cube(n: usize, limits: &Limits) -> Result<Poset> {
        let size = 1usize
            .checked_shl(n as u32)
            .filter(|&s| n < usize::BITS as usize && s > 0)
            .ok_or(Error::CapExceeded {
                what: "cube elements",
                cap: limits.max_cube_size,
                actual: usize::MAX,
            })?;
        check_cap("cube elements", limits.max_cube_size, size)?;
        let labels = (0..size)
            .map(|i| {
                (0..n)
                    .map(|k| if i >> (n - 1 - k) & 1 == 1 { '1' } else { '0' })
                    .collect::<String>()
            })
            .map(|s| if s.is_empty() { "()".to_string() } else { s })
            .collect();
        Ok(Poset::from_fn(size, labels, |i, j| i & j == i))
    }

    pub fn standard(kind: StandardKind, limits: &Limits) -> Result<Poset> {
        match kind {
            StandardKind::Chain(n) => {
                check_cap("poset size", limits.max_size, n)?;
                Ok(Poset::chain(n))
            }
            StandardKind::Antichain(n) => {
                check_cap("poset size", limits.max_size, n)?;
                Ok(Poset::antichain(n))
            }
            StandardKind::Cube(n) => Poset::cube(n, limits),
        }
    }

    /// Replaces the display labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.size {
            return Err(Error::MatrixShape {
                expected: self.size,
                actual: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    /// Number of pairs `(i, j)` with `i <= j`, diagonal included.
    pub fn related_pairs(&self) -> usize {
        self.leq.iter().filter(|&&b| b).count()
    }

    /// All pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(i, j)| !(0..self.size).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    /// Length of the longest chain ending at each element, minimal elements at 0.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&i| (0..self.size).filter(|&j| self.leq(j, i)).count());
        let mut h = vec![0; self.size];
        for &i in &order {
            h[i] = (0..self.size)
                .filter(|&j| self.lt(j, i))
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| self.comparable(i, j)))
    }

    pub fn is_antichain(&self) -> bool {
        self.strict_pairs().is_empty()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&i| !(0..self.size).any(|j| self.lt(i, j)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&i| !(0..self.size).any(|j| self.lt(j, i)))
            .collect()
    }

    /// Verifies reflexivity, antisymmetry and transitivity by direct loops.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(Error::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(Error::AntisymmetryViolation(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(Error::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Coordinatewise product; `(p, q)` sits at index `p * |Q| + q`.
    pub fn product(&self, other: &Poset, limits: &Limits) -> Result<Poset> {
        let m = other.size;
        let size = self.size * m;
        check_cap("product size", limits.max_size, size)?;
        let mut labels = Vec::with_capacity(size);
        for p in 0..self.size {
            for q in 0..m {
                labels.push(format!("({},{})", self.label(p), other.label(q)));
            }
        }
        Ok(Poset::from_fn(size, labels, |a, b| {
            self.leq(a / m, b / m) && other.leq(a % m, b % m)
        }))
    }

    /// `self` on `0..|P|` followed by `other`, with no relations across.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let n = self.size;
        let size = n + other.size;
        let labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        Poset::from_fn(size, labels, |i, j| match (i < n, j < n) {
            (true, true) => self.leq(i, j),
            (false, false) => other.leq(i - n, j - n),
            _ => false,
        })
    }

    /// The induced subposet on `elements`, keeping their order of appearance.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        Poset::from_fn(elements.len(), labels, |i, j| self.leq(elements[i], elements[j]))
    }

    /// The same order transported along `perm`: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let n = self.size;
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let labels = inv.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::from_fn(n, labels, |a, b| self.leq(inv[a], inv[b]))
    }

    /// True iff the comparability graph is connected.
    pub fn is_connected(&self) -> Result<bool> {
        if self.size == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut seen = vec![false; self.size];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && self.comparable(i, j) {
                    *s = true;
                    stack.push(j);
                }
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size)
            .field("covers", &self.covers())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closes_generating_pairs() {
        let p = Poset::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p.relation(), &[true, true, false, true]);
        let s = Poset::new(1, &[]).unwrap();
        assert_eq!(s.relation(), &[true]);
        let c = Poset::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(c.leq(0, 2));
    }

    #[test]
    fn rejects_cycles_and_bad_indices() {
        assert!(matches!(
            Poset::new(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::AntisymmetryViolation(_, _))
        ));
        assert_eq!(
            Poset::new(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
    }

    #[test]
    fn from_matrix_checks_axioms() {
        assert_eq!(
            Poset::from_matrix(2, vec![false, false, false, true]),
            Err(Error::NotReflexive(0))
        );
        let not_transitive = vec![
            true, true, false, //
            false, true, true, //
            false, false, true,
        ];
        assert_eq!(
            Poset::from_matrix(3, not_transitive),
            Err(Error::NotTransitive(0, 1, 2))
        );
    }

    #[test]
    fn standard_pair_counts() {
        let limits = Limits::default();
        assert_eq!(Poset::chain(3).related_pairs(), 6);
        assert_eq!(Poset::antichain(4).related_pairs(), 4);
        let cube2 = Poset::cube(2, &limits).unwrap();
        assert_eq!(cube2.size(), 4);
        assert_eq!(cube2.related_pairs(), 9);
        assert_eq!(
            Poset::cube(0, &limits).unwrap().relation(),
            Poset::singleton().relation()
        );
        assert!(matches!(Poset::cube(5, &limits), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn product_of_chains_is_the_cube() {
        let limits = Limits::default();
        let c2 = Poset::chain(2);
        let sq = c2.product(&c2, &limits).unwrap();
        assert_eq!(sq.relation(), Poset::cube(2, &limits).unwrap().relation());
        let cube3 = sq.product(&c2, &limits).unwrap();
        assert_eq!(cube3.relation(), Poset::cube(3, &limits).unwrap().relation());
        let tight = Limits {
            max_size: 3,
            ..Limits::default()
        };
        assert!(c2.product(&c2, &tight).is_err());
    }

    #[test]
    fn disjoint_unions() {
        let s = Poset::singleton();
        assert_eq!(s.disjoint_union(&s).relation(), Poset::antichain(2).relation());
        let two_chains = Poset::chain(2).disjoint_union(&Poset::chain(2));
        assert_eq!(two_chains.size(), 4);
        assert!(!two_chains.is_connected().unwrap());
        let a5 = Poset::antichain(2).disjoint_union(&Poset::antichain(3));
        assert_eq!(a5.relation(), Poset::antichain(5).relation());
    }

    #[test]
    fn connectivity() {
        assert!(Poset::chain(5).is_connected().unwrap());
        assert!(!Poset::antichain(2).is_connected().unwrap());
        assert_eq!(Poset::antichain(0).is_connected(), Err(Error::EmptyPoset));
        // a "V" is connected although its two tops are incomparable
        let v = Poset::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(v.is_connected().unwrap());
    }

    #[test]
    fn covers_skip_implied_pairs() {
        assert_eq!(Poset::chain(3).covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(Poset::cube(2, &Limits::default()).unwrap().covers().len(), 4);
        assert!(Poset::antichain(2).covers().is_empty());
    }

    #[test]
    fn heights_of_cube() {
        let cube = Poset::cube(3, &Limits::default()).unwrap();
        let h = cube.heights();
        for (i, &hi) in h.iter().enumerate() {
            assert_eq!(hi, i.count_ones() as usize);
        }
    }
}
