use super::Poset;
use crate::error::{Error, Result};

/// A bijection between two carriers certifying an order isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> IsoWitness {
        IsoWitness {
            forward: (0..n).collect(),
            backward: (0..n).collect(),
        }
    }

    /// Builds the witness from a forward map, computing its inverse.
    pub fn from_forward(forward: Vec<usize>) -> Result<IsoWitness> {
        let n = forward.len();
        let mut backward = vec![usize::MAX; n];
        for (i, &f) in forward.iter().enumerate() {
            if f >= n {
                return Err(Error::NotIsomorphism(format!("image {f} of {i} out of range")));
            }
            if backward[f] != usize::MAX {
                return Err(Error::NotIsomorphism(format!(
                    "elements {} and {i} share the image {f}",
                    backward[f]
                )));
            }
            backward[f] = i;
        }
        Ok(IsoWitness { forward, backward })
    }

    pub fn inverse(&self) -> IsoWitness {
        IsoWitness {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &IsoWitness) -> IsoWitness {
        IsoWitness {
            forward: self.forward.iter().map(|&i| other.forward[i]).collect(),
            backward: other.backward.iter().map(|&i| self.backward[i]).collect(),
        }
    }

    /// Checks the witness invariants against a source and target poset:
    /// mutual inverses, and `i <= j` in `p` iff `forward(i) <= forward(j)` in `q`.
    pub fn verify(&self, p: &Poset, q: &Poset) -> Result<()> {
        let n = p.size();
        if q.size() != n || self.forward.len() != n || self.backward.len() != n {
            return Err(Error::NotIsomorphism(format!(
                "size mismatch: {} elements vs {}",
                n,
                q.size()
            )));
        }
        for i in 0..n {
            let f = self.forward[i];
            if f >= n || self.backward[f] != i {
                return Err(Error::NotIsomorphism(format!("backward(forward({i})) != {i}")));
            }
            let b = self.backward[i];
            if b >= n || self.forward[b] != i {
                return Err(Error::NotIsomorphism(format!("forward(backward({i})) != {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if p.leq(i, j) != q.leq(self.forward[i], self.forward[j]) {
                    return Err(Error::NotIsomorphism(format!(
                        "order not preserved and reflected at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, p: &Poset, q: &Poset) -> bool {
        self.verify(p, q).is_ok()
    }
}

/// Per-element invariants that any isomorphism must preserve.
fn signature(p: &Poset) -> Vec<(usize, usize, usize)> {
    let n = p.size();
    let heights = p.heights();
    (0..n)
        .map(|i| {
            let below = (0..n).filter(|&j| p.leq(j, i)).count();
            let above = (0..n).filter(|&j| p.leq(i, j)).count();
            (below, above, heights[i])
        })
        .collect()
}

/// Decides `p ≅ q` by backtracking, returning the lexicographically first
/// forward map when one exists.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Option<IsoWitness> {
    let n = p.size();
    if q.size() != n || p.related_pairs() != q.related_pairs() {
        return None;
    }
    let sp = signature(p);
    let sq = signature(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| sq[j] == sp[i]).collect()).collect();

    let mut forward = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(p, q, &candidates, 0, &mut forward, &mut used) {
        IsoWitness::from_forward(forward).ok()
    } else {
        None
    }
}

fn extend(p: &Poset, q: &Poset, candidates: &[Vec<usize>], i: usize, forward: &mut [usize], used: &mut [bool]) -> bool {
    if i == forward.len() {
        return true;
    }
    for &t in &candidates[i] {
        if used[t] {
            continue;
        }
        let consistent = (0..i).all(|k| {
            let fk = forward[k];
            p.leq(i, k) == q.leq(t, fk) && p.leq(k, i) == q.leq(fk, t)
        });
        if !consistent {
            continue;
        }
        forward[i] = t;
        used[t] = true;
        if extend(p, q, candidates, i + 1, forward, used) {
            return true;
        }
        used[t] = false;
    }
    forward[i] = usize::MAX;
    false
}
