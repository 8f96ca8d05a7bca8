use std::collections::HashSet;

use super::{width, Poset};
use crate::error::Result;
use crate::limits::{check_cap, Limits};

/// Distinct critical-pair masks beyond which dominated masks are kept.
const DOMINATION_LIMIT: usize = 20_000;

/// Every linear extension of `p` as a sequence of elements, bottom first, in
/// lexicographic order.
pub fn linear_extensions(p: &Poset, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_cap("dimension carrier size", limits.max_dim_size, p.size())?;
    let mut out = Vec::new();
    for_each_extension(p, &mut |ext| out.push(ext.to_vec()));
    Ok(out)
}

fn for_each_extension(p: &Poset, visit: &mut impl FnMut(&[usize])) {
    let n = p.size();
    let mut missing_below: Vec<usize> = (0..n).map(|i| (0..n).filter(|&j| p.lt(j, i)).count()).collect();
    let mut placed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    walk(p, &mut missing_below, &mut placed, &mut seq, visit);
}

fn walk(
    p: &Poset,
    missing_below: &mut [usize],
    placed: &mut [bool],
    seq: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let n = p.size();
    if seq.len() == n {
        visit(seq);
        return;
    }
    for e in 0..n {
        if placed[e] || missing_below[e] != 0 {
            continue;
        }
        placed[e] = true;
        seq.push(e);
        for (j, m) in missing_below.iter_mut().enumerate() {
            if p.lt(e, j) {
                *m -= 1;
            }
        }
        walk(p, missing_below, placed, seq, visit);
        for (j, m) in missing_below.iter_mut().enumerate() {
            if p.lt(e, j) {
                *m += 1;
            }
        }
        seq.pop();
        placed[e] = false;
    }
}

/// Critical pairs `(a, b)`: `a ∥ b`, everything below `a` is below `b` and
/// everything above `b` is above `a`. A family of linear extensions realizes
/// `p` iff each critical pair is reversed (`b` before `a`) by some member.
fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || p.comparable(a, b) {
                continue;
            }
            let down = (0..n).all(|x| !p.lt(x, a) || p.lt(x, b));
            let up = (0..n).all(|y| !p.lt(b, y) || p.lt(a, y));
            if down && up {
                out.push((a, b));
            }
        }
    }
    out
}

/// Topological sort of `p` extended by the constraints `x before y`; `None`
/// if they close a cycle. Ties go to the smallest index.
fn extension_with(p: &Poset, before: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = p.size();
    let mut succ: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| p.lt(i, j)).collect()).collect();
    for &(x, y) in before {
        succ[x].push(y);
    }
    let mut indeg = vec![0usize; n];
    for s in &succ {
        for &j in s {
            indeg[j] += 1;
        }
    }
    let mut out = Vec::with_capacity(n);
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    while let Some(i) = ready.pop_first() {
        out.push(i);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.insert(j);
            }
        }
    }
    (out.len() == n).then_some(out)
}

struct RealizerSearch<'a> {
    p: &'a Poset,
    /// `needs[k] = (x, y)`: some extension must put `x` before `y`.
    needs: Vec<(usize, usize)>,
    masks: Vec<u128>,
    all: u128,
}

impl RealizerSearch<'_> {
    fn pending(&self, covered: u128) -> Vec<(usize, usize)> {
        (0..self.needs.len())
            .filter(|&k| covered >> k & 1 == 0)
            .map(|k| self.needs[k])
            .collect()
    }

    fn find(&self, covered: u128, slots: usize, chosen: &mut Vec<u128>) -> Option<Vec<u128>> {
        let uncovered = self.all & !covered;
        if uncovered == 0 {
            return Some(chosen.clone());
        }
        match slots {
            0 => None,
            1 => extension_with(self.p, &self.pending(covered)).map(|_| {
                let mut done = chosen.clone();
                done.push(uncovered);
                done
            }),
            _ => {
                let first = uncovered.trailing_zeros();
                for &m in &self.masks {
                    if m >> first & 1 == 0 {
                        continue;
                    }
                    chosen.push(m);
                    let found = self.find(covered | m, slots - 1, chosen);
                    chosen.pop();
                    if found.is_some() {
                        return found;
                    }
                }
                None
            }
        }
    }
}

/// A smallest family of linear extensions whose intersection is the order of `p`.
///
/// All linear extensions are enumerated and reduced to the critical pairs they
/// reverse; then `k = 1, 2, ...` extensions are chosen by backtracking, always
/// branching on the first critical pair no chosen extension reverses yet.
pub fn realizer(p: &Poset, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_cap("dimension carrier size", limits.max_dim_size, p.size())?;
    let n = p.size();
    if n == 0 {
        return Ok(Vec::new());
    }
    let needs: Vec<(usize, usize)> = critical_pairs(p).into_iter().map(|(a, b)| (b, a)).collect();
    if needs.is_empty() {
        return Ok(vec![extension_with(p, &[]).expect("a poset has a linear extension")]);
    }
    check_cap("critical pairs", 128, needs.len())?;

    let mut distinct = HashSet::new();
    for_each_extension(p, &mut |ext| {
        let mut pos = vec![0usize; n];
        for (k, &e) in ext.iter().enumerate() {
            pos[e] = k;
        }
        let mask = needs
            .iter()
            .enumerate()
            .filter(|(_, &(x, y))| pos[x] < pos[y])
            .fold(0u128, |m, (k, _)| m | 1 << k);
        distinct.insert(mask);
    });
    let mut masks: Vec<u128> = distinct.into_iter().collect();
    masks.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    if masks.len() <= DOMINATION_LIMIT {
        let mut kept: Vec<u128> = Vec::new();
        for m in masks {
            if !kept.iter().any(|&k| k & m == m) {
                kept.push(m);
            }
        }
        masks = kept;
    }

    let search = RealizerSearch {
        p,
        all: if needs.len() == 128 {
            u128::MAX
        } else {
            (1u128 << needs.len()) - 1
        },
        needs,
        masks,
    };
    // dimension never exceeds width
    let upper = width(p).max(2);
    for k in 2..=upper {
        if let Some(chosen) = search.find(0, k, &mut Vec::new()) {
            return Ok(chosen
                .into_iter()
                .map(|m| {
                    let before: Vec<(usize, usize)> = (0..search.needs.len())
                        .filter(|&i| m >> i & 1 == 1)
                        .map(|i| search.needs[i])
                        .collect();
                    extension_with(p, &before).expect("mask comes from an extension")
                })
                .collect());
        }
    }
    Err(crate::Error::Internal(format!(
        "no realizer of size <= {upper} although dimension is bounded by width"
    )))
}

/// Least number of linear extensions intersecting to the order of `p`.
pub fn order_dimension(p: &Poset, limits: &Limits) -> Result<usize> {
    realizer(p, limits).map(|r| r.len())
}
