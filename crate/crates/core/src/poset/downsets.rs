use super::Poset;
use crate::bits;
use crate::error::Result;
use crate::limits::{check_mask_cap, Limits};

impl Poset {
    /// Mask of all `j <= i`. Requires `size <= 64`.
    pub fn down_mask(&self, i: usize) -> u64 {
        debug_assert!(self.size() <= 64);
        (0..self.size()).filter(|&j| self.leq(j, i)).fold(0, |m, j| m | 1 << j)
    }

    /// Mask of all `j >= i`. Requires `size <= 64`.
    pub fn up_mask(&self, i: usize) -> u64 {
        debug_assert!(self.size() <= 64);
        (0..self.size()).filter(|&j| self.leq(i, j)).fold(0, |m, j| m | 1 << j)
    }

    pub fn is_down_set(&self, mask: u64) -> bool {
        bits::iter(mask).all(|i| self.down_mask(i) & !mask == 0)
    }

    pub fn is_up_set(&self, mask: u64) -> bool {
        bits::iter(mask).all(|i| self.up_mask(i) & !mask == 0)
    }
}

/// Every down-set of `p` as a bitmask, sorted by mask value.
///
/// Elements are decided bottom-up along a linear extension; an element may be
/// included only once everything strictly below it is, so every branch ends in
/// a distinct down-set.
pub fn down_sets(p: &Poset, limits: &Limits) -> Result<Vec<u64>> {
    check_mask_cap("down-set carrier size", limits.max_downset_size, p.size())?;
    let heights = p.heights();
    let mut order: Vec<usize> = (0..p.size()).collect();
    order.sort_by_key(|&i| (heights[i], i));
    let below: Vec<u64> = (0..p.size()).map(|i| p.down_mask(i) & !(1 << i)).collect();

    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((depth, mask)) = stack.pop() {
        if depth == order.len() {
            out.push(mask);
            continue;
        }
        let e = order[depth];
        stack.push((depth + 1, mask));
        if below[e] & !mask == 0 {
            stack.push((depth + 1, mask | 1 << e));
        }
    }
    out.sort_unstable();
    Ok(out)
}
