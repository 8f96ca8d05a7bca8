//! Helpers for subsets of a carrier of at most 64 elements packed into `u64`.

pub(crate) fn iter(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn has(mask: u64, i: usize) -> bool {
    mask >> i & 1 == 1
}

pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Mask to list of member indices, ascending.
pub fn members(mask: u64) -> Vec<usize> {
    iter(mask).collect()
}

pub fn from_members(members: impl IntoIterator<Item = usize>) -> u64 {
    members.into_iter().fold(0, |m, i| m | 1 << i)
}
