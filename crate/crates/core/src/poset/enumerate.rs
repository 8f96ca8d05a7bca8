use std::collections::BTreeMap;

use super::{down_sets, CanonicalCode, Poset};
use crate::error::Result;
use crate::limits::{check_cap, Limits};

/// One representative per isomorphism class of posets on `n` elements, each in
/// canonical form, sorted by canonical code.
///
/// Every poset on `k + 1` elements arises from one on `k` elements by adding a
/// new maximal element above some down-set, so the classes are grown level by
/// level and deduplicated by canonical code.
pub fn enumerate_posets(n: usize, limits: &Limits) -> Result<Vec<Poset>> {
    check_cap("enumeration size", limits.max_enum_size, n)?;
    let mut level: Vec<Poset> = vec![Poset::antichain(0)];
    for k in 0..n {
        let mut next: BTreeMap<CanonicalCode, Poset> = BTreeMap::new();
        let unbounded = Limits {
            max_downset_size: k,
            ..limits.clone()
        };
        for p in &level {
            for below in down_sets(p, &unbounded)? {
                let grown = Poset::from_fn(k + 1, (0..=k).map(|i| i.to_string()).collect(), |i, j| {
                    if j == k {
                        i == k || below >> i & 1 == 1
                    } else {
                        i != k && p.leq(i, j)
                    }
                });
                let (code, perm) = grown.canonical_labelling();
                next.entry(code).or_insert_with(|| {
                    grown
                        .relabel(&perm)
                        .with_labels((0..=k).map(|i| i.to_string()).collect())
                        .expect("same size")
                });
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}
