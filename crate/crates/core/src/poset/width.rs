use super::Poset;

/// Size of a largest antichain.
///
/// By Dilworth's theorem this equals the minimum number of chains covering
/// `p`, which is `|P|` minus a maximum matching in the bipartite graph with an
/// edge `i -> j` for every `i < j`.
pub fn width(p: &Poset) -> usize {
    let n = p.size();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| p.lt(i, j)).collect()).collect();
    let mut matched_right: Vec<Option<usize>> = vec![None; n];
    let mut matching = 0;
    for left in 0..n {
        let mut seen = vec![false; n];
        if augment(left, &adj, &mut seen, &mut matched_right) {
            matching += 1;
        }
    }
    n - matching
}

fn augment(left: usize, adj: &[Vec<usize>], seen: &mut [bool], matched_right: &mut [Option<usize>]) -> bool {
    for &right in &adj[left] {
        if seen[right] {
            continue;
        }
        seen[right] = true;
        let free = match matched_right[right] {
            None => true,
            Some(other) => augment(other, adj, seen, matched_right),
        };
        if free {
            matched_right[right] = Some(left);
            return true;
        }
    }
    false
}
