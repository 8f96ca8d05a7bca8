//! Brute-force oracles. Nothing here calls the search routines it is used to
//! check; only `Poset::leq` and the lattice tables are shared.
#![allow(dead_code)]

use priestley::{DistLattice, Limits, Poset};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// First bijection in lexicographic order that preserves and reflects order.
pub fn brute_iso(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.size() != q.size() {
        return None;
    }
    let n = p.size();
    permutations(n)
        .into_iter()
        .find(|f| (0..n).all(|i| (0..n).all(|j| p.leq(i, j) == q.leq(f[i], f[j]))))
}

/// Lexicographically least row-major relation matrix over all relabellings.
pub fn brute_canonical(p: &Poset) -> Vec<bool> {
    let n = p.size();
    permutations(n)
        .into_iter()
        .map(|perm| {
            // perm[new] = old
            let mut code = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    code.push(p.leq(perm[a], perm[b]));
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

fn has(m: u64, i: usize) -> bool {
    m >> i & 1 == 1
}

pub fn brute_downsets(p: &Poset) -> Vec<u64> {
    let n = p.size();
    subsets(n)
        .filter(|&m| (0..n).all(|a| !has(m, a) || (0..n).all(|x| !p.leq(x, a) || has(m, x))))
        .collect()
}

pub fn brute_width(p: &Poset) -> usize {
    let n = p.size();
    subsets(n)
        .filter(|&m| (0..n).all(|a| (0..n).all(|b| a == b || !has(m, a) || !has(m, b) || !p.leq(a, b))))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_linear_extensions(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.size();
    permutations(n)
        .into_iter()
        .filter(|seq| {
            let mut pos = vec![0; n];
            for (k, &e) in seq.iter().enumerate() {
                pos[e] = k;
            }
            (0..n).all(|a| (0..n).all(|b| !p.lt(a, b) || pos[a] < pos[b]))
        })
        .collect()
}

/// Least `k` such that some `k` linear extensions intersect to `<=`, by
/// checking every `k`-subset of all linear extensions.
pub fn brute_dimension(p: &Poset) -> usize {
    let n = p.size();
    if n == 0 {
        return 0;
    }
    let exts: Vec<Vec<usize>> = brute_linear_extensions(p)
        .into_iter()
        .map(|seq| {
            let mut pos = vec![0; n];
            for (k, &e) in seq.iter().enumerate() {
                pos[e] = k;
            }
            pos
        })
        .collect();
    fn choose(exts: &[Vec<usize>], k: usize, start: usize, picked: &mut Vec<usize>, p: &Poset) -> bool {
        if picked.len() == k {
            let n = p.size();
            return (0..n).all(|a| {
                (0..n).all(|b| {
                    let all_before = picked.iter().all(|&e| exts[e][a] <= exts[e][b]);
                    all_before == p.leq(a, b)
                })
            });
        }
        for e in start..exts.len() {
            picked.push(e);
            if choose(exts, k, e + 1, picked, p) {
                return true;
            }
            picked.pop();
        }
        false
    }
    (1..=exts.len())
        .find(|&k| choose(&exts, k, 0, &mut Vec::new(), p))
        .expect("all extensions together realize the order")
}

/// Every poset on `n` points up to isomorphism: all strict relations filtered
/// by the axioms, deduplicated with `brute_iso`.
pub fn brute_posets(n: usize) -> Vec<Poset> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut reps: Vec<Poset> = Vec::new();
    for bits in 0u64..(1 << off.len()) {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            if has(bits, k) {
                leq[i * n + j] = true;
            }
        }
        let Ok(p) = Poset::from_matrix(n, leq) else { continue };
        if !reps.iter().any(|r| brute_iso(r, &p).is_some()) {
            reps.push(p);
        }
    }
    reps
}

/// Prime ideals straight from the definitions over all subsets of the carrier.
pub fn brute_prime_ideals(l: &DistLattice) -> Vec<u64> {
    let n = l.size();
    subsets(n)
        .filter(|&m| {
            let down = (0..n).all(|a| !has(m, a) || (0..n).all(|x| !l.leq(x, a) || has(m, x)));
            let joins = (0..n).all(|a| (0..n).all(|b| !(has(m, a) && has(m, b)) || has(m, l.join(a, b))));
            let prime = (0..n).all(|a| (0..n).all(|b| has(m, a) || has(m, b) || !has(m, l.meet(a, b))));
            m != 0 && m != (1u64 << n) - 1 && down && joins && prime
        })
        .collect()
}

/// A random poset on `n` points: each pair `i < j` related with probability `density`.
pub fn random_poset(rng: &mut impl rand::Rng, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    let p = Poset::new(n, &pairs).expect("upward pairs are acyclic");
    let mut perm: Vec<usize> = (0..n).collect();
    use rand::seq::SliceRandom;
    perm.shuffle(rng);
    p.relabel(&perm)
}

/// Lattices from posets of size `<= n` that pass validation.
pub fn lattices_up_to(n: usize, limits: &Limits) -> Vec<DistLattice> {
    (1..=n)
        .flat_map(|k| priestley::enumerate_posets(k, limits).unwrap())
        .filter_map(|p| DistLattice::from_poset(p).ok())
        .collect()
}
