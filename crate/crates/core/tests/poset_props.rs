mod common;

use common::*;
use priestley::{down_sets, enumerate_posets, is_isomorphic, order_dimension, width, Limits, Poset, StandardKind};
use proptest::prelude::*;
use rand::SeedableRng;

fn all_posets(max: usize) -> Vec<Poset> {
    let limits = Limits::default();
    (0..=max).flat_map(|n| enumerate_posets(n, &limits).unwrap()).collect()
}

#[test]
fn four_element_classes_match_brute_force() {
    let limits = Limits::default();
    let ours = enumerate_posets(4, &limits).unwrap();
    let brute = brute_posets(4);
    assert_eq!(brute.len(), 16);
    assert_eq!(ours.len(), 16);
    for b in &brute {
        assert_eq!(ours.iter().filter(|p| is_isomorphic(p, b).is_some()).count(), 1);
    }
}

#[test]
fn enumeration_has_no_isomorphic_duplicates() {
    let limits = Limits::default();
    for n in 0..=5 {
        let ps = enumerate_posets(n, &limits).unwrap();
        for (i, p) in ps.iter().enumerate() {
            p.check_axioms().unwrap();
            for q in &ps[i + 1..] {
                assert!(is_isomorphic(p, q).is_none());
            }
        }
        let codes: Vec<_> = ps.iter().map(|p| p.canonical_code()).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted, "enumeration order is canonical-code order");
    }
}

#[test]
fn random_matrices_match_exactly_one_class() {
    let limits = Limits::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for n in 1..=5 {
        let classes = enumerate_posets(n, &limits).unwrap();
        for _ in 0..40 {
            let p = random_poset(&mut rng, n, 0.4);
            assert_eq!(classes.iter().filter(|c| is_isomorphic(c, &p).is_some()).count(), 1);
        }
    }
}

#[test]
fn canonical_code_is_the_brute_force_minimum() {
    for p in all_posets(5) {
        assert_eq!(p.canonical_code().bits(), brute_canonical(&p).as_slice());
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let p = random_poset(&mut rng, 6, 0.3);
        assert_eq!(p.canonical_code().bits(), brute_canonical(&p).as_slice());
    }
}

#[test]
fn isomorphism_agrees_with_all_bijections() {
    let limits = Limits::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    for n in 1..=6 {
        let classes = enumerate_posets(n, &limits).unwrap();
        for _ in 0..15 {
            let p = random_poset(&mut rng, n, 0.35);
            let q = random_poset(&mut rng, n, 0.35);
            for (a, b) in [
                (&p, &q),
                (
                    &p,
                    &p.relabel(&{
                        let mut v: Vec<usize> = (0..n).collect();
                        v.reverse();
                        v
                    }),
                ),
            ] {
                let ours = is_isomorphic(a, b);
                let brute = brute_iso(a, b);
                assert_eq!(ours.as_ref().map(|w| w.forward.clone()), brute);
                if let Some(w) = ours {
                    w.verify(a, b).unwrap();
                }
            }
        }
        // reflexive and symmetric on the class representatives
        for c in classes.iter().take(20) {
            assert!(is_isomorphic(c, c).is_some());
        }
    }
}

#[test]
fn isomorphism_is_symmetric_with_inverse_witness() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for _ in 0..30 {
        let p = random_poset(&mut rng, 6, 0.4);
        let mut perm: Vec<usize> = (0..6).collect();
        perm.rotate_left(2);
        let q = p.relabel(&perm);
        let w = is_isomorphic(&p, &q).unwrap();
        w.inverse().verify(&q, &p).unwrap();
        assert!(is_isomorphic(&q, &p).is_some());
    }
}

#[test]
fn cube_two_and_square_of_chain() {
    let limits = Limits::default();
    let cube = Poset::standard(StandardKind::Cube(2), &limits).unwrap();
    let sq = Poset::chain(2).product(&Poset::chain(2), &limits).unwrap();
    assert!(brute_iso(&cube, &sq).is_some());
    assert!(is_isomorphic(&cube, &sq).is_some());
}

#[test]
fn product_commutes_and_associates_up_to_isomorphism() {
    let limits = Limits::default();
    let ps = all_posets(3);
    for p in &ps {
        for q in &ps {
            let pq = p.product(q, &limits).unwrap();
            let qp = q.product(p, &limits).unwrap();
            assert!(is_isomorphic(&pq, &qp).is_some());
        }
        let single = p.product(&Poset::singleton(), &limits).unwrap();
        assert!(is_isomorphic(&single, p).is_some());
    }
    let (a, b, c) = (
        Poset::chain(2),
        Poset::new(3, &[(0, 1), (0, 2)]).unwrap(),
        Poset::antichain(2),
    );
    let left = a.product(&b, &limits).unwrap().product(&c, &limits).unwrap();
    let right = a.product(&b.product(&c, &limits).unwrap(), &limits).unwrap();
    assert!(is_isomorphic(&left, &right).is_some());
}

#[test]
fn down_set_counts_match_subset_filter() {
    let limits = Limits::default();
    let cube3 = Poset::cube(3, &limits).unwrap();
    let brute = brute_downsets(&cube3);
    assert_eq!(brute.len(), 20);
    assert_eq!(down_sets(&cube3, &limits).unwrap(), brute);
    for p in all_posets(5) {
        assert_eq!(down_sets(&p, &limits).unwrap(), brute_downsets(&p));
    }
}

#[test]
fn width_matches_brute_force() {
    let limits = Limits::default();
    for p in all_posets(6) {
        assert_eq!(width(&p), brute_width(&p));
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(13);
    for n in 7..=12 {
        for _ in 0..10 {
            let p = random_poset(&mut rng, n, 0.25);
            assert_eq!(width(&p), brute_width(&p));
        }
    }
    assert_eq!(brute_width(&Poset::cube(3, &limits).unwrap()), 3);
    let grid = Poset::chain(2).product(&Poset::chain(3), &limits).unwrap();
    assert_eq!(brute_width(&grid), 2);
}

#[test]
fn dimension_matches_exhaustive_realizers() {
    let limits = Limits::default();
    assert_eq!(brute_dimension(&Poset::cube(2, &limits).unwrap()), 2);
    for p in all_posets(5) {
        let d = order_dimension(&p, &limits).unwrap();
        assert_eq!(d, brute_dimension(&p), "{p:?}");
        assert_eq!(d == 1, p.is_chain() && p.size() > 0);
    }
}

#[test]
fn realizers_intersect_to_the_order() {
    let limits = Limits::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(17);
    for n in 6..=8 {
        for _ in 0..10 {
            let p = random_poset(&mut rng, n, 0.3);
            let r = priestley::realizer(&p, &limits).unwrap();
            let pos: Vec<Vec<usize>> = r
                .iter()
                .map(|seq| {
                    let mut pos = vec![0; n];
                    for (k, &e) in seq.iter().enumerate() {
                        pos[e] = k;
                    }
                    pos
                })
                .collect();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(pos.iter().all(|x| x[a] <= x[b]), p.leq(a, b));
                }
            }
            assert!(r.len() <= width(&p).max(1));
        }
    }
}

proptest! {
    #[test]
    fn generated_posets_satisfy_the_axioms(
        n in 1usize..9,
        raw in proptest::collection::vec((0usize..9, 0usize..9), 0..20),
    ) {
        let pairs: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        match Poset::new(n, &pairs) {
            Ok(p) => {
                prop_assert!(p.check_axioms().is_ok());
                for &(a, b) in &pairs {
                    prop_assert!(p.leq(a, b));
                }
            }
            Err(priestley::Error::AntisymmetryViolation(a, b)) => {
                // a genuine cycle through a and b exists among the pairs
                prop_assert!(a != b);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn canonical_code_ignores_labelling(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let p = random_poset(&mut rng, n, 0.4);
        let q = random_poset(&mut rng, n, 0.4);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.reverse();
        prop_assert_eq!(p.canonical_code(), p.relabel(&perm).canonical_code());
        prop_assert_eq!(p.canonical_code() == q.canonical_code(), is_isomorphic(&p, &q).is_some());
    }
}
