use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use edgeposet::random::random_graded_poset;
use edgeposet::{find_isomorphism, verify_isomorphism, GradedPoset};

fn poset_strategy(max_len: usize) -> impl Strategy<Value = GradedPoset> {
    (1..=max_len, 0usize..6, 0.05f64..0.9, any::<u64>()).prop_map(|(len, top, density, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_graded_poset(&mut rng, len, top, density)
    })
}

/// Reflexive transitive closure of the covers, by Floyd-Warshall.
fn closure(p: &GradedPoset) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut m = vec![vec![false; n]; n];
    for (x, row) in m.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(a, b) in p.covers() {
        m[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                for j in 0..n {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
    m
}

fn relabel(p: &GradedPoset, pi: &[usize]) -> GradedPoset {
    let mut ranks = vec![0; p.len()];
    for x in 0..p.len() {
        ranks[pi[x]] = p.rank(x);
    }
    let covers = p.covers().iter().map(|&(a, b)| (pi[a], pi[b])).collect();
    GradedPoset::new(ranks, covers).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leq_matches_closure(p in poset_strategy(64)) {
        let c = closure(&p);
        for x in 0..p.len() {
            for y in 0..p.len() {
                prop_assert_eq!(p.leq(x, y), c[x][y]);
            }
        }
    }

    #[test]
    fn dual_is_an_involution(p in poset_strategy(30)) {
        let top = p.max_rank().unwrap();
        prop_assert_eq!(p.dual_about(top).dual_about(top), p.clone());
        if p.ranks().contains(&0) {
            prop_assert_eq!(p.dual().dual(), p.clone());
        }
        let d = p.dual();
        for x in 0..p.len() {
            for y in 0..p.len() {
                prop_assert_eq!(p.leq(x, y), d.leq(y, x));
            }
        }
    }

    #[test]
    fn product_ranks_convolve(p in poset_strategy(8), q in poset_strategy(8)) {
        let a = p.rank_vector();
        let b = q.rank_vector();
        let mut want = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                want[i + j] += x * y;
            }
        }
        while want.last() == Some(&0) {
            want.pop();
        }
        let pq = p.product(&q);
        prop_assert_eq!(pq.rank_vector(), want);
        let w = q.len();
        for x in 0..pq.len() {
            for y in 0..pq.len() {
                let both = p.leq(x / w, y / w) && q.leq(x % w, y % w);
                prop_assert_eq!(pq.leq(x, y), both);
            }
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(p in poset_strategy(14), seed in any::<u64>()) {
        let mut pi: Vec<usize> = (0..p.len()).collect();
        pi.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let q = relabel(&p, &pi);
        prop_assert!(verify_isomorphism(&p, &q, &pi));
        let f = find_isomorphism(&p, &p).unwrap();
        prop_assert!(verify_isomorphism(&p, &p, &f));
        let f = find_isomorphism(&p, &q).unwrap();
        prop_assert!(verify_isomorphism(&p, &q, &f));
        let g = find_isomorphism(&q, &p).unwrap();
        prop_assert!(verify_isomorphism(&q, &p, &g));
    }
}

#[test]
fn large_posets_use_search() {
    let b = GradedPoset::boolean_algebra(13).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2000 {
        let x = rand::Rng::gen_range(&mut rng, 0..b.len());
        let y = rand::Rng::gen_range(&mut rng, 0..b.len());
        assert_eq!(b.leq(x, y), x & y == x);
        assert_eq!(b.leq(x, x | y), true);
    }
}

#[test]
fn rank_shift_breaks_isomorphism() {
    let a = GradedPoset::new(vec![0, 1], vec![(0, 1)]).unwrap();
    let b = GradedPoset::new(vec![1, 2], vec![(0, 1)]).unwrap();
    assert!(find_isomorphism(&a, &b).is_none());
}

#[test]
fn power_and_copies() {
    let b1 = GradedPoset::boolean_algebra(1).unwrap();
    assert_eq!(b1.power(4).rank_vector(), vec![1, 4, 6, 4, 1]);
    assert!(find_isomorphism(&b1.power(3), &GradedPoset::boolean_algebra(3).unwrap()).is_some());
    let c = GradedPoset::chain(3).copies(4);
    assert_eq!(c.rank_vector(), vec![4, 4, 4]);
    assert!(!c.comparable(0, 3));
    assert!(c.lt(3, 5));
}
