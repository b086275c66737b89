//! Cross-checks against slow but obviously correct computations.

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edgeposet::figures::{fig1, fig2};
use edgeposet::partitions::{box_group, partitions_in_box};
use edgeposet::peck::{lefschetz_matrix, lefschetz_ranks};
use edgeposet::random::random_graded_poset;
use edgeposet::{
    brute_force_antichain_union, edge_poset, h_poset, max_k_antichain_union, p_count, pak_sequence_check,
    ExactMatrix, GradedPoset,
};

/// Gaussian elimination over the rationals.
fn rational_rank(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| BigRational::from_integer(m.get(r, c).clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = BigRational::one() / a[rank][col].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone() * inv.clone();
                for c in col..m.cols() {
                    let sub = a[rank][c].clone() * f.clone();
                    a[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_matrix(rng: &mut ChaCha8Rng) -> ExactMatrix {
    let rows = rng.gen_range(0..8);
    let cols = rng.gen_range(0..8);
    if rng.gen_bool(0.5) && rows > 0 && cols > 0 {
        // A product through a thin middle has deficient rank.
        let k = rng.gen_range(1..=rows.min(cols));
        let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..k).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        let b: Vec<Vec<i64>> = (0..k).map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        return ExactMatrix::from_rows(&a).mul(&ExactMatrix::from_rows(&b));
    }
    let mut m = ExactMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rng.gen_range(-3i64..=3).into());
        }
    }
    m
}

#[test]
fn bareiss_matches_rational_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let m = random_matrix(&mut rng);
        assert_eq!(m.rank(), rational_rank(&m));
    }
}

#[test]
fn lefschetz_ranks_match_rational_elimination() {
    let mut posets = vec![fig1(), fig2(), edge_poset(&fig2()).poset];
    for n in 1..=5 {
        let b = GradedPoset::boolean_algebra(n).unwrap();
        posets.push(edge_poset(&b).poset);
        posets.push(h_poset(&b).poset);
        posets.push(b);
    }
    for p in posets {
        let top = p.max_rank().unwrap();
        let ranks = lefschetz_ranks(&p);
        for (i, &r) in ranks.iter().enumerate() {
            assert_eq!(r, rational_rank(&lefschetz_matrix(&p, i, top - i)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn flow_matches_brute_force(len in 1usize..=11, top in 0usize..5, density in 0.05f64..0.95, seed in any::<u64>()) {
        let p = random_graded_poset(&mut ChaCha8Rng::seed_from_u64(seed), len, top, density);
        for k in 1..=len + 1 {
            prop_assert_eq!(max_k_antichain_union(&p, k), brute_force_antichain_union(&p, k));
        }
    }
}

/// `p_k(l, m, r)` by walking every `l`-tuple of row lengths in `0..=m`.
fn p_brute(k: usize, l: usize, m: usize, r: usize) -> u128 {
    fn binom(n: usize, r: usize) -> u128 {
        if r > n {
            return 0;
        }
        (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    let mut total = 0;
    let mut rows = vec![0usize; l];
    loop {
        if rows.windows(2).all(|w| w[0] >= w[1]) && rows.iter().sum::<usize>() == k {
            let mut distinct: Vec<usize> = rows.iter().copied().filter(|&x| x > 0).collect();
            distinct.dedup();
            total += binom(distinct.len(), r);
        }
        let Some(i) = rows.iter().position(|&x| x < m) else {
            break;
        };
        rows[i] += 1;
        for x in &mut rows[..i] {
            *x = 0;
        }
    }
    total
}

#[test]
fn partition_counts_match_brute_force() {
    for l in 1..=4 {
        for m in 1..=4 {
            let mut all = 0;
            for k in 0..=l * m {
                all += partitions_in_box(k, l, m).len();
                for r in 0..=3 {
                    assert_eq!(p_count(k, l, m, r), p_brute(k, l, m, r), "k={k} l={l} m={m} r={r}");
                }
            }
            // Lattice paths in an l x m rectangle.
            let paths = (0..l).fold(1usize, |acc, i| acc * (l + m - i) / (i + 1));
            assert_eq!(all, paths);
        }
    }
}

#[test]
fn pak_sequences() {
    assert_eq!(pak_sequence_check(2, 2, 1).sequence, vec![1, 2, 2, 1]);
    assert_eq!(pak_sequence_check(3, 3, 1).sequence, vec![1, 2, 4, 5, 6, 5, 4, 2, 1]);
    let s = pak_sequence_check(4, 5, 2);
    assert!(s.symmetric && s.unimodal);
    // (2) and (1,1) have one part size each; so does the full box.
    assert_eq!(s.sequence.first(), Some(&0));
    assert_eq!(s.sequence.last(), Some(&0));
    assert_eq!(s.sequence[1], 1);
}

#[test]
fn box_groups() {
    assert_eq!(box_group(2, 3).unwrap().order(), 72);
    assert_eq!(box_group(3, 2).unwrap().order(), 48);
}
