//! Rank symmetry, unimodality, Sperner properties, and the Peck conditions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::flow::MinCostFlow;
use crate::matrix::ExactMatrix;
use crate::poset::GradedPoset;

/// Largest poset handed to [`brute_force_antichain_union`] by default.
pub const DEFAULT_ORACLE_THRESHOLD: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub symmetric: bool,
    pub unimodal: bool,
}

pub fn profile_of(v: &[usize]) -> RankProfile {
    let symmetric = v.iter().eq(v.iter().rev());
    let peak = v
        .iter()
        .enumerate()
        .max_by_key(|&(i, &x)| (x, std::cmp::Reverse(i)))
        .map_or(0, |(i, _)| i);
    let unimodal = v[..peak].windows(2).all(|w| w[0] <= w[1])
        && v[peak..].windows(2).all(|w| w[0] >= w[1]);
    RankProfile { symmetric, unimodal }
}

pub fn rank_profile(p: &GradedPoset) -> RankProfile {
    profile_of(&p.rank_vector())
}

/// `U^(j - i)` from rank `i` to rank `j`: entry `(y, x)` counts saturated
/// chains from `x` up to `y`. Rows follow rank `j`, columns rank `i`.
pub fn lefschetz_matrix(p: &GradedPoset, i: usize, j: usize) -> ExactMatrix {
    let levels = p.rank_levels();
    let empty = Vec::new();
    let bottom = levels.get(i).unwrap_or(&empty);
    let top = levels.get(j).unwrap_or(&empty);
    let mut pos = vec![usize::MAX; p.len()];
    for (k, &y) in top.iter().enumerate() {
        pos[y] = k;
    }
    let mut m = ExactMatrix::zeros(top.len(), bottom.len());
    // Push chain counts up one rank at a time, one source column at a time.
    let mut count: Vec<BigInt> = vec![BigInt::zero(); p.len()];
    for (c, &x) in bottom.iter().enumerate() {
        let mut frontier = vec![x];
        count[x] = BigInt::one();
        for _ in i..j {
            let mut next = Vec::new();
            for &v in &frontier {
                let cv = std::mem::take(&mut count[v]);
                for &w in p.up_covers(v) {
                    if count[w].is_zero() {
                        next.push(w);
                    }
                    count[w] += &cv;
                }
            }
            frontier = next;
        }
        for &y in &frontier {
            let v = std::mem::take(&mut count[y]);
            if pos[y] != usize::MAX {
                m.set(pos[y], c, v);
            }
        }
    }
    m
}

/// Rank of `U^(n-2i)` from rank `i` to rank `n - i`, `n` the top rank.
pub fn lefschetz_power_rank(p: &GradedPoset, i: usize) -> usize {
    let n = p.max_rank().unwrap_or(0);
    assert!(2 * i < n, "need i < n/2");
    lefschetz_matrix(p, i, n - i).rank()
}

/// The ranks of `U^(n-2i)` for every `i < n/2`.
pub fn lefschetz_ranks(p: &GradedPoset) -> Vec<usize> {
    let n = p.max_rank().unwrap_or(0);
    (0..n.div_ceil(2)).map(|i| lefschetz_power_rank(p, i)).collect()
}

pub fn is_unitary_peck(p: &GradedPoset) -> bool {
    let v = p.rank_vector();
    let n = p.max_rank().unwrap_or(0);
    (0..n.div_ceil(2)).all(|i| v[i] == v[n - i] && lefschetz_power_rank(p, i) == v[i])
}

/// Maximum total size of `r` disjoint chains, for `r = 0, 1, ..` until the
/// chains cover everything.
pub fn chain_cover_sizes(p: &GradedPoset) -> Vec<usize> {
    let n = p.len();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut f = MinCostFlow::new(2 * n + 2);
    for x in 0..n {
        f.add_arc(s, x, 1, 0);
        f.add_arc(x, n + x, 1, -1);
        f.add_arc(n + x, t, 1, 0);
        for y in 0..n {
            if p.lt(x, y) {
                f.add_arc(n + x, y, 1, 0);
            }
        }
    }
    let mut sizes = vec![0];
    sizes.extend(f.successive_costs(s, t).into_iter().map(|c| (-c) as usize));
    sizes
}

/// `d_k`, the largest union of `k` antichains, for `k = 1..=kmax`.
pub fn antichain_union_profile(p: &GradedPoset, kmax: usize) -> Vec<usize> {
    let c = chain_cover_sizes(p);
    (1..=kmax)
        .map(|k| {
            let best = c
                .iter()
                .enumerate()
                .map(|(r, &cr)| cr as i64 - (r * k) as i64)
                .max()
                .unwrap_or(0);
            p.len() - best as usize
        })
        .collect()
}

pub fn max_k_antichain_union(p: &GradedPoset, k: usize) -> usize {
    assert!(k >= 1, "k starts at 1");
    antichain_union_profile(p, k)[k - 1]
}

/// `d_k` by exhaustion: the largest subset whose longest chain has at most
/// `k` elements, which is the same as a union of `k` antichains.
/// Exponential; keep to a dozen or so elements.
pub fn brute_force_antichain_union(p: &GradedPoset, k: usize) -> usize {
    let n = p.len();
    assert!(n < 26, "brute force is exponential");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| p.rank(x));
    let below: Vec<u32> = (0..n)
        .map(|y| (0..n).filter(|&x| p.lt(x, y)).fold(0u32, |m, x| m | 1 << x))
        .collect();
    let mut best = 0;
    let mut height = vec![0usize; n];
    for set in 0u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut longest = 0;
        for &y in &order {
            if set >> y & 1 == 0 {
                continue;
            }
            let mut h = 1;
            let mut m = below[y] & set;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                h = h.max(height[x] + 1);
                m &= m - 1;
            }
            height[y] = h;
            longest = longest.max(h);
        }
        if longest <= k {
            best = size;
        }
    }
    best
}

/// Sum of the `k` largest rank sizes, for `k = 1..=kmax`.
pub fn largest_rank_sums(p: &GradedPoset, kmax: usize) -> Vec<usize> {
    let mut v = p.rank_vector();
    v.sort_unstable_by(|a, b| b.cmp(a));
    (1..=kmax).map(|k| v.iter().take(k).sum()).collect()
}

pub fn is_strongly_sperner(p: &GradedPoset) -> bool {
    let kmax = p.rank_vector().len();
    antichain_union_profile(p, kmax) == largest_rank_sums(p, kmax)
}

pub fn is_peck(p: &GradedPoset) -> bool {
    peck_verdict(p).peck
}

/// Outcome of the cheapest sufficient sequence of checks: the rank profile,
/// then the Lefschetz fast path, then antichain unions. Steps that were not
/// needed are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeckVerdict {
    pub symmetric: bool,
    pub unimodal: bool,
    pub unitary_peck: Option<bool>,
    pub strongly_sperner: Option<bool>,
    pub peck: bool,
}

pub fn peck_verdict(p: &GradedPoset) -> PeckVerdict {
    let prof = rank_profile(p);
    let mut v = PeckVerdict {
        symmetric: prof.symmetric,
        unimodal: prof.unimodal,
        unitary_peck: None,
        strongly_sperner: None,
        peck: false,
    };
    if !(prof.symmetric && prof.unimodal) {
        return v;
    }
    let unitary = is_unitary_peck(p);
    v.unitary_peck = Some(unitary);
    if unitary {
        v.peck = true;
        return v;
    }
    let sperner = is_strongly_sperner(p);
    v.strongly_sperner = Some(sperner);
    v.peck = sperner;
    v
}

/// Every property at once, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeckReport {
    pub rank_vector: Vec<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
    pub lefschetz_ranks: Vec<usize>,
    pub unitary_peck: bool,
    pub d_k: Vec<usize>,
    pub strongly_sperner: bool,
    pub peck: bool,
}

impl PeckReport {
    pub fn new(p: &GradedPoset) -> Self {
        let rank_vector = p.rank_vector();
        let prof = profile_of(&rank_vector);
        let lefschetz_ranks = lefschetz_ranks(p);
        let n = p.max_rank().unwrap_or(0);
        let unitary_peck = lefschetz_ranks
            .iter()
            .enumerate()
            .all(|(i, &r)| rank_vector[i] == rank_vector[n - i] && r == rank_vector[i]);
        let kmax = rank_vector.len();
        let d_k = antichain_union_profile(p, kmax);
        let strongly_sperner = d_k == largest_rank_sums(p, kmax);
        let peck = prof.symmetric && prof.unimodal && strongly_sperner;
        debug_assert!(!unitary_peck || peck);
        PeckReport {
            rank_vector,
            symmetric: prof.symmetric,
            unimodal: prof.unimodal,
            lefschetz_ranks,
            unitary_peck,
            d_k,
            strongly_sperner,
            peck,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::{edge_poset, h_poset};
    use crate::figures;

    fn b(n: usize) -> GradedPoset {
        GradedPoset::boolean_algebra(n).unwrap()
    }

    #[test]
    fn profiles() {
        assert_eq!(rank_profile(&b(6)), RankProfile { symmetric: true, unimodal: true });
        assert_eq!(profile_of(&[3, 2, 3]), RankProfile { symmetric: true, unimodal: false });
        assert_eq!(profile_of(&[1, 3, 2]), RankProfile { symmetric: false, unimodal: true });
        assert_eq!(profile_of(&[2, 1, 3]), RankProfile { symmetric: false, unimodal: false });
        assert_eq!(profile_of(&[]), RankProfile { symmetric: true, unimodal: true });
    }

    #[test]
    fn lefschetz_small() {
        assert_eq!(lefschetz_power_rank(&b(2), 0), 1);
        assert_eq!(lefschetz_power_rank(&b(4), 1), 4);
        assert_eq!(lefschetz_power_rank(&figures::fig2(), 0), 2);
        let m = lefschetz_matrix(&figures::fig2(), 0, 3);
        assert_eq!(m, ExactMatrix::from_rows(&[vec![2, 1], vec![1, 1]]));
    }

    #[test]
    fn unitary_peck_examples() {
        assert!(is_unitary_peck(&h_poset(&b(4)).poset));
        assert!(is_unitary_peck(&edge_poset(&b(4)).poset));
        assert!(!is_unitary_peck(&edge_poset(&b(2)).poset));
        assert!(is_unitary_peck(&figures::fig2()));
        let split = GradedPoset::new(vec![0, 1], vec![]).unwrap();
        assert!(!is_unitary_peck(&split));
    }

    #[test]
    fn antichain_unions() {
        assert_eq!(max_k_antichain_union(&b(3), 1), 3);
        assert_eq!(max_k_antichain_union(&b(3), 2), 6);
        for n in 1..6 {
            for k in 1..8 {
                assert_eq!(max_k_antichain_union(&GradedPoset::chain(n), k), k.min(n));
            }
        }
        assert_eq!(brute_force_antichain_union(&b(3), 1), 3);
        assert_eq!(brute_force_antichain_union(&b(3), 2), 6);
    }

    #[test]
    fn sperner() {
        assert!(is_strongly_sperner(&b(4)));
        assert!(is_strongly_sperner(&GradedPoset::chain(5)));
        // {1, 3, 4} is an antichain of three against a largest rank of two.
        let p = GradedPoset::new(vec![0, 0, 1, 2, 2], vec![(0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(brute_force_antichain_union(&p, 1), 3);
        assert_eq!(max_k_antichain_union(&p, 1), 3);
        assert!(!is_strongly_sperner(&p));
    }

    #[test]
    fn peck_examples() {
        assert!(!is_peck(&edge_poset(&figures::fig2()).poset));
        assert!(is_peck(&GradedPoset::antichain(5)));
        assert!(is_peck(&b(0)));
        let r = PeckReport::new(&b(4));
        assert!(r.peck && r.unitary_peck);
        assert_eq!(r.d_k, vec![6, 10, 14, 15, 16]);
    }
}
