//! Isomorphism testing for graded posets.
//!
//! Exponential in the worst case. Candidates are pruned by a joint color
//! refinement of both Hasse diagrams, and elements are placed in an order
//! that keeps each new element adjacent to one already mapped whenever
//! possible, so highly symmetric posets (boolean algebras and their unions)
//! rarely backtrack. Keep operands below a couple of thousand elements.

use std::collections::BTreeMap;

use crate::poset::GradedPoset;

/// Checks that `map` is a rank-preserving bijection `p -> q` carrying the
/// cover set of `p` exactly onto the cover set of `q`.
pub fn verify_isomorphism(p: &GradedPoset, q: &GradedPoset, map: &[usize]) -> bool {
    if p.len() != q.len() || map.len() != p.len() || p.covers().len() != q.covers().len() {
        return false;
    }
    let mut hit = vec![false; q.len()];
    for (x, &y) in map.iter().enumerate() {
        if y >= q.len() || std::mem::replace(&mut hit[y], true) || p.rank(x) != q.rank(y) {
            return false;
        }
    }
    p.covers().iter().all(|&(a, b)| q.is_cover(map[a], map[b]))
}

pub fn is_isomorphic(p: &GradedPoset, q: &GradedPoset) -> bool {
    find_isomorphism(p, q).is_some()
}

/// Returns `map` with `map[x]` the image of `x`, or `None` when no
/// isomorphism exists.
pub fn find_isomorphism(p: &GradedPoset, q: &GradedPoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    if p.rank_vector() != q.rank_vector() {
        return None;
    }
    let n = p.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let (pc, qc) = refine_colors(p, q);
    let mut hist_p: BTreeMap<usize, usize> = BTreeMap::new();
    let mut hist_q: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &pc {
        *hist_p.entry(c).or_default() += 1;
    }
    for &c in &qc {
        *hist_q.entry(c).or_default() += 1;
    }
    if hist_p != hist_q {
        return None;
    }
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (y, &c) in qc.iter().enumerate() {
        by_color.entry(c).or_default().push(y);
    }

    let order = placement_order(p, &pc, &hist_p);
    let mut forward = vec![usize::MAX; n];
    let mut backward = vec![usize::MAX; n];
    // Candidate lists and cursor per depth.
    let mut stack: Vec<(Vec<usize>, usize)> = Vec::with_capacity(n);
    stack.push((candidates(p, q, order[0], &forward, &pc, &qc, &by_color), 0));
    loop {
        let depth = stack.len() - 1;
        let x = order[depth];
        if forward[x] != usize::MAX {
            backward[forward[x]] = usize::MAX;
            forward[x] = usize::MAX;
        }
        let (cands, cursor) = stack.last_mut().expect("non-empty stack");
        let mut placed = false;
        while *cursor < cands.len() {
            let y = cands[*cursor];
            *cursor += 1;
            if backward[y] == usize::MAX && consistent(p, q, x, y, &forward, &backward) {
                forward[x] = y;
                backward[y] = x;
                placed = true;
                break;
            }
        }
        if placed {
            if depth + 1 == n {
                return Some(forward);
            }
            let next = order[depth + 1];
            let c = candidates(p, q, next, &forward, &pc, &qc, &by_color);
            stack.push((c, 0));
        } else {
            stack.pop();
            if stack.is_empty() {
                return None;
            }
        }
    }
}

fn candidates(
    p: &GradedPoset,
    q: &GradedPoset,
    x: usize,
    forward: &[usize],
    pc: &[usize],
    qc: &[usize],
    by_color: &BTreeMap<usize, Vec<usize>>,
) -> Vec<usize> {
    let color = pc[x];
    let list: Vec<usize> = if let Some(&u) = p.up_covers(x).iter().find(|&&u| forward[u] != usize::MAX) {
        q.down_covers(forward[u]).to_vec()
    } else if let Some(&d) = p.down_covers(x).iter().find(|&&d| forward[d] != usize::MAX) {
        q.up_covers(forward[d]).to_vec()
    } else {
        return by_color.get(&color).cloned().unwrap_or_default();
    };
    list.into_iter().filter(|&y| qc[y] == color).collect()
}

fn consistent(
    p: &GradedPoset,
    q: &GradedPoset,
    x: usize,
    y: usize,
    forward: &[usize],
    backward: &[usize],
) -> bool {
    if p.rank(x) != q.rank(y)
        || p.up_covers(x).len() != q.up_covers(y).len()
        || p.down_covers(x).len() != q.down_covers(y).len()
    {
        return false;
    }
    let mut mapped_p = 0;
    for &u in p.up_covers(x) {
        if forward[u] != usize::MAX {
            if !q.is_cover(y, forward[u]) {
                return false;
            }
            mapped_p += 1;
        }
    }
    for &d in p.down_covers(x) {
        if forward[d] != usize::MAX {
            if !q.is_cover(forward[d], y) {
                return false;
            }
            mapped_p += 1;
        }
    }
    let mapped_q = q
        .up_covers(y)
        .iter()
        .chain(q.down_covers(y))
        .filter(|&&v| backward[v] != usize::MAX)
        .count();
    mapped_p == mapped_q
}

/// Greedy order: prefer elements adjacent to already placed ones, then the
/// smallest color class.
fn placement_order(p: &GradedPoset, colors: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = p.len();
    let mut placed = vec![false; n];
    let mut touching = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_class: Vec<usize> = (0..n).collect();
    by_class.sort_by_key(|&x| (hist[&colors[x]], colors[x], x));
    let mut frontier: Vec<usize> = Vec::new();
    let mut next_seed = 0;
    while order.len() < n {
        let x = loop {
            if let Some(v) = frontier.pop() {
                if !placed[v] {
                    break v;
                }
                continue;
            }
            while placed[by_class[next_seed]] {
                next_seed += 1;
            }
            break by_class[next_seed];
        };
        placed[x] = true;
        order.push(x);
        for &v in p.up_covers(x).iter().chain(p.down_covers(x)) {
            if !placed[v] && !touching[v] {
                touching[v] = true;
                frontier.push(v);
            }
        }
        // Most constrained (smallest color class) frontier element goes next.
        frontier.sort_by_key(|&v| std::cmp::Reverse((hist[&colors[v]], v)));
    }
    order
}

/// Joint 1-dimensional Weisfeiler-Leman refinement on both posets, so that
/// the resulting color ids are comparable across them.
fn refine_colors(p: &GradedPoset, q: &GradedPoset) -> (Vec<usize>, Vec<usize>) {
    let init = |g: &GradedPoset| -> Vec<(usize, usize, usize)> {
        (0..g.len())
            .map(|x| (g.rank(x), g.up_covers(x).len(), g.down_covers(x).len()))
            .collect()
    };
    let (mut pc, mut qc) = relabel(&init(p), &init(q));
    let mut classes = count_classes(&pc, &qc);
    loop {
        let signature = |g: &GradedPoset, c: &[usize]| -> Vec<(usize, Vec<usize>, Vec<usize>)> {
            (0..g.len())
                .map(|x| {
                    let mut ups: Vec<usize> = g.up_covers(x).iter().map(|&u| c[u]).collect();
                    let mut downs: Vec<usize> = g.down_covers(x).iter().map(|&d| c[d]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    (c[x], ups, downs)
                })
                .collect()
        };
        let (np, nq) = relabel(&signature(p, &pc), &signature(q, &qc));
        let next = count_classes(&np, &nq);
        pc = np;
        qc = nq;
        if next == classes {
            return (pc, qc);
        }
        classes = next;
    }
}

fn relabel<T: Ord + Clone>(a: &[T], b: &[T]) -> (Vec<usize>, Vec<usize>) {
    let mut ids: BTreeMap<T, usize> = BTreeMap::new();
    for key in a.iter().chain(b) {
        let next = ids.len();
        ids.entry(key.clone()).or_insert(next);
    }
    // Renumber in sorted key order so ids do not depend on visit order.
    for (i, v) in ids.values_mut().enumerate() {
        *v = i;
    }
    (
        a.iter().map(|k| ids[k]).collect(),
        b.iter().map(|k| ids[k]).collect(),
    )
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;

    #[test]
    fn b2_is_the_diamond() {
        let b2 = GradedPoset::boolean_algebra(2).unwrap();
        let map = find_isomorphism(&b2, &figures::diamond()).unwrap();
        assert!(verify_isomorphism(&b2, &figures::diamond(), &map));
    }

    #[test]
    fn b2_is_not_a_chain() {
        let b2 = GradedPoset::boolean_algebra(2).unwrap();
        assert!(!is_isomorphic(&b2, &GradedPoset::chain(4)));
    }

    #[test]
    fn self_dual_examples() {
        let c3 = GradedPoset::chain(3);
        assert!(is_isomorphic(&c3.dual(), &c3));
        let b3 = GradedPoset::boolean_algebra(3).unwrap();
        assert!(is_isomorphic(&b3.dual(), &b3));
        let f2 = figures::fig2();
        assert!(is_isomorphic(&f2.dual(), &f2));
        // Rank 1 of fig1 has an element with two up-covers; rank 1 of its dual does not.
        let f1 = figures::fig1();
        assert!(!is_isomorphic(&f1.dual(), &f1));
    }

    #[test]
    fn product_of_b1_is_b2() {
        let b1 = GradedPoset::boolean_algebra(1).unwrap();
        assert!(is_isomorphic(&b1.product(&b1), &GradedPoset::boolean_algebra(2).unwrap()));
    }

    #[test]
    fn same_rank_vector_different_structure() {
        // Two 2-chains versus a "Z" shape: both (2,2) with two covers.
        let two_chains = GradedPoset::new(vec![0, 0, 1, 1], vec![(0, 2), (1, 3)]).unwrap();
        let vee = GradedPoset::new(vec![0, 0, 1, 1], vec![(0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&two_chains, &vee));
    }

    #[test]
    fn bigger_symmetric_instances() {
        let b6 = GradedPoset::boolean_algebra(6).unwrap();
        let map = find_isomorphism(&b6, &b6.dual()).unwrap();
        assert!(verify_isomorphism(&b6, &b6.dual(), &map));
        let b2 = GradedPoset::boolean_algebra(2).unwrap();
        let b3 = GradedPoset::boolean_algebra(3).unwrap();
        assert!(is_isomorphic(&b2.product(&b3), &GradedPoset::boolean_algebra(5).unwrap()));
    }
}
