//! The edge poset `E(P)`, its relaxation `H(P)`, and the maps between them.
//!
//! The elements of both posets are the covers `(x, y)` of `P`, ordered by
//! `(rank(x), x, y)`, with rank equal to the rank of the lower end. In `E(P)`,
//! `(x, y)` is covered by `(x', y')` when `x ⋖ x'` and `y ⋖ y'`; `H(P)` keeps
//! only those covers with `x' != y`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::verify_isomorphism;
use crate::poset::{GradedPoset, PosetMorphism, BOOLEAN_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeElement {
    pub low: usize,
    pub high: usize,
}

/// Which order to put on the edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    E,
    H,
}

/// An edge poset together with its element table.
#[derive(Clone, Debug)]
pub struct EdgePoset {
    pub poset: GradedPoset,
    pub edges: Vec<EdgeElement>,
    index: HashMap<(usize, usize), usize>,
}

impl EdgePoset {
    pub fn index_of(&self, low: usize, high: usize) -> Option<usize> {
        self.index.get(&(low, high)).copied()
    }

    pub fn edge(&self, i: usize) -> EdgeElement {
        self.edges[i]
    }

    /// Labels of the form `(low,high)` built from the source poset's labels.
    pub fn labels_from(&self, source: &GradedPoset) -> Vec<String> {
        self.edges
            .iter()
            .map(|e| format!("({},{})", source.label(e.low), source.label(e.high)))
            .collect()
    }
}

fn edge_table(p: &GradedPoset) -> (Vec<EdgeElement>, HashMap<(usize, usize), usize>) {
    let mut edges: Vec<EdgeElement> = p
        .covers()
        .iter()
        .map(|&(low, high)| EdgeElement { low, high })
        .collect();
    edges.sort_by_key(|e| (p.rank(e.low), e.low, e.high));
    let index = edges
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.low, e.high), i))
        .collect();
    (edges, index)
}

/// One pass builds the `E` covers; `H` drops those with `x' == y`.
fn build(p: &GradedPoset, kind: EdgeKind) -> EdgePoset {
    let (edges, index) = edge_table(p);
    let ranks = edges.iter().map(|e| p.rank(e.low)).collect();
    let mut covers = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for &x2 in p.up_covers(e.low) {
            if kind == EdgeKind::H && x2 == e.high {
                continue;
            }
            for &y2 in p.up_covers(e.high) {
                if let Some(&j) = index.get(&(x2, y2)) {
                    covers.push((i, j));
                }
            }
        }
    }
    let poset = GradedPoset::new(ranks, covers).expect("edge posets are graded");
    EdgePoset {
        poset,
        edges,
        index,
    }
}

pub fn edge_poset(p: &GradedPoset) -> EdgePoset {
    build(p, EdgeKind::E)
}

pub fn h_poset(p: &GradedPoset) -> EdgePoset {
    build(p, EdgeKind::H)
}

pub fn edge_poset_of_kind(p: &GradedPoset, kind: EdgeKind) -> EdgePoset {
    build(p, kind)
}

/// `E(f)`, sending `(x, y)` to `(f(x), f(y))`.
pub fn edge_map(f: &PosetMorphism) -> Result<PosetMorphism> {
    let src = edge_poset(f.source());
    let tgt = edge_poset(f.target());
    edge_map_between(f, &src, &tgt)
}

/// `E(f)` against prebuilt edge posets of `f`'s source and target.
pub fn edge_map_between(f: &PosetMorphism, src: &EdgePoset, tgt: &EdgePoset) -> Result<PosetMorphism> {
    let image_of = src
        .edges
        .iter()
        .map(|e| {
            let (low, high) = (f.apply(e.low), f.apply(e.high));
            tgt.index_of(low, high)
                .ok_or(Error::ImageNotCover { low, high })
        })
        .collect::<Result<Vec<_>>>()?;
    PosetMorphism::new(
        Arc::new(src.poset.clone()),
        Arc::new(tgt.poset.clone()),
        image_of,
    )
}

/// Whether the componentwise relation `(x, y) <= (a, b)` iff `x <= a` and
/// `y <= b` yields a graded poset on the edges of `p`. The full relation is
/// built and Hasse-reduced; no sampling.
pub fn naive_edge_relation_is_graded(p: &GradedPoset) -> bool {
    let (edges, _) = edge_table(p);
    let m = edges.len();
    let rel = |a: usize, b: usize| -> bool {
        a != b && p.leq(edges[a].low, edges[b].low) && p.leq(edges[a].high, edges[b].high)
    };
    let matrix: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| rel(a, b)).collect()).collect();
    for a in 0..m {
        for b in 0..m {
            if !matrix[a][b] {
                continue;
            }
            let is_cover = !(0..m).any(|c| matrix[a][c] && matrix[c][b]);
            if is_cover && p.rank(edges[b].low) != p.rank(edges[a].low) + 1 {
                return false;
            }
        }
    }
    true
}

/// The identity on edge tables, viewed as a bijective morphism `H(P) -> E(P)`.
pub fn h_to_e_bijection(p: &GradedPoset) -> PosetMorphism {
    let h = h_poset(p);
    let e = edge_poset(p);
    debug_assert_eq!(h.edges, e.edges);
    PosetMorphism::new(
        Arc::new(h.poset),
        Arc::new(e.poset),
        (0..e.edges.len()).collect(),
    )
    .expect("every H cover is an E cover")
}

/// Identity on edge pairs, read as a map `E(dual P) -> dual(E(P))`.
///
/// `dual(E(P))` is reflected about `rank(P) - 1` rather than about its own
/// top, so ranks still line up when no cover of `p` reaches the top rank.
pub fn edge_dual_witness(p: &GradedPoset) -> (GradedPoset, GradedPoset, Vec<usize>) {
    let dual = p.dual();
    let e_of_dual = edge_poset(&dual);
    let e = edge_poset(p);
    let dual_of_e = e.poset.dual_about(p.max_rank().unwrap_or(0).saturating_sub(1));
    let map: Vec<usize> = e_of_dual
        .edges
        .iter()
        .map(|d| e.index_of(d.high, d.low).expect("reversed dual cover is a cover"))
        .collect();
    (e_of_dual.poset, dual_of_e, map)
}

/// `H(B_n)` together with an explicit isomorphism onto `n` disjoint copies of `B_{n-1}`.
#[derive(Clone, Debug)]
pub struct HbnDecomposition {
    pub n: usize,
    pub h: EdgePoset,
    pub copies: GradedPoset,
    /// `witness[e]` is the image of edge `e` of `H(B_n)` in `copies`.
    pub witness: Vec<usize>,
}

impl HbnDecomposition {
    pub fn verify(&self) -> bool {
        verify_isomorphism(&self.h.poset, &self.copies, &self.witness)
    }
}

/// Deletes bit `i` from `mask` and closes the gap.
pub fn delete_coordinate(mask: usize, i: usize) -> usize {
    let low = mask & ((1 << i) - 1);
    let high = mask >> (i + 1);
    low | high << i
}

/// Sends `(x, x ∪ {i})` to the copy of `x` with coordinate `i` removed in copy `i`.
pub fn h_bn_decomposition(n: usize) -> Result<HbnDecomposition> {
    if n == 0 {
        return Err(Error::InvalidParams("H(B_0) is empty; need n >= 1".into()));
    }
    if n > BOOLEAN_CAP {
        return Err(Error::TooLarge {
            requested: n,
            limit: BOOLEAN_CAP,
        });
    }
    let bn = GradedPoset::boolean_algebra(n)?;
    let h = h_poset(&bn);
    let block = GradedPoset::boolean_algebra(n - 1)?;
    let copies = block.copies(n);
    let witness = h
        .edges
        .iter()
        .map(|e| {
            let i = (e.high ^ e.low).trailing_zeros() as usize;
            i * block.len() + delete_coordinate(e.low, i)
        })
        .collect();
    let decomposition = HbnDecomposition {
        n,
        h,
        copies,
        witness,
    };
    debug_assert!(decomposition.verify());
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;
    use crate::iso::is_isomorphic;

    #[test]
    fn point_has_empty_edge_poset() {
        assert!(edge_poset(&GradedPoset::antichain(1)).poset.is_empty());
    }

    #[test]
    fn fig1_edge_poset_matches_drawing() {
        let e = edge_poset(&figures::fig1());
        assert_eq!(e.edges.len(), 9);
        let c = |a: (usize, usize), b: (usize, usize)| {
            e.poset
                .is_cover(e.index_of(a.0, a.1).unwrap(), e.index_of(b.0, b.1).unwrap())
        };
        assert!(c((0, 1), (1, 3)));
        assert!(c((0, 1), (2, 3)));
        assert!(!c((0, 1), (2, 4)));
        assert_eq!(e.poset.covers().len(), 10);
    }

    #[test]
    fn e_b3_rank_vector() {
        let b3 = GradedPoset::boolean_algebra(3).unwrap();
        assert_eq!(edge_poset(&b3).poset.rank_vector(), vec![3, 6, 3]);
    }

    #[test]
    fn h_of_chain_is_antichain() {
        let c = GradedPoset::chain(5);
        let h = h_poset(&c);
        assert_eq!(h.poset.len(), 4);
        assert!(h.poset.covers().is_empty());
        assert!(is_isomorphic(&edge_poset(&c).poset, &GradedPoset::chain(4)));
    }

    #[test]
    fn h_of_diamond_is_two_chains() {
        let h = h_poset(&figures::diamond());
        let two = GradedPoset::chain(2).copies(2);
        assert!(is_isomorphic(&h.poset, &two));
    }

    #[test]
    fn h_b3_is_three_b2() {
        let b3 = GradedPoset::boolean_algebra(3).unwrap();
        let three = GradedPoset::boolean_algebra(2).unwrap().copies(3);
        assert!(is_isomorphic(&h_poset(&b3).poset, &three));
    }

    #[test]
    fn edge_map_collapses_diamond() {
        let diamond = Arc::new(figures::diamond());
        let chain = Arc::new(GradedPoset::chain(3));
        let f = PosetMorphism::new(diamond, chain, vec![0, 1, 1, 2]).unwrap();
        let ef = edge_map(&f).unwrap();
        assert_eq!(ef.source().len(), 4);
        assert_eq!(ef.target().len(), 2);
        assert!(ef.is_surjective());
    }

    #[test]
    fn edge_map_of_identity() {
        let b3 = Arc::new(GradedPoset::boolean_algebra(3).unwrap());
        let ef = edge_map(&PosetMorphism::identity(b3)).unwrap();
        assert!(ef.image_of().iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn naive_relation() {
        assert!(!naive_edge_relation_is_graded(&figures::fig1()));
        assert!(naive_edge_relation_is_graded(&GradedPoset::boolean_algebra(3).unwrap()));
        assert!(naive_edge_relation_is_graded(&GradedPoset::chain(6)));
    }

    #[test]
    fn h_to_e_is_bijective_morphism() {
        for p in [
            GradedPoset::boolean_algebra(3).unwrap(),
            GradedPoset::chain(4),
            figures::fig1(),
        ] {
            let f = h_to_e_bijection(&p);
            assert!(f.is_bijective());
        }
        let f = h_to_e_bijection(&GradedPoset::chain(4));
        assert_eq!(f.source().covers().len(), 0);
        assert_eq!(f.target().covers().len(), 2);
    }

    #[test]
    fn hbn_small_cases() {
        let d1 = h_bn_decomposition(1).unwrap();
        assert_eq!(d1.copies.len(), 1);
        assert!(d1.verify());
        let d3 = h_bn_decomposition(3).unwrap();
        assert!(d3.verify());
        let d5 = h_bn_decomposition(5).unwrap();
        assert!(d5.verify());
        for i in 0..5 {
            let comp: Vec<usize> = d5
                .witness
                .iter()
                .filter(|&&w| w / 16 == i)
                .map(|&w| d5.copies.rank(w))
                .collect();
            let mut rv = vec![0; 5];
            for r in comp {
                rv[r] += 1;
            }
            assert_eq!(rv, vec![1, 4, 6, 4, 1]);
        }
        assert!(h_bn_decomposition(0).is_err());
        assert!(matches!(h_bn_decomposition(17), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn delete_coordinate_compacts() {
        assert_eq!(delete_coordinate(0b1011, 1), 0b101);
        assert_eq!(delete_coordinate(0b1011, 0), 0b101);
        assert_eq!(delete_coordinate(0b1000, 3), 0);
    }

    #[test]
    fn edge_dual_commutes() {
        // The last one has no cover into its top rank.
        let short = GradedPoset::new(vec![0, 1, 2], vec![(0, 1)]).unwrap();
        for p in [figures::fig1(), figures::fig2(), GradedPoset::boolean_algebra(4).unwrap(), short] {
            let (a, b, map) = edge_dual_witness(&p);
            assert!(verify_isomorphism(&a, &b, &map));
        }
    }
}
