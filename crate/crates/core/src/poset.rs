//! Finite graded posets stored as explicit ranks plus Hasse covers.
//!
//! Elements are dense indices `0..len`. Ranks are stored, never inferred, so a
//! poset may have minimal elements above rank zero (components of an edge
//! poset, leaves of a rooted tree at different depths). Every cover raises
//! rank by exactly one; that is checked once, at construction.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest boolean algebra we are willing to build.
pub const BOOLEAN_CAP: usize = 16;

/// Posets up to this size get a precomputed reachability matrix.
pub const REACH_MATRIX_LIMIT: usize = 4096;

#[derive(Clone)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    reach: OnceLock<Option<BitMatrix>>,
}

#[derive(Clone, Debug)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }
}

/// How [`GradedPoset::combine`] glues two posets together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    DisjointUnion,
    Product,
}

impl GradedPoset {
    /// Validates and builds a graded poset from per-element ranks and cover pairs.
    pub fn new(ranks: Vec<usize>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let len = ranks.len();
        let mut seen = HashSet::with_capacity(covers.len());
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &(low, high) in &covers {
            for index in [low, high] {
                if index >= len {
                    return Err(Error::IndexOutOfRange { index, len });
                }
            }
            if ranks[low] + 1 != ranks[high] {
                return Err(Error::NotGraded { low, high });
            }
            if !seen.insert((low, high)) {
                return Err(Error::DuplicateCover { low, high });
            }
            up[low].push(high);
            down[high].push(low);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        let mut covers = covers;
        covers.sort_unstable();
        Ok(GradedPoset {
            ranks,
            covers,
            up,
            down,
            labels: None,
            reach: OnceLock::new(),
        })
    }

    /// Attaches display labels. Labels never affect comparisons.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::InvalidParams(format!(
                "{} labels for {} elements",
                labels.len(),
                self.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn empty() -> Self {
        GradedPoset::new(Vec::new(), Vec::new()).expect("empty poset is valid")
    }

    /// The chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Self {
        let covers = (1..len).map(|i| (i - 1, i)).collect();
        GradedPoset::new((0..len).collect(), covers).expect("chain is graded")
    }

    /// `len` pairwise incomparable elements, all at rank zero.
    pub fn antichain(len: usize) -> Self {
        GradedPoset::new(vec![0; len], Vec::new()).expect("antichain is graded")
    }

    /// The boolean algebra `B_n`: element `m` is the subset whose bit mask is `m`.
    pub fn boolean_algebra(n: usize) -> Result<Self> {
        if n > BOOLEAN_CAP {
            return Err(Error::TooLarge {
                requested: n,
                limit: BOOLEAN_CAP,
            });
        }
        let size = 1usize << n;
        let ranks = (0..size).map(|m| m.count_ones() as usize).collect();
        let mut covers = Vec::with_capacity(size * n / 2);
        for mask in 0..size {
            for bit in 0..n {
                if mask >> bit & 1 == 0 {
                    covers.push((mask, mask | 1 << bit));
                }
            }
        }
        GradedPoset::new(ranks, covers)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// All cover pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn up_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn down_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `x`, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.up[x].binary_search(&y).is_ok()
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.ranks.iter().copied().max()
    }

    /// Number of elements at each rank `0..=max_rank`.
    pub fn rank_vector(&self) -> Vec<usize> {
        let Some(top) = self.max_rank() else {
            return Vec::new();
        };
        let mut counts = vec![0; top + 1];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }

    /// Element indices grouped by rank, each group ascending.
    pub fn rank_levels(&self) -> Vec<Vec<usize>> {
        let Some(top) = self.max_rank() else {
            return Vec::new();
        };
        let mut levels = vec![Vec::new(); top + 1];
        for (x, &r) in self.ranks.iter().enumerate() {
            levels[r].push(x);
        }
        levels
    }

    fn reachability(&self) -> Option<&BitMatrix> {
        self.reach
            .get_or_init(|| {
                let n = self.len();
                if n > REACH_MATRIX_LIMIT {
                    return None;
                }
                let words = n.div_ceil(64).max(1);
                let mut bits = vec![0u64; n * words];
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&x| std::cmp::Reverse(self.ranks[x]));
                for x in order {
                    bits[x * words + x / 64] |= 1 << (x % 64);
                    for &y in &self.up[x] {
                        for w in 0..words {
                            let v = bits[y * words + w];
                            bits[x * words + w] |= v;
                        }
                    }
                }
                Some(BitMatrix { words, bits })
            })
            .as_ref()
    }

    /// `x <= y` in the order generated by the covers.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        if self.ranks[x] >= self.ranks[y] {
            return false;
        }
        if let Some(matrix) = self.reachability() {
            return matrix.get(x, y);
        }
        let target_rank = self.ranks[y];
        let mut frontier = vec![x];
        let mut seen = HashSet::new();
        while let Some(v) = frontier.pop() {
            for &w in &self.up[v] {
                if w == y {
                    return true;
                }
                if self.ranks[w] < target_rank && seen.insert(w) {
                    frontier.push(w);
                }
            }
        }
        false
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// The dual poset: same elements, covers reversed, rank `max - rank`.
    pub fn dual(&self) -> GradedPoset {
        self.dual_about(self.max_rank().unwrap_or(0))
    }

    /// Reverses the order and sends rank `r` to `top - r`.
    ///
    /// Panics if `top` is below the largest rank.
    pub fn dual_about(&self, top: usize) -> GradedPoset {
        assert!(self.max_rank().is_none_or(|m| m <= top), "top {top} is below the largest rank");
        let ranks = self.ranks.iter().map(|&r| top - r).collect();
        let covers = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        let mut dual = GradedPoset::new(ranks, covers).expect("dual of a graded poset is graded");
        dual.labels = self.labels.clone();
        dual
    }

    pub fn combine(&self, other: &GradedPoset, mode: CombineMode) -> GradedPoset {
        match mode {
            CombineMode::DisjointUnion => self.disjoint_union(other),
            CombineMode::Product => self.product(other),
        }
    }

    /// Elements of `self` keep their indices; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &GradedPoset) -> GradedPoset {
        let shift = self.len();
        let ranks = self.ranks.iter().chain(&other.ranks).copied().collect();
        let covers = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(x, y)| (x + shift, y + shift)))
            .collect();
        GradedPoset::new(ranks, covers).expect("disjoint union of graded posets is graded")
    }

    /// Cartesian product; the pair `(p, q)` has index `p * other.len() + q`.
    pub fn product(&self, other: &GradedPoset) -> GradedPoset {
        let width = other.len();
        let mut ranks = Vec::with_capacity(self.len() * width);
        for p in 0..self.len() {
            for q in 0..width {
                ranks.push(self.ranks[p] + other.ranks[q]);
            }
        }
        let mut covers = Vec::new();
        for &(p, p2) in &self.covers {
            for q in 0..width {
                covers.push((p * width + q, p2 * width + q));
            }
        }
        for p in 0..self.len() {
            for &(q, q2) in &other.covers {
                covers.push((p * width + q, p * width + q2));
            }
        }
        GradedPoset::new(ranks, covers).expect("product of graded posets is graded")
    }

    /// `n` disjoint copies of `self`; copy `i` occupies indices `i*len..(i+1)*len`.
    pub fn copies(&self, n: usize) -> GradedPoset {
        (0..n).fold(GradedPoset::empty(), |acc, _| acc.disjoint_union(self))
    }

    /// The `l`-fold product `self^l`, coordinates in big-endian order.
    pub fn power(&self, l: usize) -> GradedPoset {
        (0..l).fold(GradedPoset::antichain(1), |acc, _| acc.product(self))
    }
}

impl PartialEq for GradedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.ranks == other.ranks && self.covers == other.covers
    }
}

impl Eq for GradedPoset {}

impl fmt::Debug for GradedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedPoset")
            .field("ranks", &self.ranks)
            .field("covers", &self.covers)
            .finish()
    }
}

/// A rank- and order-preserving map between graded posets.
///
/// A bijective morphism need not be an isomorphism: nothing is required of
/// the inverse.
#[derive(Clone, Debug)]
pub struct PosetMorphism {
    source: Arc<GradedPoset>,
    target: Arc<GradedPoset>,
    image_of: Vec<usize>,
}

impl PosetMorphism {
    pub fn new(
        source: Arc<GradedPoset>,
        target: Arc<GradedPoset>,
        image_of: Vec<usize>,
    ) -> Result<Self> {
        if image_of.len() != source.len() {
            return Err(Error::InvalidMorphism(format!(
                "{} images for {} source elements",
                image_of.len(),
                source.len()
            )));
        }
        for (x, &fx) in image_of.iter().enumerate() {
            if fx >= target.len() {
                return Err(Error::IndexOutOfRange {
                    index: fx,
                    len: target.len(),
                });
            }
            if source.rank(x) != target.rank(fx) {
                return Err(Error::InvalidMorphism(format!(
                    "element {x} has rank {} but its image {fx} has rank {}",
                    source.rank(x),
                    target.rank(fx)
                )));
            }
        }
        // Covers generate the order, so checking them is enough.
        for &(x, y) in source.covers() {
            if !target.is_cover(image_of[x], image_of[y]) {
                return Err(Error::ImageNotCover {
                    low: image_of[x],
                    high: image_of[y],
                });
            }
        }
        Ok(PosetMorphism {
            source,
            target,
            image_of,
        })
    }

    pub fn identity(poset: Arc<GradedPoset>) -> Self {
        let image_of = (0..poset.len()).collect();
        PosetMorphism {
            source: poset.clone(),
            target: poset,
            image_of,
        }
    }

    pub fn source(&self) -> &Arc<GradedPoset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedPoset> {
        &self.target
    }

    pub fn image_of(&self) -> &[usize] {
        &self.image_of
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image_of[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &PosetMorphism) -> Result<PosetMorphism> {
        if *self.target != *next.source {
            return Err(Error::InvalidMorphism(
                "composition of morphisms with mismatched posets".into(),
            ));
        }
        let image_of = self.image_of.iter().map(|&y| next.image_of[y]).collect();
        PosetMorphism::new(self.source.clone(), next.target.clone(), image_of)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.image_of
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &y in &self.image_of {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// Bijective, with an order-preserving inverse. A bijective morphism maps
    /// covers injectively onto covers, so this reduces to equal cover counts.
    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective() && self.source.covers().len() == self.target.covers().len()
    }
}
