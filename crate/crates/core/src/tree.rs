//! Rooted trees drawn as graded posets, root on top, and the action of their
//! automorphism group on the leaves.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::poset::GradedPoset;

#[derive(Clone, Debug)]
pub struct RootedTree {
    poset: GradedPoset,
    root: usize,
    leaves: Vec<usize>,
    /// Position of each element among the leaves, if it is one.
    leaf_pos: Vec<Option<usize>>,
}

impl RootedTree {
    /// Requires a unique maximal element and exactly one upper cover for
    /// every other element. Leaves are the minimal elements, in index order;
    /// they need not share a rank.
    pub fn new(poset: GradedPoset) -> Result<Self> {
        if poset.is_empty() {
            return Err(Error::NotATree("no elements".into()));
        }
        let tops: Vec<usize> = (0..poset.len()).filter(|&x| poset.up_covers(x).is_empty()).collect();
        if tops.len() != 1 {
            return Err(Error::NotATree(format!("{} maximal elements", tops.len())));
        }
        if let Some(x) = (0..poset.len()).find(|&x| poset.up_covers(x).len() > 1) {
            return Err(Error::NotATree(format!("element {x} has several parents")));
        }
        let leaves: Vec<usize> = (0..poset.len())
            .filter(|&x| poset.down_covers(x).is_empty())
            .collect();
        let mut leaf_pos = vec![None; poset.len()];
        for (i, &l) in leaves.iter().enumerate() {
            leaf_pos[l] = Some(i);
        }
        Ok(RootedTree {
            root: tops[0],
            poset,
            leaves,
            leaf_pos,
        })
    }

    /// Parses nested `{"children": [...]}` objects. Leaves get the first
    /// indices in depth-first order; internal nodes follow in post-order.
    pub fn from_nested_json(value: &Value) -> Result<Self> {
        struct Node {
            children: Vec<usize>,
            depth: usize,
        }
        fn walk(v: &Value, depth: usize, nodes: &mut Vec<Node>) -> Result<usize> {
            let children = match v.get("children") {
                None | Some(Value::Null) => Vec::new(),
                Some(Value::Array(cs)) => cs
                    .iter()
                    .map(|c| walk(c, depth + 1, nodes))
                    .collect::<Result<Vec<_>>>()?,
                Some(_) => return Err(Error::Parse("\"children\" must be an array".into())),
            };
            if !v.is_object() {
                return Err(Error::Parse("tree nodes must be objects".into()));
            }
            nodes.push(Node { children, depth });
            Ok(nodes.len() - 1)
        }
        let mut nodes = Vec::new();
        walk(value, 0, &mut nodes)?;
        // Renumber: leaves first (walk order is depth-first), then the rest.
        let mut new_id = vec![0; nodes.len()];
        let mut next = 0;
        for pass_leaves in [true, false] {
            for (i, n) in nodes.iter().enumerate() {
                if n.children.is_empty() == pass_leaves {
                    new_id[i] = next;
                    next += 1;
                }
            }
        }
        let height = nodes.iter().map(|n| n.depth).max().unwrap_or(0);
        let mut ranks = vec![0; nodes.len()];
        let mut covers = Vec::new();
        for (i, n) in nodes.iter().enumerate() {
            ranks[new_id[i]] = height - n.depth;
            for &c in &n.children {
                covers.push((new_id[c], new_id[i]));
            }
        }
        RootedTree::new(GradedPoset::new(ranks, covers)?)
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn children(&self, x: usize) -> &[usize] {
        self.poset.down_covers(x)
    }

    /// Elements ordered so that children come before parents.
    fn bottom_up(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.poset.len()).collect();
        order.sort_by_key(|&x| (self.poset.rank(x), x));
        order
    }

    /// Canonical shape code of every subtree.
    fn shapes(&self) -> Vec<usize> {
        let mut codes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut shape = vec![0; self.poset.len()];
        for x in self.bottom_up() {
            let mut key: Vec<usize> = self.children(x).iter().map(|&c| shape[c]).collect();
            key.sort_unstable();
            let next = codes.len();
            shape[x] = *codes.entry(key).or_insert(next);
        }
        shape
    }

    /// Leaf positions below each element, listed so that isomorphic subtrees
    /// give corresponding lists.
    fn canonical_leaves(&self, shape: &[usize]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.poset.len()];
        for x in self.bottom_up() {
            if let Some(p) = self.leaf_pos[x] {
                out[x] = vec![p];
                continue;
            }
            let mut kids = self.children(x).to_vec();
            kids.sort_by_key(|&c| (shape[c], c));
            out[x] = kids.iter().flat_map(|&c| out[c].iter().copied()).collect();
        }
        out
    }

    /// Generators of the automorphism group acting on leaf positions: at
    /// every node, transpositions of neighbouring isomorphic children.
    pub fn automorphism_generators(&self) -> Vec<Permutation> {
        let shape = self.shapes();
        let canon = self.canonical_leaves(&shape);
        let n = self.leaves.len();
        let mut gens = Vec::new();
        for x in self.bottom_up() {
            let mut kids = self.children(x).to_vec();
            kids.sort_by_key(|&c| (shape[c], c));
            for pair in kids.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                if shape[a] != shape[b] {
                    continue;
                }
                let mut images: Vec<usize> = (0..n).collect();
                for (&p, &q) in canon[a].iter().zip(&canon[b]) {
                    images[p] = q;
                    images[q] = p;
                }
                gens.push(Permutation::from_images(images).expect("subtree swap"));
            }
        }
        gens
    }

    pub fn automorphisms(&self, cap: usize) -> Result<PermGroup> {
        PermGroup::generate(self.leaves.len(), self.automorphism_generators(), cap)
    }

    /// `∏ |Aut(c)|^i · i!` over classes of `i` isomorphic children, applied
    /// recursively.
    pub fn automorphism_order(&self) -> u128 {
        let shape = self.shapes();
        let mut order = vec![1u128; self.poset.len()];
        for x in self.bottom_up() {
            let mut classes: BTreeMap<usize, (u128, u128)> = BTreeMap::new();
            for &c in self.children(x) {
                let e = classes.entry(shape[c]).or_insert((order[c], 0));
                e.1 += 1;
            }
            order[x] = classes
                .values()
                .map(|&(o, i)| o.pow(i as u32) * (1..=i).product::<u128>())
                .product();
        }
        order[self.root]
    }
}
