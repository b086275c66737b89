//! Permutation groups acting on graded posets by rank-preserving automorphisms.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::edge::{edge_poset_of_kind, EdgeKind, EdgePoset};
use crate::error::{Error, Result};
use crate::group::{direct_product, wreath, PermGroup};
use crate::poset::{GradedPoset, BOOLEAN_CAP};

/// Upper bound on `|G| * |P|`, the size of the stored element table.
pub const ACTION_TABLE_LIMIT: usize = 1 << 27;

#[derive(Clone, Debug)]
pub struct PosetAction {
    group: Arc<PermGroup>,
    poset: Arc<GradedPoset>,
    generator_maps: Vec<Vec<u32>>,
    /// `element_maps[i][x]` is the image of `x` under group element `i`.
    element_maps: Vec<Vec<u32>>,
}

fn check_automorphism(p: &GradedPoset, map: &[u32], index: usize) -> Result<()> {
    let fail = |reason: String| Error::NotAnAutomorphism { index, reason };
    if map.len() != p.len() {
        return Err(fail(format!("{} images for {} elements", map.len(), p.len())));
    }
    let mut hit = vec![false; p.len()];
    for (x, &y) in map.iter().enumerate() {
        let y = y as usize;
        if y >= p.len() || std::mem::replace(&mut hit[y], true) {
            return Err(fail("not a bijection".into()));
        }
        if p.rank(x) != p.rank(y) {
            return Err(fail(format!("moves {x} from rank {} to rank {}", p.rank(x), p.rank(y))));
        }
    }
    // A bijection sending covers into covers permutes the finite cover set.
    for &(a, b) in p.covers() {
        if !p.is_cover(map[a] as usize, map[b] as usize) {
            return Err(fail(format!("cover ({a}, {b}) is not sent to a cover")));
        }
    }
    Ok(())
}

fn compose(outer: &[u32], inner: &[u32]) -> Vec<u32> {
    inner.iter().map(|&x| outer[x as usize]).collect()
}

impl PosetAction {
    /// `generator_maps[j]` is how the `j`-th group generator moves the
    /// elements. Every generator must be an automorphism, and the maps must
    /// respect every relation of the group; both are checked exhaustively.
    pub fn new(
        group: Arc<PermGroup>,
        poset: Arc<GradedPoset>,
        generator_maps: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if generator_maps.len() != group.generators().len() {
            return Err(Error::InconsistentAction(format!(
                "{} maps for {} generators",
                generator_maps.len(),
                group.generators().len()
            )));
        }
        if group.order().saturating_mul(poset.len().max(1)) > ACTION_TABLE_LIMIT {
            return Err(Error::TooLarge {
                requested: group.order().saturating_mul(poset.len()),
                limit: ACTION_TABLE_LIMIT,
            });
        }
        let generator_maps: Vec<Vec<u32>> = generator_maps
            .into_iter()
            .map(|m| m.into_iter().map(|x| x as u32).collect())
            .collect();
        for (j, map) in generator_maps.iter().enumerate() {
            check_automorphism(&poset, map, j)?;
        }
        let identity_index = group
            .index_of(&crate::perm::Permutation::identity(group.degree()))
            .expect("identity is an element");
        let mut element_maps: Vec<Option<Vec<u32>>> = vec![None; group.order()];
        element_maps[identity_index] = Some((0..poset.len() as u32).collect());
        let mut queue = VecDeque::from([identity_index]);
        while let Some(gi) = queue.pop_front() {
            for (s, smap) in group.generators().iter().zip(&generator_maps) {
                let h = s.compose(group.element(gi));
                let hi = group.index_of(&h).expect("group is closed");
                let map = compose(smap, element_maps[gi].as_ref().expect("visited"));
                match &element_maps[hi] {
                    Some(existing) if *existing != map => {
                        return Err(Error::InconsistentAction(format!(
                            "two words for {h} act differently"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        element_maps[hi] = Some(map);
                        queue.push_back(hi);
                    }
                }
            }
        }
        let element_maps = element_maps
            .into_iter()
            .map(|m| m.expect("generators reach every element"))
            .collect();
        Ok(PosetAction {
            group,
            poset,
            generator_maps,
            element_maps,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn poset(&self) -> &Arc<GradedPoset> {
        &self.poset
    }

    /// Image of `x` under the `g`-th group element (in sorted element order).
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.element_maps[g][x] as usize
    }

    pub fn element_map(&self, g: usize) -> &[u32] {
        &self.element_maps[g]
    }

    pub fn generator_maps(&self) -> &[Vec<u32>] {
        &self.generator_maps
    }

    /// Orbit index of every element; orbits are numbered by (rank, least member).
    pub fn orbit_ids(&self) -> Vec<usize> {
        let n = self.poset.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for map in &self.generator_maps {
            for (x, &y) in map.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    // Keep the least element as the root.
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let mut reps: Vec<usize> = (0..n).filter(|&x| roots[x] == x).collect();
        reps.sort_by_key(|&r| (self.poset.rank(r), r));
        let mut id_of_root = vec![usize::MAX; n];
        for (i, &r) in reps.iter().enumerate() {
            id_of_root[r] = i;
        }
        roots.into_iter().map(|r| id_of_root[r]).collect()
    }

    /// The same maps acting on the dual poset.
    pub fn dual_action(&self) -> PosetAction {
        PosetAction {
            group: self.group.clone(),
            poset: Arc::new(self.poset.dual()),
            generator_maps: self.generator_maps.clone(),
            element_maps: self.element_maps.clone(),
        }
    }

    /// Group elements fixing `z`, as indices.
    pub fn stabilizer(&self, z: usize) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.act(g, z) == z)
            .collect()
    }
}

/// The action of `G` on subsets of its points.
pub fn induced_bn_action(group: Arc<PermGroup>) -> Result<PosetAction> {
    let n = group.degree();
    if n > BOOLEAN_CAP {
        return Err(Error::TooLarge {
            requested: n,
            limit: BOOLEAN_CAP,
        });
    }
    let poset = Arc::new(GradedPoset::boolean_algebra(n)?);
    let maps = group
        .generators()
        .iter()
        .map(|g| (0..1usize << n).map(|m| g.act_on_mask(m)).collect())
        .collect();
    PosetAction::new(group, poset, maps)
}

/// An action carried over to the edges of its poset.
#[derive(Clone, Debug)]
pub struct EdgeAction {
    pub edges: EdgePoset,
    pub action: PosetAction,
}

/// `g·(x, y) = (gx, gy)` on `E(P)` or `H(P)`.
pub fn action_on_edges(a: &PosetAction, kind: EdgeKind) -> Result<EdgeAction> {
    let edges = edge_poset_of_kind(a.poset(), kind);
    let lift = |map: &[u32]| -> Vec<u32> {
        edges
            .edges
            .iter()
            .map(|e| {
                edges
                    .index_of(map[e.low] as usize, map[e.high] as usize)
                    .expect("automorphisms send covers to covers") as u32
            })
            .collect()
    };
    let generator_maps: Vec<Vec<u32>> = a.generator_maps.iter().map(|m| lift(m)).collect();
    for (j, map) in generator_maps.iter().enumerate() {
        check_automorphism(&edges.poset, map, j)?;
    }
    // Lifting is a homomorphism, so the element table lifts pointwise.
    let element_maps = a.element_maps.iter().map(|m| lift(m)).collect();
    let action = PosetAction {
        group: a.group.clone(),
        poset: Arc::new(edges.poset.clone()),
        generator_maps,
        element_maps,
    };
    Ok(EdgeAction { edges, action })
}

/// `(g, h)·(x, y) = (gx, hy)` on `P × Q`.
pub fn product_action(a: &PosetAction, b: &PosetAction, cap: usize) -> Result<PosetAction> {
    let group = Arc::new(direct_product(a.group(), b.group(), cap)?);
    let poset = Arc::new(a.poset().product(b.poset()));
    let w = b.poset().len();
    let mut maps = Vec::new();
    for m in a.generator_maps() {
        maps.push((0..poset.len()).map(|i| m[i / w] as usize * w + i % w).collect());
    }
    for m in b.generator_maps() {
        maps.push((0..poset.len()).map(|i| i / w * w + m[i % w] as usize).collect());
    }
    PosetAction::new(group, poset, maps)
}

/// `G ≀ S_l` on `P^l`: copy `b` of `G` acts on coordinate `b`, and `S_l`
/// permutes coordinates.
pub fn wreath_action(a: &PosetAction, l: usize, cap: usize) -> Result<PosetAction> {
    let sl = PermGroup::symmetric(l)?;
    let group = Arc::new(wreath(a.group(), &sl, cap)?);
    let base = a.poset().len();
    let poset = Arc::new(a.poset().power(l));
    let digits = |mut i: usize| -> Vec<usize> {
        let mut d = vec![0; l];
        for b in (0..l).rev() {
            d[b] = i % base;
            i /= base;
        }
        d
    };
    let number = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * base + x);
    let mut maps = Vec::new();
    for b in 0..l {
        for m in a.generator_maps() {
            maps.push(
                (0..poset.len())
                    .map(|i| {
                        let mut d = digits(i);
                        d[b] = m[d[b]] as usize;
                        number(&d)
                    })
                    .collect(),
            );
        }
    }
    for s in sl.generators() {
        maps.push(
            (0..poset.len())
                .map(|i| {
                    let d = digits(i);
                    let mut out = vec![0; l];
                    for (b, &x) in d.iter().enumerate() {
                        out[s.apply(b)] = x;
                    }
                    number(&out)
                })
                .collect(),
        );
    }
    PosetAction::new(group, poset, maps)
}
