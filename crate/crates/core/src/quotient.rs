//! Quotient posets `P/G` and the comparison map `q: E(P)/G -> E(P/G)`.

use std::sync::Arc;

use crate::action::{action_on_edges, EdgeAction, PosetAction};
use crate::edge::{edge_poset, EdgeKind, EdgePoset};
use crate::error::{Error, Result};
use crate::iso::verify_isomorphism;
use crate::poset::{GradedPoset, PosetMorphism};

#[derive(Clone, Debug)]
pub struct QuotientPoset {
    /// Orbit index of every base element.
    pub orbit_of: Vec<usize>,
    /// Members of each orbit, ascending; the first is the representative.
    pub orbits: Vec<Vec<usize>>,
    pub poset: GradedPoset,
}

impl QuotientPoset {
    pub fn representative(&self, orbit: usize) -> usize {
        self.orbits[orbit][0]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Orbits ordered by (rank, least member); `O ⋖ O'` whenever some base cover
/// runs from `O` to `O'`.
pub fn quotient(a: &PosetAction) -> QuotientPoset {
    let base = a.poset();
    let orbit_of = a.orbit_ids();
    let count = orbit_of.iter().max().map_or(0, |m| m + 1);
    let mut orbits = vec![Vec::new(); count];
    for (x, &o) in orbit_of.iter().enumerate() {
        orbits[o].push(x);
    }
    let ranks = orbits.iter().map(|o| base.rank(o[0])).collect();
    let mut covers: Vec<(usize, usize)> = base
        .covers()
        .iter()
        .map(|&(x, y)| (orbit_of[x], orbit_of[y]))
        .collect();
    covers.sort_unstable();
    covers.dedup();
    let poset = GradedPoset::new(ranks, covers).expect("quotient of a graded action is graded");
    QuotientPoset {
        orbit_of,
        orbits,
        poset,
    }
}

/// Everything built while comparing `E(P)/G` with `E(P/G)`.
#[derive(Clone, Debug)]
pub struct QMap {
    pub edge_action: EdgeAction,
    /// `E(P)/G`.
    pub edge_quotient: QuotientPoset,
    /// `P/G`.
    pub quotient: QuotientPoset,
    /// `E(P/G)`.
    pub quotient_edges: EdgePoset,
    pub morphism: PosetMorphism,
    pub bijective: bool,
    pub isomorphism: bool,
}

impl QMap {
    /// Base edge `(low, high)` representing an orbit of `E(P)/G`.
    pub fn representative_edge(&self, orbit: usize) -> (usize, usize) {
        let e = self.edge_action.edges.edge(self.edge_quotient.representative(orbit));
        (e.low, e.high)
    }
}

/// `q(G(x, y)) = (Gx, Gy)`. Always a surjective morphism.
pub fn q_map(a: &PosetAction) -> Result<QMap> {
    let edge_action = action_on_edges(a, EdgeKind::E)?;
    let edge_quotient = quotient(&edge_action.action);
    let base_quotient = quotient(a);
    let quotient_edges = edge_poset(&base_quotient.poset);
    let image_of = edge_quotient
        .orbits
        .iter()
        .map(|o| {
            let e = edge_action.edges.edge(o[0]);
            let (low, high) = (base_quotient.orbit_of[e.low], base_quotient.orbit_of[e.high]);
            quotient_edges
                .index_of(low, high)
                .ok_or(Error::ImageNotCover { low, high })
        })
        .collect::<Result<Vec<_>>>()?;
    let morphism = PosetMorphism::new(
        Arc::new(edge_quotient.poset.clone()),
        Arc::new(quotient_edges.poset.clone()),
        image_of,
    )?;
    let bijective = morphism.is_bijective();
    let isomorphism = morphism.is_isomorphism();
    Ok(QMap {
        edge_action,
        edge_quotient,
        quotient: base_quotient,
        quotient_edges,
        morphism,
        bijective,
        isomorphism,
    })
}

/// Complementation witnesses for `E(B_n/G) ≅ E(B_n/G)^op` and
/// `E(B_n)/G ≅ (E(B_n)/G)^op`. Each map sends an element of the poset to
/// an element of its dual.
#[derive(Clone, Debug)]
pub struct ComplementDuality {
    pub edges_of_quotient: Vec<usize>,
    pub edges_of_quotient_holds: bool,
    pub quotient_of_edges: Vec<usize>,
    pub quotient_of_edges_holds: bool,
}

impl ComplementDuality {
    pub fn holds(&self) -> bool {
        self.edges_of_quotient_holds && self.quotient_of_edges_holds
    }
}

/// Checks that `a` is the subset action of its group on `B_n`.
pub fn is_induced_boolean(a: &PosetAction) -> bool {
    let n = a.group().degree();
    a.poset().len() == 1 << n
        && a.poset().ranks().iter().enumerate().all(|(m, &r)| m.count_ones() as usize == r)
        && a
            .group()
            .generators()
            .iter()
            .zip(a.generator_maps())
            .all(|(g, map)| map.iter().enumerate().all(|(m, &y)| g.act_on_mask(m) == y as usize))
}

pub fn complement_self_duality(a: &PosetAction) -> Result<ComplementDuality> {
    if !is_induced_boolean(a) {
        return Err(Error::NotBoolean);
    }
    let full = (1usize << a.group().degree()) - 1;
    let qm = q_map(a)?;

    // (Gx, Gy) goes to (G(y^c), G(x^c)).
    let q = &qm.quotient;
    let qe = &qm.quotient_edges;
    let comp_orbit = |o: usize| q.orbit_of[full ^ q.representative(o)];
    let edges_of_quotient: Vec<usize> = qe
        .edges
        .iter()
        .map(|e| qe.index_of(comp_orbit(e.high), comp_orbit(e.low)).expect("complement reverses covers"))
        .collect();
    let edges_of_quotient_holds =
        verify_isomorphism(&qe.poset, &qe.poset.dual(), &edges_of_quotient);

    // G(x, y) goes to G(y^c, x^c).
    let eq = &qm.edge_quotient;
    let edges = &qm.edge_action.edges;
    let quotient_of_edges: Vec<usize> = eq
        .orbits
        .iter()
        .map(|o| {
            let e = edges.edge(o[0]);
            let flipped = edges
                .index_of(full ^ e.high, full ^ e.low)
                .expect("complement reverses covers");
            eq.orbit_of[flipped]
        })
        .collect();
    let quotient_of_edges_holds =
        verify_isomorphism(&eq.poset, &eq.poset.dual(), &quotient_of_edges);

    Ok(ComplementDuality {
        edges_of_quotient,
        edges_of_quotient_holds,
        quotient_of_edges,
        quotient_of_edges_holds,
    })
}
