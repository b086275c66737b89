//! Common cover transitivity, tested four equivalent ways.
//!
//! An action is CCT when any two lower covers `x, y` of `z` lying in one
//! orbit are related by an element of `Stab(z)`.

use serde::Serialize;

use crate::action::PosetAction;
use crate::quotient::{q_map, QMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CctMethod {
    /// The definition, checked at every element.
    Direct,
    /// The definition on the dual poset: upper covers of a common lower cover.
    Dual,
    /// Injectivity of `q: E(P)/G -> E(P/G)`.
    QBijective,
    /// Equal rank sizes of `E(P)/G` and `E(P/G)`.
    RankCounts,
}

impl CctMethod {
    pub const ALL: [CctMethod; 4] = [
        CctMethod::Direct,
        CctMethod::Dual,
        CctMethod::QBijective,
        CctMethod::RankCounts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CctMethod::Direct => "direct",
            CctMethod::Dual => "dual",
            CctMethod::QBijective => "q-bijective",
            CctMethod::RankCounts => "rank-counts",
        }
    }
}

/// `x` and `y` both cover-related to `z` and in one orbit, with no element
/// of `Stab(z)` carrying `x` to `y`. For the dual method `z` lies below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CctWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CctEvidence {
    Triple(CctWitness),
    RankMismatch {
        rank: usize,
        edge_quotient: usize,
        quotient_edges: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CctVerdict {
    pub method: CctMethod,
    pub cct: bool,
    pub evidence: Option<CctEvidence>,
}

impl CctVerdict {
    pub fn witness(&self) -> Option<CctWitness> {
        match self.evidence {
            Some(CctEvidence::Triple(w)) => Some(w),
            _ => None,
        }
    }
}

/// First failure in the canonical order: `z` ascending, then pairs of lower
/// covers of `z` ascending.
pub fn direct_witness(a: &PosetAction) -> Option<CctWitness> {
    let p = a.poset();
    let orbit = a.orbit_ids();
    for z in 0..p.len() {
        let downs = p.down_covers(z);
        let mut stab: Option<Vec<usize>> = None;
        for (i, &x) in downs.iter().enumerate() {
            for &y in &downs[i + 1..] {
                if orbit[x] != orbit[y] {
                    continue;
                }
                let st = stab.get_or_insert_with(|| a.stabilizer(z));
                if !st.iter().any(|&g| a.act(g, x) == y) {
                    return Some(CctWitness { x, y, z });
                }
            }
        }
    }
    None
}

/// Whether `w` really violates the definition.
pub fn is_cct_witness(a: &PosetAction, w: &CctWitness) -> bool {
    let p = a.poset();
    let orbit = a.orbit_ids();
    w.x != w.y
        && p.is_cover(w.x, w.z)
        && p.is_cover(w.y, w.z)
        && orbit[w.x] == orbit[w.y]
        && !a.stabilizer(w.z).iter().any(|&g| a.act(g, w.x) == w.y)
}

/// A witness triple from two edge orbits with the same image under `q`.
fn q_witness(a: &PosetAction, qm: &QMap) -> Option<CctWitness> {
    let mut first_with_image = vec![usize::MAX; qm.morphism.target().len()];
    for (o, &img) in qm.morphism.image_of().iter().enumerate() {
        if first_with_image[img] == usize::MAX {
            first_with_image[img] = o;
            continue;
        }
        let (x1, y1) = qm.representative_edge(first_with_image[img]);
        let (x2, y2) = qm.representative_edge(o);
        // Move the second edge so that both share the upper end y1.
        let g = (0..a.group().order())
            .find(|&g| a.act(g, y2) == y1)
            .expect("tops lie in one orbit");
        let x2 = a.act(g, x2);
        let (x, y) = (x1.min(x2), x1.max(x2));
        return Some(CctWitness { x, y, z: y1 });
    }
    None
}

pub fn is_cct(a: &PosetAction, method: CctMethod) -> CctVerdict {
    match method {
        CctMethod::Direct | CctMethod::Dual => {
            let w = if method == CctMethod::Direct {
                direct_witness(a)
            } else {
                direct_witness(&a.dual_action())
            };
            CctVerdict {
                method,
                cct: w.is_none(),
                evidence: w.map(CctEvidence::Triple),
            }
        }
        CctMethod::QBijective | CctMethod::RankCounts => {
            let qm = q_map(a).expect("q is defined for every valid action");
            cct_from_q(a, &qm, method)
        }
    }
}

/// The two `q`-based verdicts, reusing an already computed [`QMap`].
pub fn cct_from_q(a: &PosetAction, qm: &QMap, method: CctMethod) -> CctVerdict {
    match method {
        CctMethod::QBijective => {
            let w = if qm.bijective { None } else { q_witness(a, qm) };
            CctVerdict {
                method,
                cct: qm.bijective,
                evidence: w.map(CctEvidence::Triple),
            }
        }
        CctMethod::RankCounts => {
            let left = qm.edge_quotient.poset.rank_vector();
            let right = qm.quotient_edges.poset.rank_vector();
            let mismatch = (0..left.len().max(right.len())).find_map(|r| {
                let (l, q) = (
                    left.get(r).copied().unwrap_or(0),
                    right.get(r).copied().unwrap_or(0),
                );
                (l != q).then_some(CctEvidence::RankMismatch {
                    rank: r,
                    edge_quotient: l,
                    quotient_edges: q,
                })
            });
            CctVerdict {
                method,
                cct: mismatch.is_none(),
                evidence: mismatch,
            }
        }
        _ => is_cct(a, method),
    }
}

/// All four verdicts.
pub fn cct_all(a: &PosetAction) -> Vec<CctVerdict> {
    let qm = q_map(a).expect("q is defined for every valid action");
    CctMethod::ALL
        .iter()
        .map(|&m| match m {
            CctMethod::Direct | CctMethod::Dual => is_cct(a, m),
            _ => cct_from_q(a, &qm, m),
        })
        .collect()
}
