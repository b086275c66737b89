//! One report per group action on a boolean algebra, and the sweep over
//! subgroups of `S_n` that tests whether every `E(B_n/G)` is Peck.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{action_on_edges, induced_bn_action, PosetAction};
use crate::cct::{cct_from_q, is_cct, CctMethod, CctWitness};
use crate::edge::EdgeKind;
use crate::error::{Error, Result};
use crate::group::{subgroup_sweep, PermGroup};
use crate::peck::{peck_verdict, PeckVerdict};
use crate::quotient::{is_induced_boolean, q_map, quotient};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CctVerdicts {
    pub direct: bool,
    pub dual: bool,
    pub q_bijective: bool,
    pub rank_counts: bool,
}

impl CctVerdicts {
    pub fn agree(&self) -> bool {
        self.direct == self.dual && self.dual == self.q_bijective && self.q_bijective == self.rank_counts
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ActionReport {
    /// Generators in 1-indexed cycle notation.
    pub group: String,
    pub degree: usize,
    pub order: usize,
    pub cct: bool,
    pub cct_methods: CctVerdicts,
    pub witness: Option<CctWitness>,
    /// The witness as 0-indexed subsets, when the poset is a boolean algebra.
    pub witness_sets: Option<[Vec<usize>; 3]>,
    pub quotient_ranks: Vec<usize>,
    pub edge_quotient_ranks: Vec<usize>,
    pub quotient_edge_ranks: Vec<usize>,
    pub h_quotient_ranks: Vec<usize>,
    pub q_bijective: bool,
    pub q_is_isomorphism: bool,
    /// Peck checks of `E(P/G)`.
    pub peck: PeckVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

impl ActionReport {
    /// A CCT action with a non-Peck `E(B_n/G)` contradicts a theorem, so it
    /// signals a bug here rather than a mathematical finding.
    pub fn is_inconsistent(&self) -> bool {
        !self.cct_methods.agree() || (self.cct && !self.peck.peck)
    }
}

pub fn mask_to_set(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn analyze_action(a: &PosetAction, timing: bool) -> Result<ActionReport> {
    let start = Instant::now();
    let qm = q_map(a)?;
    let direct = is_cct(a, CctMethod::Direct);
    let dual = is_cct(a, CctMethod::Dual);
    let qb = cct_from_q(a, &qm, CctMethod::QBijective);
    let rc = cct_from_q(a, &qm, CctMethod::RankCounts);
    let h = action_on_edges(a, EdgeKind::H)?;
    let witness = direct.witness();
    let witness_sets = match witness {
        Some(w) if is_induced_boolean(a) => {
            Some([mask_to_set(w.x), mask_to_set(w.y), mask_to_set(w.z)])
        }
        _ => None,
    };
    let peck = peck_verdict(&qm.quotient_edges.poset);
    Ok(ActionReport {
        group: a.group().generator_string(),
        degree: a.group().degree(),
        order: a.group().order(),
        cct: direct.cct,
        cct_methods: CctVerdicts {
            direct: direct.cct,
            dual: dual.cct,
            q_bijective: qb.cct,
            rank_counts: rc.cct,
        },
        witness,
        witness_sets,
        quotient_ranks: qm.quotient.poset.rank_vector(),
        edge_quotient_ranks: qm.edge_quotient.poset.rank_vector(),
        quotient_edge_ranks: qm.quotient_edges.poset.rank_vector(),
        h_quotient_ranks: quotient(&h.action).poset.rank_vector(),
        q_bijective: qm.bijective,
        q_is_isomorphism: qm.isomorphism,
        peck,
        millis: timing.then(|| start.elapsed().as_secs_f64() * 1000.0),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepOutcome {
    pub records: Vec<ActionReport>,
    /// Records whose `E(B_n/G)` is not Peck.
    pub counterexamples: Vec<usize>,
    /// Records that contradict a proved statement.
    pub inconsistencies: Vec<usize>,
}

/// Reports for the induced actions of `groups`, in the given order, computed
/// on `jobs` threads (0 lets the pool decide).
pub fn sweep_groups(groups: Vec<PermGroup>, jobs: usize, timing: bool) -> Result<SweepOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let records = pool.install(|| {
        groups
            .into_par_iter()
            .map(|g| analyze_action(&induced_bn_action(Arc::new(g))?, timing))
            .collect::<Result<Vec<_>>>()
    })?;
    let counterexamples = (0..records.len()).filter(|&i| !records[i].peck.peck).collect();
    let inconsistencies = (0..records.len()).filter(|&i| records[i].is_inconsistent()).collect();
    Ok(SweepOutcome {
        records,
        counterexamples,
        inconsistencies,
    })
}

/// Every conjugacy class of subgroups of `S_n`, `n <= 5`, ordered by group
/// order and then generator string.
pub fn run_sweep(n: usize, jobs: usize, timing: bool) -> Result<SweepOutcome> {
    sweep_groups(subgroup_sweep(n)?, jobs, timing)
}
