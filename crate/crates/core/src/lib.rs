//! Edge posets of finite graded posets, quotients of boolean algebras by
//! permutation groups, and exact checks of the Sperner and Peck properties.
//!
//! ```
//! use edgeposet::{edge_poset, is_unitary_peck, GradedPoset};
//!
//! let b4 = GradedPoset::boolean_algebra(4)?;
//! let e = edge_poset(&b4);
//! assert_eq!(e.poset.rank_vector(), vec![4, 12, 12, 4]);
//! assert!(is_unitary_peck(&e.poset));
//! # Ok::<(), edgeposet::Error>(())
//! ```

pub mod action;
pub mod cct;
pub mod edge;
pub mod error;
pub mod figures;
pub mod flow;
pub mod group;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod partitions;
pub mod peck;
pub mod perm;
pub mod poset;
pub mod quotient;
pub mod random;
pub mod scd;
pub mod sweep;
pub mod tree;

pub use action::{action_on_edges, induced_bn_action, product_action, wreath_action, EdgeAction, PosetAction};
pub use cct::{cct_all, is_cct, is_cct_witness, CctEvidence, CctMethod, CctVerdict, CctWitness};
pub use edge::{
    edge_map, edge_poset, h_bn_decomposition, h_poset, h_to_e_bijection, naive_edge_relation_is_graded,
    EdgeElement, EdgeKind, EdgePoset,
};
pub use error::{Error, Result};
pub use group::{direct_product, left_regular, subgroup_sweep, wreath, PermGroup, DEFAULT_CAP};
pub use iso::{find_isomorphism, is_isomorphic, verify_isomorphism};
pub use matrix::ExactMatrix;
pub use partitions::{nu, p_count, pak_sequence_check, partitions_in_box, young_representative, Partition};
pub use peck::{
    brute_force_antichain_union, is_peck, is_strongly_sperner, is_unitary_peck, lefschetz_power_rank,
    max_k_antichain_union, peck_verdict, rank_profile, PeckReport, PeckVerdict,
};
pub use perm::Permutation;
pub use poset::{CombineMode, GradedPoset, PosetMorphism, BOOLEAN_CAP};
pub use quotient::{complement_self_duality, q_map, quotient, QMap, QuotientPoset};
pub use scd::{scd_boolean, scd_h_boolean, scd_transport, ChainDecomposition};
pub use sweep::{analyze_action, run_sweep, sweep_groups, ActionReport, SweepOutcome};
pub use tree::RootedTree;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/posets.md")]
    mod posets {}
    #[doc = include_str!("../../../book/src/edge-posets.md")]
    mod edge_posets {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/quotients.md")]
    mod quotients {}
    #[doc = include_str!("../../../book/src/peck.md")]
    mod peck {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
