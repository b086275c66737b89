//! Small named posets used throughout the docs and tests.

use crate::poset::GradedPoset;
use crate::tree::RootedTree;

/// Eight elements whose edge poset is graded but whose componentwise edge
/// relation is not.
pub fn fig1() -> GradedPoset {
    GradedPoset::new(
        vec![0, 1, 1, 2, 2, 3, 3, 4],
        vec![
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 6),
            (5, 7),
            (6, 7),
        ],
    )
    .expect("fig1 is graded")
}

/// Self-dual and unitary Peck, with an edge poset of rank vector (3, 2, 3).
pub fn fig2() -> GradedPoset {
    GradedPoset::new(
        vec![0, 0, 1, 1, 2, 2, 3, 3],
        vec![
            (0, 2),
            (0, 3),
            (1, 3),
            (2, 4),
            (3, 5),
            (4, 6),
            (5, 6),
            (5, 7),
        ],
    )
    .expect("fig2 is graded")
}

/// `0 < 1, 2 < 3`.
pub fn diamond() -> GradedPoset {
    GradedPoset::new(vec![0, 1, 1, 2], vec![(0, 1), (0, 2), (1, 3), (2, 3)])
        .expect("diamond is graded")
}

/// Complete binary tree of depth three, leaves `0..8`.
pub fn fig4_tree() -> RootedTree {
    let poset = GradedPoset::new(
        vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 3],
        vec![
            (0, 8),
            (1, 8),
            (2, 9),
            (3, 9),
            (4, 10),
            (5, 10),
            (6, 11),
            (7, 11),
            (8, 12),
            (9, 12),
            (10, 13),
            (11, 13),
            (12, 14),
            (13, 14),
        ],
    )
    .expect("fig4 tree is graded");
    RootedTree::new(poset).expect("fig4 is a rooted tree")
}

/// Ten leaves: two cherries and a node with two triple branches. Leaves
/// `0..4` sit one rank above leaves `4..10`.
pub fn fig5_tree() -> RootedTree {
    let poset = GradedPoset::new(
        vec![1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 2, 3],
        vec![
            (0, 12),
            (1, 12),
            (2, 13),
            (3, 13),
            (4, 10),
            (5, 10),
            (6, 10),
            (7, 11),
            (8, 11),
            (9, 11),
            (10, 14),
            (11, 14),
            (12, 15),
            (13, 15),
            (14, 15),
        ],
    )
    .expect("fig5 tree is graded");
    RootedTree::new(poset).expect("fig5 is a rooted tree")
}
