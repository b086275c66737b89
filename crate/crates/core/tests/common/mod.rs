#![allow(dead_code)]

use std::sync::Arc;

use edgeposet::group::tables;
use edgeposet::{
    direct_product, induced_bn_action, left_regular, product_action, wreath, wreath_action,
    PermGroup, Permutation, PosetAction, DEFAULT_CAP,
};

pub fn perm(n: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(s, n).unwrap()
}

pub fn bn(g: PermGroup) -> PosetAction {
    induced_bn_action(Arc::new(g)).unwrap()
}

pub fn z2k(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::elementary_abelian_2(n, gens.iter().map(|s| perm(n, s)).collect()).unwrap()
}

/// Embeddings of `Z_2^k` for `k = 1, 2, 3`, several per `k`.
pub fn z2_embeddings() -> Vec<(String, usize, PermGroup)> {
    let list: Vec<(usize, usize, Vec<&str>)> = vec![
        (1, 2, vec!["(1 2)"]),
        (1, 3, vec!["(1 2)"]),
        (1, 4, vec!["(1 2)(3 4)"]),
        (1, 6, vec!["(1 2)(3 4)(5 6)"]),
        (2, 4, vec!["(1 2)", "(3 4)"]),
        (2, 4, vec!["(1 2)(3 4)", "(1 3)(2 4)"]),
        (2, 5, vec!["(1 2)(3 4)", "(1 3)(2 4)"]),
        (2, 6, vec!["(1 2)", "(3 4)(5 6)"]),
        (3, 6, vec!["(1 2)", "(3 4)", "(5 6)"]),
        (3, 6, vec!["(1 2)(3 4)", "(1 3)(2 4)", "(5 6)"]),
        (3, 8, vec!["(1 2)", "(3 4)", "(5 6)(7 8)"]),
        (3, 8, vec!["(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)(5 7)(6 8)", "(1 5)(2 6)(3 7)(4 8)"]),
    ];
    list.into_iter()
        .map(|(k, n, gens)| (format!("Z2^{k} on B_{n} by {}", gens.join(",")), k, z2k(n, &gens)))
        .collect()
}

/// A mix of CCT and non-CCT actions: named families, products, wreaths,
/// left-regular actions, and actions on product posets.
pub fn battery() -> Vec<(String, PosetAction)> {
    let mut out: Vec<(String, PosetAction)> = Vec::new();
    let mut push = |name: String, a: PosetAction| out.push((name, a));
    for n in 1..=5 {
        push(format!("S_{n} on B_{n}"), bn(PermGroup::symmetric(n).unwrap()));
    }
    for n in 3..=7 {
        push(format!("C_{n} on B_{n}"), bn(PermGroup::cyclic(n).unwrap()));
    }
    for n in 3..=9 {
        push(format!("D_{} on B_{n}", 2 * n), bn(PermGroup::dihedral(n).unwrap()));
    }
    push("trivial on B_3".into(), bn(PermGroup::trivial(3)));
    for n in 2..=3 {
        push(format!("hyperoctahedral({n})"), bn(PermGroup::hyperoctahedral(n).unwrap()));
    }
    for (name, _, g) in z2_embeddings().into_iter().take(6) {
        push(name, bn(g));
    }
    for (name, t) in tables::groups_up_to_order_8() {
        push(format!("left-regular {name}"), bn(left_regular(&t).unwrap()));
    }
    let s2 = PermGroup::symmetric(2).unwrap();
    let s3 = PermGroup::symmetric(3).unwrap();
    let c3 = PermGroup::cyclic(3).unwrap();
    push("S_2 x C_3 on B_5".into(), bn(direct_product(&s2, &c3, DEFAULT_CAP).unwrap()));
    push("S_2 wr S_2 on B_4".into(), bn(wreath(&s2, &s2, DEFAULT_CAP).unwrap()));
    push("S_3 wr S_2 on B_6".into(), bn(wreath(&s3, &s2, DEFAULT_CAP).unwrap()));
    push("C_3 wr S_2 on B_6".into(), bn(wreath(&c3, &s2, DEFAULT_CAP).unwrap()));

    let s2b2 = bn(s2.clone());
    let s3b3 = bn(s3.clone());
    let c3b3 = bn(c3.clone());
    let triv1 = bn(PermGroup::trivial(1));
    push("(S_2 on B_2) x (S_2 on B_2)".into(), product_action(&s2b2, &s2b2, DEFAULT_CAP).unwrap());
    push("(C_3 on B_3) x (trivial on B_1)".into(), product_action(&c3b3, &triv1, DEFAULT_CAP).unwrap());
    push("(S_3 on B_3) x (S_2 on B_2)".into(), product_action(&s3b3, &s2b2, DEFAULT_CAP).unwrap());
    push("(S_2 on B_2) wr S_2".into(), wreath_action(&s2b2, 2, DEFAULT_CAP).unwrap());
    push("(S_3 on B_3) wr S_2".into(), wreath_action(&s3b3, 2, DEFAULT_CAP).unwrap());
    push("(C_3 on B_3) wr S_2".into(), wreath_action(&c3b3, 2, DEFAULT_CAP).unwrap());
    out
}
