//! Partitions fitting in an `l × m` box and the counts `p_k(l, m, r)`.
//!
//! The box is laid out row-major: point `j` of `{0, .., lm-1}` sits in row
//! `j / m`, column `j % m`.

use std::fmt;

use serde::Serialize;

use crate::action::PosetAction;
use crate::error::{Error, Result};
use crate::group::{wreath, PermGroup, DEFAULT_CAP};
use crate::peck::profile_of;
use crate::quotient::QuotientPoset;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of distinct part sizes, which is also the number of corners.
    pub fn nu(&self) -> usize {
        let mut distinct = self.parts.clone();
        distinct.dedup();
        distinct.len()
    }

    /// The bottom-left justified filling of the box, as a bit mask.
    pub fn justified_mask(&self, m: usize) -> usize {
        self.parts
            .iter()
            .enumerate()
            .fold(0, |mask, (row, &len)| mask | ((1 << len) - 1) << (row * m))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

pub fn nu(lambda: &Partition) -> usize {
    lambda.nu()
}

/// Partitions of `k` with at most `l` parts, each at most `m`, largest
/// first part first.
pub fn partitions_in_box(k: usize, l: usize, m: usize) -> Vec<Partition> {
    fn go(k: usize, l: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if k == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if l == 0 {
            return;
        }
        for a in (1..=max.min(k)).rev() {
            prefix.push(a);
            go(k - a, l - 1, a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, l, m, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `Σ binom(ν(λ), r)` over partitions `λ` of `k` in the `l × m` box.
pub fn p_count(k: usize, l: usize, m: usize, r: usize) -> u128 {
    partitions_in_box(k, l, m)
        .iter()
        .map(|lambda| binomial(lambda.nu(), r))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PakSequence {
    pub l: usize,
    pub m: usize,
    pub r: usize,
    /// `p_k(l, m, r)` for `k = r..=lm`.
    pub sequence: Vec<u128>,
    pub symmetric: bool,
    pub unimodal: bool,
}

pub fn pak_sequence_check(l: usize, m: usize, r: usize) -> PakSequence {
    let sequence: Vec<u128> = (r..=l * m).map(|k| p_count(k, l, m, r)).collect();
    let as_usize: Vec<usize> = sequence.iter().map(|&v| v as usize).collect();
    let prof = profile_of(&as_usize);
    PakSequence {
        l,
        m,
        r,
        sequence,
        symmetric: prof.symmetric,
        unimodal: prof.unimodal,
    }
}

/// `S_m ≀ S_l` acting on the `l × m` box.
pub fn box_group(l: usize, m: usize) -> Result<PermGroup> {
    wreath(&PermGroup::symmetric(m)?, &PermGroup::symmetric(l)?, DEFAULT_CAP)
}

/// Reads orbits of `S_m ≀ S_l` on `B_{lm}` as Young diagrams.
#[derive(Clone, Debug)]
pub struct YoungQuotient<'a> {
    l: usize,
    m: usize,
    quotient: &'a QuotientPoset,
}

impl<'a> YoungQuotient<'a> {
    pub fn new(
        action: &PosetAction,
        quotient: &'a QuotientPoset,
        l: usize,
        m: usize,
    ) -> Result<Self> {
        if **action.group() != box_group(l, m)? || action.poset().len() != 1 << (l * m) {
            return Err(Error::WrongGroup);
        }
        Ok(YoungQuotient {
            l,
            m,
            quotient,
        })
    }

    /// Sorted row counts of the orbit's least member, checked against the
    /// orbit of the justified filling.
    pub fn representative(&self, orbit: usize) -> Partition {
        let rep = self.quotient.representative(orbit);
        let rows = (0..self.l)
            .map(|row| (rep >> (row * self.m) & ((1 << self.m) - 1)).count_ones() as usize)
            .collect();
        let lambda = Partition::new(rows);
        let justified = lambda.justified_mask(self.m);
        assert_eq!(
            self.quotient.orbit_of[justified], orbit,
            "justified filling of {lambda} lies in another orbit"
        );
        lambda
    }
}

pub fn young_representative(
    action: &PosetAction,
    quotient: &QuotientPoset,
    orbit: usize,
    l: usize,
    m: usize,
) -> Result<Partition> {
    Ok(YoungQuotient::new(action, quotient, l, m)?.representative(orbit))
}
