//! Symmetric chain decompositions.

use serde::Serialize;

use crate::edge::h_bn_decomposition;
use crate::error::{Error, Result};
use crate::poset::{GradedPoset, PosetMorphism, BOOLEAN_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    /// Checks that the chains partition `p`, climb by covers, and sit
    /// symmetrically about the middle rank of `p`.
    pub fn validate(&self, p: &GradedPoset) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        let mut seen = vec![false; p.len()];
        let top = p.max_rank().unwrap_or(0);
        for (c, chain) in self.chains.iter().enumerate() {
            let (Some(&first), Some(&last)) = (chain.first(), chain.last()) else {
                return bad(format!("chain {c} is empty"));
            };
            for &x in chain {
                if x >= p.len() {
                    return bad(format!("chain {c} mentions element {x}"));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return bad(format!("element {x} lies on two chains"));
                }
            }
            if let Some(w) = chain.windows(2).find(|w| !p.is_cover(w[0], w[1])) {
                return bad(format!("chain {c} skips from {} to {}", w[0], w[1]));
            }
            if p.rank(first) + p.rank(last) != top {
                return bad(format!(
                    "chain {c} runs from rank {} to rank {}, not symmetric about {top}/2",
                    p.rank(first),
                    p.rank(last)
                ));
            }
        }
        if let Some(x) = seen.iter().position(|&s| !s) {
            return bad(format!("element {x} is on no chain"));
        }
        Ok(())
    }

    /// Number of chains starting at each rank.
    pub fn start_rank_counts(&self, p: &GradedPoset) -> Vec<usize> {
        let mut counts = vec![0; p.rank_vector().len()];
        for c in &self.chains {
            counts[p.rank(c[0])] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }
}

/// Unmatched `(` positions of `mask` (members read as `)`), or `None` when
/// some `)` is unmatched.
fn unmatched_opens(mask: usize, n: usize) -> Option<Vec<usize>> {
    let mut open = Vec::new();
    for i in 0..n {
        if mask >> i & 1 == 1 {
            open.pop()?;
        } else {
            open.push(i);
        }
    }
    Some(open)
}

/// The bracketing decomposition of `B_n`: a chain starts at each subset with
/// no unmatched `)` and grows by filling its unmatched `(` left to right.
pub fn scd_boolean(n: usize) -> Result<ChainDecomposition> {
    if n > BOOLEAN_CAP {
        return Err(Error::TooLarge {
            requested: n,
            limit: BOOLEAN_CAP,
        });
    }
    let mut chains = Vec::new();
    for start in 0..1usize << n {
        if let Some(opens) = unmatched_opens(start, n) {
            let mut chain = vec![start];
            let mut x = start;
            for i in opens {
                x |= 1 << i;
                chain.push(x);
            }
            chains.push(chain);
        }
    }
    Ok(ChainDecomposition { chains })
}

/// A decomposition of `H(B_n)` put together from one bracketing
/// decomposition of `B_{n-1}` per component.
pub fn scd_h_boolean(n: usize) -> Result<ChainDecomposition> {
    let d = h_bn_decomposition(n)?;
    let block = scd_boolean(n - 1)?;
    let size = 1usize << (n - 1);
    let mut preimage = vec![0; d.witness.len()];
    for (e, &w) in d.witness.iter().enumerate() {
        preimage[w] = e;
    }
    let chains = (0..n)
        .flat_map(|i| {
            block
                .chains
                .iter()
                .map(|c| c.iter().map(|&x| preimage[i * size + x]).collect())
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(ChainDecomposition { chains })
}

/// Image of a decomposition under a bijective morphism, checked against the
/// target.
pub fn scd_transport(d: &ChainDecomposition, f: &PosetMorphism) -> Result<ChainDecomposition> {
    if !f.is_bijective() {
        return Err(Error::InvalidMorphism("transport needs a bijective morphism".into()));
    }
    let target = f.target();
    let chains: Vec<Vec<usize>> = d
        .chains
        .iter()
        .map(|c| c.iter().map(|&x| f.apply(x)).collect())
        .collect();
    for (i, c) in chains.iter().enumerate() {
        if c.windows(2).any(|w| !target.is_cover(w[0], w[1])) {
            return Err(Error::ImageChainNotSaturated { chain: i });
        }
    }
    let out = ChainDecomposition { chains };
    out.validate(target)?;
    Ok(out)
}
