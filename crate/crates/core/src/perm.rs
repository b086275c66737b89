//! Permutations of `{0, .., n-1}`.
//!
//! Composition follows function notation: `g.compose(h)` applies `h` first.
//! Cycle strings are 1-indexed, `"(1 2 3)(4 5)"`; the identity prints as `"()"`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::from_images(images.into_iter().map(|i| i as usize).collect())
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {i} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("image {i} repeated")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation of degree `n` from 0-indexed cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} out of range for degree {n}",
                        a + 1
                    )));
                }
                if std::mem::replace(&mut used[a], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears in two cycles",
                        a + 1
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// A transposition of `a` and `b`.
    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Non-trivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses a 1-indexed cycle string such as `"(1 2 3)(4 5)"` into a
    /// permutation of degree `n`. Commas may separate points.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let v: usize = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))?;
                    if v == 0 {
                        return Err(Error::Parse(format!("points are 1-indexed in {s:?}")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Image of a bit-mask subset of the points.
    pub fn act_on_mask(&self, mask: usize) -> usize {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << self.images[i];
            m &= m - 1;
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let g = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let h = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let gh = g.compose(&h);
        assert_eq!(gh.apply(0), g.apply(h.apply(0)));
        assert_eq!(gh.images(), vec![2, 1, 0]);
    }

    #[test]
    fn inverse_and_order() {
        let g = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.order(), 6);
        assert_eq!(Permutation::identity(3).order(), 1);
    }

    #[test]
    fn cycle_strings_round_trip() {
        let g = Permutation::parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(g.images(), vec![1, 2, 0, 4, 3, 5]);
        assert_eq!(g.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(Permutation::parse_cycles("()", 4).unwrap().is_identity());
        assert_eq!(Permutation::parse_cycles("(1,3)", 3).unwrap().images(), vec![2, 1, 0]);
    }

    #[test]
    fn bad_cycle_strings() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("1 2", 3).is_err());
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }

    #[test]
    fn mask_action() {
        let r = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(r.act_on_mask(0b0011), 0b0110);
        assert_eq!(r.act_on_mask(0b1000), 0b0001);
        assert_eq!(r.act_on_mask(0), 0);
    }

    #[test]
    fn serde_is_image_array() {
        let g = Permutation::from_images(vec![2, 0, 1]).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[2,0,1]");
        let back: Permutation = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
