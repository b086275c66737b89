//! Dense matrices over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned().map(Into::into));
        }
        ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
                continue;
            };
            if pivot != rank {
                for j in 0..cols {
                    m.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let p = m[rank * cols + c].clone();
            for r in rank + 1..rows {
                let f = m[r * cols + c].clone();
                for j in c + 1..cols {
                    let v = (&p * &m[r * cols + j] - &f * &m[rank * cols + j]) / &prev;
                    m[r * cols + j] = v;
                }
                m[r * cols + c] = BigInt::zero();
            }
            prev = p;
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        f.debug_struct("ExactMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &rows)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        assert_eq!(ExactMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(ExactMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).rank(), 1);
        assert_eq!(ExactMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).rank(), 2);
        let m = ExactMatrix::from_rows(&[vec![0, 2, 4], vec![0, 1, 2], vec![3, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(ExactMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn product() {
        let a = ExactMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = ExactMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), ExactMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.mul(&ExactMatrix::identity(2)), a);
    }

    #[test]
    fn large_entries_stay_exact() {
        let big: BigInt = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let mut m = ExactMatrix::identity(2);
        m.set(0, 1, big.clone());
        m.set(1, 0, big.clone());
        m.set(1, 1, &big * &big);
        // Rows (1, b) and (b, b^2) are proportional.
        assert_eq!(m.rank(), 1);
    }
}
