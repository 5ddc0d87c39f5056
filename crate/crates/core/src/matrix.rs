//! Dense matrices over the rationals, sized for symplectic groups of rank
//! at most a handful. Entries are exact; inverses go through the shared
//! Gaussian elimination.

use crate::cyclotomic::Rat;
use crate::dyadic::{min_valuation, Valuation};
use crate::linalg;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::Mul;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(r > 0 && c > 0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, r: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * r).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc += &self[(r, c)] * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of square matrices only");
        let n = self.rows;
        let mut rows: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rat> = (0..n).map(|c| self[(r, c)].clone()).collect();
                for k in 0..n {
                    row.push(if k == r { Rat::one() } else { Rat::zero() });
                }
                row
            })
            .collect();
        let pivots = linalg::row_reduce(&mut rows);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut out = RatMatrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = rows[r][n + c].clone();
            }
        }
        Some(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self[(r, c)].is_one()
                    } else {
                        self[(r, c)].is_zero()
                    }
                })
            })
    }

    /// Minimum p-adic valuation over all entries; `Infinite` for zero.
    pub fn min_valuation(&self, p: u32) -> Valuation {
        min_valuation(&self.data, p)
    }

    /// All entries lie in `Z_p`.
    pub fn is_p_integral(&self, p: u32) -> bool {
        self.min_valuation(p).at_least(0)
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RatMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    if !rhs[(k, c)].is_zero() {
                        let delta = &self[(r, k)] * &rhs[(k, c)];
                        out[(r, c)] += delta;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)].to_string()).collect())
            .collect();
        strings.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{rat, ratio};

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(3), ratio(1, 2)]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let singular = RatMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn valuation_of_entries() {
        let m = RatMatrix::from_rows(vec![vec![rat(4), ratio(1, 2)], vec![rat(3), rat(0)]]);
        assert_eq!(m.min_valuation(2), Valuation::Finite(-1));
        assert!(!m.is_p_integral(2));
    }
}
