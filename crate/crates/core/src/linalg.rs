//! Exact Gaussian elimination over an arbitrary field, shared by the
//! cyclotomic kernel computations and the rational matrix inverses.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Minimal field interface needed by row reduction.
pub trait FieldElem: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse. Callers only invert nonzero pivots.
    fn inv(&self) -> Self;
}

impl FieldElem for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        <BigRational as One>::one() / self
    }
}

/// Reduce `rows` to row echelon form in place; returns the pivot column of
/// each nonzero row, in order.
pub fn row_reduce<F: FieldElem>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let inv = rows[row][col].inv();
        for c in col..ncols {
            rows[row][c] = rows[row][c].mul(&inv);
        }
        for r in 0..nrows {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = factor.mul(&rows[row][c]);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    pivots
}

/// Basis of the right null space of the matrix given as `rows` (each of
/// length `ncols`). The basis vectors satisfy `m v = 0` exactly.
pub fn kernel_basis<F: FieldElem>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    for r in &rows {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let pivots = row_reduce(&mut rows);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot entry is 1, so the pivot variable is minus the free column entry
            v[pc] = F::zero().sub(&rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Solve `a x = b` for one exact solution, if the system is consistent.
pub fn solve<F: FieldElem>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<F>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    // inconsistent iff a pivot lands in the augmented column
    if pivots.last().is_some_and(|&c| c == ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][ncols].clone();
    }
    Some(x)
}

/// Rank of the matrix given as rows.
pub fn rank<F: FieldElem>(mut rows: Vec<Vec<F>>) -> usize {
    row_reduce(&mut rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let rows = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert!(kernel_basis(rows, 2).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let rows = vec![vec![q(0), q(0), q(0)], vec![q(0), q(0), q(0)]];
        assert_eq!(kernel_basis(rows, 3).len(), 3);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        let x = solve(&a, &[q(3), q(6)]).unwrap();
        assert_eq!(&x[0] + q(2) * &x[1], q(3));
        assert!(solve(&a, &[q(3), q(7)]).is_none());
    }
}
