//! Matrices over a possibly noncommutative algebra.
//!
//! The product is the usual one, `(A B)_ij = sum_l A_il B_lj`, with the left
//! factor's entries kept on the left. An inverse is always two-sided.

use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> NcMatrix<E> {
    /// Row-major entries; fails unless `entries.len() == rows * cols` and both
    /// dimensions are positive.
    pub fn new(rows: usize, cols: usize, entries: Vec<E>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(NcMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        NcMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Result<Self> {
        let entries = (0..rows * cols).map(|t| f(t / cols, t % cols)).collect();
        NcMatrix::new(rows, cols, entries)
    }

    pub fn identity<A: Algebra<Elem = E>>(alg: &A, n: usize) -> Result<Self> {
        NcMatrix::from_fn(n, n, |i, j| if i == j { alg.one() } else { alg.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    fn check_entries<A: Algebra<Elem = E>>(&self, alg: &A) -> Result<()> {
        self.entries.iter().try_for_each(|e| alg.check(e))
    }

    pub fn is_identity<A: Algebra<Elem = E>>(&self, alg: &A) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { alg.is_one(e) } else { alg.is_zero(e) }
                })
            })
    }

    pub fn mul<A: Algebra<Elem = E>>(&self, alg: &A, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        self.check_entries(alg)?;
        rhs.check_entries(alg)?;
        NcMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(alg.zero(), |acc, l| {
                alg.add(&acc, &alg.mul(self.get(i, l), rhs.get(l, j)))
            })
        })
    }

    /// Two-sided inverse by Gauss-Jordan elimination with left row
    /// operations. The pivot in each column is the first entry, scanning
    /// downwards, that `try_invert` accepts. Both products are checked
    /// against the identity before returning.
    pub fn inverse<A: Algebra<Elem = E>>(&self, alg: &A) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        self.check_entries(alg)?;
        let n = self.rows;
        let mut left: Vec<Vec<E>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut right: Vec<Vec<E>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { alg.one() } else { alg.zero() }).collect())
            .collect();

        for col in 0..n {
            let (pivot_row, pivot_inv) = (col..n)
                .find_map(|r| alg.try_invert(&left[r][col]).ok().map(|inv| (r, inv)))
                .ok_or_else(|| Error::NotInvertible(format!("no unit pivot in column {}", col + 1)))?;
            left.swap(col, pivot_row);
            right.swap(col, pivot_row);
            for v in left[col].iter_mut().chain(right[col].iter_mut()) {
                *v = alg.mul(&pivot_inv, v);
            }
            for r in 0..n {
                if r == col || alg.is_zero(&left[r][col]) {
                    continue;
                }
                let factor = left[r][col].clone();
                for c in 0..n {
                    left[r][c] = alg.sub(&left[r][c], &alg.mul(&factor, &left[col][c]));
                    right[r][c] = alg.sub(&right[r][c], &alg.mul(&factor, &right[col][c]));
                }
            }
        }

        let inv = NcMatrix::from_rows(right)?;
        if !inv.mul(alg, self)?.is_identity(alg) || !self.mul(alg, &inv)?.is_identity(alg) {
            return Err(Error::NotInvertible(
                "elimination produced only a one-sided inverse".into(),
            ));
        }
        Ok(inv)
    }
}
