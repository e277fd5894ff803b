//! Small dense matrices over any [`Ring`].
//!
//! Sizes used here never exceed 3×3, so determinants use cofactor
//! expansion and inverses are `adj(M) · det(M)⁻¹`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows }
    }

    pub fn identity_like(sample: &T, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { sample.one_like() } else { sample.zero_like() })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn map<U: Ring, F: FnMut(&T) -> U>(&self, mut f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
        }
    }

    pub fn try_map<U: Ring, F: FnMut(&T) -> Result<U>>(&self, mut f: F) -> Result<Matrix<U>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows })
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols())
            .map(|j| (0..self.nrows()).map(|i| self.rows[i][j].clone()).collect())
            .collect();
        Self { rows }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with<F: Fn(&T, &T) -> T>(&self, other: &Self, f: F) -> Self {
        assert_eq!(
            (self.nrows(), self.ncols()),
            (other.nrows(), other.ncols()),
            "shape mismatch"
        );
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| f(a, b)).collect())
            .collect();
        Self { rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols(), other.nrows(), "shape mismatch");
        let rows = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| {
                        let mut acc = self.rows[i][0].clone() * other.rows[0][j].clone();
                        for k in 1..self.ncols() {
                            acc = acc + self.rows[i][k].clone() * other.rows[k][j].clone();
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// Drops row `i` and column `j`.
    pub fn minor_matrix(&self, i: usize, j: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match self.nrows() {
            1 => self.rows[0][0].clone(),
            2 => {
                self.rows[0][0].clone() * self.rows[1][1].clone()
                    - self.rows[0][1].clone() * self.rows[1][0].clone()
            }
            n => {
                let mut acc = self.rows[0][0].zero_like();
                for j in 0..n {
                    let term = self.rows[0][j].clone() * self.minor_matrix(0, j).det();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Classical adjoint: `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square(), "adjugate of a non-square matrix");
        let n = self.nrows();
        if n == 1 {
            return Self::identity_like(&self.rows[0][0], 1);
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = self.minor_matrix(j, i).det();
                        if (i + j) % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn inverse(&self) -> Result<Self> {
        let det_inv = self.det().try_inverse().ok_or(Error::Singular)?;
        Ok(self.adjugate().scale(&det_inv))
    }

    /// All `k × k` minors of the matrix (rows and columns chosen in
    /// increasing order).
    pub fn minors(&self, k: usize) -> Vec<T> {
        let row_sets = subsets(self.nrows(), k);
        let col_sets = subsets(self.ncols(), k);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                let rows = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| self.rows[i][j].clone()).collect())
                    .collect();
                out.push(Matrix { rows }.det());
            }
        }
        out
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
