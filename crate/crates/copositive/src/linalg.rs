//! Exact dense linear algebra over the rationals.
//!
//! Elimination pivots on the first nonzero entry in column order, which keeps
//! every result deterministic; `BigRational` reduces eagerly after each
//! operation, so intermediate bit growth stays polynomial.

use num::traits::{One, Zero};

use crate::rational::Rational;

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of a square solve: the exact determinant, and the solution when
/// the matrix is nonsingular.
#[derive(Clone, Debug)]
pub struct SquareSolve {
    pub det: Rational,
    pub solution: Option<Vec<Rational>>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form; returns the (row, col) pivot positions.
    fn into_rref(mut self) -> (Self, Vec<(usize, usize)>) {
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(prow, r);
            let pivot = self.at(prow, col).clone();
            for c in col..self.cols {
                let v = self.at(prow, c) / &pivot;
                self.set(prow, c, v);
            }
            for r2 in 0..self.rows {
                if r2 == prow || self.at(r2, col).is_zero() {
                    continue;
                }
                let factor = self.at(r2, col).clone();
                for c in col..self.cols {
                    let v = self.at(r2, c) - &factor * self.at(prow, c);
                    self.set(r2, c, v);
                }
            }
            pivots.push((prow, col));
            prow += 1;
        }
        (self, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().into_rref().1.len()
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        self.solve_square(&vec![Rational::zero(); self.rows]).det
    }

    /// Solves Ax = b for square A by forward elimination and
    /// back-substitution, reporting the determinant along the way.
    pub fn solve_square(&self, rhs: &[Rational]) -> SquareSolve {
        let n = self.rows;
        assert_eq!(self.rows, self.cols, "square solve needs a square matrix");
        assert_eq!(rhs.len(), n, "right-hand side length mismatch");
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..n).map(|c| self.at(r, c).clone()).collect();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !aug[r][k].is_zero()) else {
                return SquareSolve {
                    det: Rational::zero(),
                    solution: None,
                };
            };
            if p != k {
                aug.swap(k, p);
                det = -det;
            }
            det *= aug[k][k].clone();
            let (upper, lower) = aug.split_at_mut(k + 1);
            let pivot_row = &upper[k];
            for row in lower.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let factor = &row[k] / &pivot_row[k];
                for (cell, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                    *cell -= &factor * p;
                }
            }
        }
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = aug[i][n].clone();
            for j in (i + 1)..n {
                acc -= &aug[i][j] * &x[j];
            }
            x[i] = acc / &aug[i][i];
        }
        SquareSolve {
            det,
            solution: Some(x),
        }
    }

    /// A solution of Ax = b with every free variable pinned to zero, or
    /// `None` when the system is inconsistent. A need not be square.
    pub fn solve_free_zero(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c == self.cols {
                rhs[r].clone()
            } else {
                self.at(r, c).clone()
            }
        });
        let (reduced, pivots) = aug.into_rref();
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return None; // pivot in the right-hand side column
        }
        let mut x = vec![Rational::zero(); self.cols];
        for &(prow, pcol) in &pivots {
            x[pcol] = reduced.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// A nonzero kernel vector, or `None` when the columns are independent.
    pub fn kernel_vector(&self) -> Option<Vec<Rational>> {
        let (reduced, pivots) = self.clone().into_rref();
        if pivots.len() == self.cols {
            return None;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free = (0..self.cols).find(|c| !pivot_cols.contains(c))?;
        let mut k = vec![Rational::zero(); self.cols];
        k[free] = Rational::one();
        for &(prow, pcol) in &pivots {
            k[pcol] = -reduced.at(prow, free).clone();
        }
        Some(k)
    }
}
