//! Symmetric integer matrices with exact quadratic-form evaluation.

use num::bigint::BigInt;
use num::traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{Rational, RationalVector};

/// Symmetric n×n integer matrix. Only the upper triangle is stored, so the
/// type is symmetric by construction: reading (i, j) with i > j resolves
/// through entry (j, i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    n: usize,
    upper: Vec<BigInt>, // row-major upper triangle, diagonal included
}

impl SymmetricIntMatrix {
    /// Builds from the row-major upper triangle (n(n+1)/2 entries).
    pub fn from_upper(n: usize, upper: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let expected = n * (n + 1) / 2;
        if upper.len() != expected {
            return Err(Error::EntryCount {
                expected,
                got: upper.len(),
            });
        }
        Ok(Self { n, upper })
    }

    /// Builds from full rows, rejecting non-square or non-symmetric input.
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::EntryCount {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, above) in row.iter().enumerate().skip(i + 1) {
                if *above != rows[j][i] {
                    return Err(Error::NotSymmetric { row: j, col: i });
                }
            }
        }
        let mut upper = Vec::with_capacity(n * (n + 1) / 2);
        for (i, row) in rows.iter().enumerate() {
            upper.extend(row[i..].iter().cloned());
        }
        Ok(Self { n, upper })
    }

    /// Convenience constructor for literal test matrices.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        Self::from_upper(n, vec![BigInt::zero(); n * (n + 1) / 2])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + j
    }

    /// Entry (i, j).
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.n && j < self.n, "matrix index out of range");
        &self.upper[self.idx(i, j)]
    }

    /// Upper-triangle entries in row-major order (the stored encoding order).
    pub fn upper_entries(&self) -> impl Iterator<Item = &BigInt> {
        self.upper.iter()
    }

    /// Full rows, materialized; used for serialization.
    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Largest entry in absolute value; zero only for the zero matrix.
    pub fn max_abs_entry(&self) -> BigInt {
        self.upper
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|e| e.is_zero())
    }
}

fn check_len(n: usize, v: &[Rational]) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok(())
}

/// Exact matrix–vector product Mv.
pub fn mat_vec(m: &SymmetricIntMatrix, v: &[Rational]) -> Result<RationalVector> {
    check_len(m.n(), v)?;
    Ok((0..m.n())
        .map(|i| {
            let mut acc = Rational::zero();
            for (j, vj) in v.iter().enumerate() {
                if !m.get(i, j).is_zero() && !vj.is_zero() {
                    acc += Rational::from_integer(m.get(i, j).clone()) * vj;
                }
            }
            acc
        })
        .collect())
}

/// Exact quadratic form xᵀMx.
pub fn quadratic_form(m: &SymmetricIntMatrix, x: &[Rational]) -> Result<Rational> {
    let mx = mat_vec(m, x)?;
    Ok(x.iter()
        .zip(mx.iter())
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn ones(n: usize) -> RationalVector {
        vec![rat(1); n]
    }

    #[test]
    fn rejects_empty_and_miscounted() {
        assert_eq!(SymmetricIntMatrix::from_rows(&[]), Err(Error::EmptyMatrix));
        assert!(matches!(
            SymmetricIntMatrix::from_upper(2, vec![BigInt::zero(); 2]),
            Err(Error::EntryCount {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn rejects_asymmetric_rows() {
        let err = SymmetricIntMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]);
        assert!(matches!(err, Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn lower_triangle_reads_resolve_to_upper() {
        let m = SymmetricIntMatrix::from_i64_rows(&[&[1, -8], &[-8, 3]]).unwrap();
        assert_eq!(m.get(1, 0), m.get(0, 1));
        assert_eq!(*m.get(1, 0), BigInt::from(-8));
    }

    #[test]
    fn quadratic_form_off_diagonal() {
        // Q((1,1)) = 2·m12 for a hollow matrix
        let m = SymmetricIntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(quadratic_form(&m, &ones(2)).unwrap(), rat(2));
    }

    #[test]
    fn quadratic_form_zero_vector() {
        let m = SymmetricIntMatrix::from_i64_rows(&[&[5, -3], &[-3, 7]]).unwrap();
        assert_eq!(
            quadratic_form(&m, &[rat(0), rat(0)]).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn quadratic_form_adversarial_point() {
        // 16/4 − 2·8/2 + 3 = −1
        let m = SymmetricIntMatrix::from_i64_rows(&[&[16, -8], &[-8, 3]]).unwrap();
        assert_eq!(quadratic_form(&m, &[ratio(1, 2), rat(1)]).unwrap(), rat(-1));
    }

    #[test]
    fn quadratic_form_dimension_mismatch() {
        let m = SymmetricIntMatrix::from_i64_rows(&[&[1]]).unwrap();
        assert!(matches!(
            quadratic_form(&m, &ones(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn max_abs_entry_of_zero_matrix() {
        assert_eq!(
            SymmetricIntMatrix::zeros(3).unwrap().max_abs_entry(),
            BigInt::zero()
        );
    }
}
