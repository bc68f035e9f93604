//! Independent exact minimizer: exhaustive face enumeration of the box.
//!
//! Every face of [0,1]^n fixes each coordinate to 0, to 1, or leaves it
//! free — 3^n assignments in total. A box minimizer either sits at a vertex
//! or in the relative interior of a face where the restricted gradient
//! vanishes. Faces whose restricted stationarity matrix is singular can be
//! skipped: moving along a kernel direction keeps the value constant until a
//! subface is hit, so an equal-value minimizer survives into faces that are
//! enumerated anyway. This module is deliberately exponential and exact; it
//! is the ground truth the enumeration route is checked against.

use num::traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exec;
use crate::lcp::{kkt_witness, Method, MinimizationResult};
use crate::linalg::RatMatrix;
use crate::matrix::{quadratic_form, SymmetricIntMatrix};
use crate::rational::{rat, Rational, RationalVector};

/// Faces grow as 3^n; this keeps the oracle desk-scale.
pub const DEFAULT_FACE_LIMIT: usize = 10;

/// Per-coordinate face tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceTag {
    Zero,
    One,
    Free,
}

/// One of the 3^n faces of the unit box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceAssignment {
    tags: Vec<FaceTag>,
}

impl FaceAssignment {
    /// Decodes a base-3 face index: digit 0 ↦ fixed-0, 1 ↦ fixed-1, 2 ↦ free.
    pub fn from_index(n: usize, mut index: usize) -> Self {
        let mut tags = Vec::with_capacity(n);
        for _ in 0..n {
            tags.push(match index % 3 {
                0 => FaceTag::Zero,
                1 => FaceTag::One,
                _ => FaceTag::Free,
            });
            index /= 3;
        }
        Self { tags }
    }

    pub fn count(n: usize) -> Option<usize> {
        3usize.checked_pow(u32::try_from(n).ok()?)
    }

    pub fn tags(&self) -> &[FaceTag] {
        &self.tags
    }
}

fn face_candidate(
    m: &SymmetricIntMatrix,
    face: &FaceAssignment,
) -> Option<(Rational, RationalVector)> {
    let n = m.n();
    let mut x: RationalVector = face
        .tags()
        .iter()
        .map(|tag| match tag {
            FaceTag::One => rat(1),
            _ => Rational::zero(),
        })
        .collect();
    let free: Vec<usize> = (0..n)
        .filter(|&i| face.tags()[i] == FaceTag::Free)
        .collect();
    if !free.is_empty() {
        // interior stationarity: M[F,F]·x_F = −Σ_{j fixed to 1} M[F,j]
        let system = RatMatrix::from_fn(free.len(), free.len(), |r, c| {
            Rational::from_integer(m.get(free[r], free[c]).clone())
        });
        let rhs: RationalVector = free
            .iter()
            .map(|&f| {
                let mut acc = Rational::zero();
                for (j, tag) in face.tags().iter().enumerate() {
                    if *tag == FaceTag::One {
                        acc -= Rational::from_integer(m.get(f, j).clone());
                    }
                }
                acc
            })
            .collect();
        let stationary = system.solve_square(&rhs).solution?;
        let one = rat(1);
        for value in &stationary {
            // only points in the open face count; boundaries are subfaces
            if !value.is_positive() || value >= &one {
                return None;
            }
        }
        for (f, value) in free.iter().zip(stationary) {
            x[*f] = value;
        }
    }
    let value = quadratic_form(m, &x).expect("face points match the matrix dimension");
    Some((value, x))
}

/// Exact box minimum by face enumeration; ties resolve to the
/// lexicographically smallest minimizer.
pub fn face_enumerate_min(m: &SymmetricIntMatrix) -> Result<MinimizationResult> {
    face_enumerate_min_with_limit(m, DEFAULT_FACE_LIMIT)
}

pub fn face_enumerate_min_with_limit(
    m: &SymmetricIntMatrix,
    limit: usize,
) -> Result<MinimizationResult> {
    let n = m.n();
    let count = FaceAssignment::count(n)
        .filter(|_| n <= limit)
        .ok_or(Error::DimensionLimit { n, limit })?;
    let candidates = exec::filter_map_indexed(count, |index| {
        face_candidate(m, &FaceAssignment::from_index(n, index))
    });
    let (gamma, argmin) = candidates
        .into_iter()
        .min_by(|a, b| a.cmp(b))
        .expect("every vertex is a candidate");
    let witness = kkt_witness(m, &argmin).expect("a face minimum is a KKT point");
    Ok(MinimizationResult {
        gamma,
        argmin,
        witness,
        method: Method::FaceOracle,
    })
}

/// True iff the box minimum is zero, i.e. xᵀMx ≥ 0 on the whole first
/// orthant.
pub fn is_copositive(m: &SymmetricIntMatrix) -> Result<bool> {
    is_copositive_with_limit(m, DEFAULT_FACE_LIMIT)
}

pub fn is_copositive_with_limit(m: &SymmetricIntMatrix, limit: usize) -> Result<bool> {
    Ok(face_enumerate_min_with_limit(m, limit)?.gamma.is_zero())
}
