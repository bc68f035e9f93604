//! Instance generators: a hard 2×2 family whose certificates need ever finer
//! denominators, zero-padded embeddings, and seeded random matrices.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;
use crate::rational::{pow2, Rational};

/// M(k) = [[2^{2k+2}, −2^{k+2}], [−2^{k+2}, 3]]. Not copositive: the box
/// minimum is −1, attained at (2^{−k}, 1), and every certificate (y₁, y₂)
/// has y₂ > 0 with y₁/y₂ confined to the open interval
/// (1/2^{k+1}, 3/2^{k+1}), which forces at least k+1 bits of precision.
pub fn adversarial_matrix(k: u32) -> SymmetricIntMatrix {
    assert!(k >= 1, "the family starts at k = 1");
    let top = pow2(2 * u64::from(k) + 2);
    let off = -pow2(u64::from(k) + 2);
    SymmetricIntMatrix::from_upper(2, vec![top, off, BigInt::from(3)])
        .expect("three entries form a 2x2 upper triangle")
}

/// The k-th hard instance together with its expected measurements, optionally
/// embedded into a larger zero matrix.
#[derive(Clone, Debug)]
pub struct AdversarialInstance {
    pub k: u32,
    pub n: usize,
    pub matrix: SymmetricIntMatrix,
    /// Encoding bits under the strict per-entry rule: 3k + 8 + n(n+1)/2
    /// (3k + 11 for the bare 2×2 family).
    pub strict_bits: u64,
    /// The nominal total usually quoted for this family, one bit lower: the
    /// quoted count drops the sign bit of the off-diagonal entry.
    pub nominal_bits: u64,
    /// Open interval confining y₁/y₂ for valid certificates (y₁, y₂).
    pub certificate_ratio_interval: (Rational, Rational),
}

impl AdversarialInstance {
    pub fn new(k: u32) -> Self {
        Self::embedded(k, 2).expect("the bare family is two-dimensional")
    }

    pub fn embedded(k: u32, n: usize) -> Result<Self> {
        let matrix = embed(&adversarial_matrix(k), n)?;
        let pairs = (n * (n + 1) / 2) as u64;
        let strict_bits = 3 * u64::from(k) + 8 + pairs;
        let denom = pow2(u64::from(k) + 1);
        Ok(Self {
            k,
            n,
            matrix,
            strict_bits,
            nominal_bits: strict_bits - 1,
            certificate_ratio_interval: (
                Rational::new(BigInt::one(), denom.clone()),
                Rational::new(BigInt::from(3), denom),
            ),
        })
    }
}

/// Places `m` as the top-left block of an n×n zero matrix. Copositivity is
/// unaffected: padded coordinates contribute nothing to the quadratic form.
pub fn embed(m: &SymmetricIntMatrix, n: usize) -> Result<SymmetricIntMatrix> {
    if n < m.n() {
        return Err(Error::EmbedDimension {
            target: n,
            n: m.n(),
        });
    }
    let mut upper = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            upper.push(if i < m.n() && j < m.n() {
                m.get(i, j).clone()
            } else {
                BigInt::zero()
            });
        }
    }
    SymmetricIntMatrix::from_upper(n, upper)
}

/// True iff y = (y₁, y₂) can certify the k-th hard instance: y₂ > 0 and
/// y₁/y₂ strictly inside (1/2^{k+1}, 3/2^{k+1}).
pub fn certificate_interval_check(k: u32, y: &[Rational]) -> bool {
    assert!(k >= 1, "the family starts at k = 1");
    assert_eq!(y.len(), 2, "the family is two-dimensional");
    if !y[1].is_positive() {
        return false;
    }
    let ratio = &y[0] / &y[1];
    let denom = pow2(u64::from(k) + 1);
    let lo = Rational::new(BigInt::one(), denom.clone());
    let hi = Rational::new(BigInt::from(3), denom);
    lo < ratio && ratio < hi
}

/// Random instance families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    /// Uniform entries in [−bound, bound].
    Symmetric,
    /// Uniform entries in [0, bound]; always copositive.
    Nonnegative,
    /// GᵀG for uniform integer G; positive semidefinite, hence copositive.
    PositiveSemidefinite,
}

/// Seeded random instance; identical seeds give identical matrices.
pub fn random_instance(
    kind: InstanceKind,
    n: usize,
    entry_bound: i64,
    seed: u64,
) -> Result<SymmetricIntMatrix> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if entry_bound < 1 {
        return Err(Error::InvalidEntryBound);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let upper_len = n * (n + 1) / 2;
    match kind {
        InstanceKind::Symmetric => {
            let upper = (0..upper_len)
                .map(|_| BigInt::from(rng.random_range(-entry_bound..=entry_bound)))
                .collect();
            SymmetricIntMatrix::from_upper(n, upper)
        }
        InstanceKind::Nonnegative => {
            let upper = (0..upper_len)
                .map(|_| BigInt::from(rng.random_range(0..=entry_bound)))
                .collect();
            SymmetricIntMatrix::from_upper(n, upper)
        }
        InstanceKind::PositiveSemidefinite => {
            let g: Vec<Vec<BigInt>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| BigInt::from(rng.random_range(-entry_bound..=entry_bound)))
                        .collect()
                })
                .collect();
            let mut upper = Vec::with_capacity(upper_len);
            for i in 0..n {
                for j in i..n {
                    let mut acc = BigInt::zero();
                    for row in &g {
                        acc += &row[i] * &row[j];
                    }
                    upper.push(acc);
                }
            }
            SymmetricIntMatrix::from_upper(n, upper)
        }
    }
}
