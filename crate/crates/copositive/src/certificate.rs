//! Constructive short certificates of non-copositivity.
//!
//! For a non-copositive matrix with encoding length L, take the exact box
//! minimizer x̄, scale it to x* = 2^{2L−1}·x̄, and round every coordinate up
//! to a grid of spacing 1/(4dn²), where d is the largest absolute entry.
//! The resulting non-negative rational vector y still satisfies yᵀMy < 0,
//! and its measured bit size is at most 17·L^{3/2}. The dyadic variant uses
//! the next power-of-two grid 2^{−l} instead, which stores each fractional
//! part in l bits and tightens the size bound to 10·L^{3/2}. Both bound
//! checks run in integers by squaring: bits ≤ c·L^{3/2} ⇔ bits² ≤ c²·L³.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::encoding::{encoding_length, magnitude_bits, EncodingStats};
use crate::error::{Error, Result};
use crate::lcp::{solve_box_qp_lcp, MinimizationResult};
use crate::matrix::{quadratic_form, SymmetricIntMatrix};
use crate::rational::{pow2, Rational, RationalVector};

/// Certificate rounding grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    /// Spacing 1/(4dn²), fractional parts stored as numerator/denominator.
    FixedDenominator,
    /// Spacing 2^{−l} with l minimal such that 2^l ≥ 4dn².
    Dyadic,
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scheme::FixedDenominator => "fixed-denominator",
            Scheme::Dyadic => "dyadic",
        })
    }
}

// squared bound factors: 17² and 10²
const FIXED_BOUND_FACTOR_SQUARED: u64 = 289;
const DYADIC_BOUND_FACTOR_SQUARED: u64 = 100;

/// A certificate with its exact value and complexity audit.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub y: RationalVector,
    /// Exact yᵀMy; always negative.
    pub value: Rational,
    pub scheme: Scheme,
    pub stats: EncodingStats,
    pub measured_bits: u64,
    /// measured_bits² ≤ 289·L³ (fixed) resp. 100·L³ (dyadic).
    pub bound_bits_ok: bool,
    /// 4dn² for the fixed scheme, 2^l for the dyadic scheme.
    pub spacing_denominator: BigInt,
}

/// x* = 2^{2L−1}·x̄.
pub fn scale_optimal(xbar: &[Rational], bits: u64) -> Result<RationalVector> {
    let one = Rational::one();
    for (i, x) in xbar.iter().enumerate() {
        if x.is_negative() || x > &one {
            return Err(Error::OutsideBox { index: i });
        }
    }
    let factor = Rational::from_integer(pow2(2 * bits - 1));
    Ok(xbar.iter().map(|x| x * &factor).collect())
}

fn grid_round_up(xstar: &[Rational], denominator: &BigInt) -> Result<RationalVector> {
    debug_assert!(denominator.is_positive());
    xstar
        .iter()
        .enumerate()
        .map(|(i, x)| {
            if x.is_negative() {
                return Err(Error::NegativeCoordinate { index: i });
            }
            // ceil(D·p/q) with q > 0
            let scaled_numer = x.numer() * denominator;
            let ceil = scaled_numer.div_ceil(x.denom());
            Ok(Rational::new(ceil, denominator.clone()))
        })
        .collect()
}

/// 4dn², the fixed-scheme grid denominator.
pub fn fixed_spacing_denominator(d: &BigInt, n: usize) -> Result<BigInt> {
    if !d.is_positive() {
        return Err(Error::ZeroMatrix);
    }
    Ok(BigInt::from(4) * d * BigInt::from(n) * BigInt::from(n))
}

/// y_j = ⌈4dn²·x*_j⌉ / (4dn²); each coordinate exceeds x*_j by less than the
/// grid spacing.
pub fn round_certificate(xstar: &[Rational], d: &BigInt, n: usize) -> Result<RationalVector> {
    grid_round_up(xstar, &fixed_spacing_denominator(d, n)?)
}

/// Minimal l with 2^l ≥ 4dn².
pub fn dyadic_exponent(d: &BigInt, n: usize) -> Result<u64> {
    let spacing = fixed_spacing_denominator(d, n)?;
    Ok((spacing - BigInt::one()).bits())
}

/// y_j = ⌈2^l·x*_j⌉ / 2^l with l minimal such that 2^l ≥ 4dn².
pub fn dyadic_certificate(
    xstar: &[Rational],
    d: &BigInt,
    n: usize,
) -> Result<(RationalVector, u64)> {
    let l = dyadic_exponent(d, n)?;
    let y = grid_round_up(xstar, &pow2(l))?;
    Ok((y, l))
}

/// Measured bit size of a certificate on its declared grid. Fixed scheme:
/// integer part + fractional numerator + denominator per coordinate, all as
/// magnitude bits (certificates carry no sign). Dyadic scheme: integer part
/// plus l bits per coordinate.
pub fn measured_complexity(
    y: &[Rational],
    scheme: Scheme,
    spacing_denominator: &BigInt,
) -> Result<u64> {
    if !spacing_denominator.is_positive() {
        return Err(Error::NotPowerOfTwo {
            denominator: spacing_denominator.clone(),
        });
    }
    let dyadic_exp = match scheme {
        Scheme::FixedDenominator => None,
        Scheme::Dyadic => {
            let l = spacing_denominator.bits() - 1;
            if pow2(l) != *spacing_denominator {
                return Err(Error::NotPowerOfTwo {
                    denominator: spacing_denominator.clone(),
                });
            }
            Some(l)
        }
    };
    let mut total = 0u64;
    for (i, coord) in y.iter().enumerate() {
        if coord.is_negative() {
            return Err(Error::NegativeCoordinate { index: i });
        }
        let int_part = coord.floor().to_integer();
        let scaled = (coord - Rational::from_integer(int_part.clone()))
            * Rational::from_integer(spacing_denominator.clone());
        if !scaled.is_integer() {
            return Err(Error::OffGrid {
                index: i,
                denominator: spacing_denominator.clone(),
            });
        }
        let frac_numer = scaled.to_integer();
        total += magnitude_bits(&int_part);
        total += match dyadic_exp {
            None => magnitude_bits(&frac_numer) + magnitude_bits(spacing_denominator),
            Some(l) => l,
        };
    }
    Ok(total)
}

fn bound_holds(measured_bits: u64, encoding_bits: u64, factor_squared: u64) -> bool {
    let measured = BigInt::from(measured_bits);
    let l = BigInt::from(encoding_bits);
    &measured * &measured <= BigInt::from(factor_squared) * &l * &l * &l
}

/// Runs the rounding pipeline on an already-computed box minimum.
pub fn certify_from_minimum(
    m: &SymmetricIntMatrix,
    minimum: &MinimizationResult,
    scheme: Scheme,
) -> Result<CertificateReport> {
    let stats = encoding_length(m);
    if stats.max_abs.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    if !minimum.gamma.is_negative() {
        return Err(Error::CopositiveInput);
    }
    let xstar = scale_optimal(&minimum.argmin, stats.bits)?;
    let (y, spacing_denominator, factor_squared) = match scheme {
        Scheme::FixedDenominator => {
            let spacing = fixed_spacing_denominator(&stats.max_abs, stats.n)?;
            let y = grid_round_up(&xstar, &spacing)?;
            (y, spacing, FIXED_BOUND_FACTOR_SQUARED)
        }
        Scheme::Dyadic => {
            let (y, l) = dyadic_certificate(&xstar, &stats.max_abs, stats.n)?;
            (y, pow2(l), DYADIC_BOUND_FACTOR_SQUARED)
        }
    };
    let value = quadratic_form(m, &y)?;
    if !value.is_negative() {
        // cannot happen for a correct minimizer; refuse to emit a bad report
        return Err(Error::NegativityFailure);
    }
    let measured_bits = measured_complexity(&y, scheme, &spacing_denominator)?;
    let bound_bits_ok = bound_holds(measured_bits, stats.bits, factor_squared);
    Ok(CertificateReport {
        y,
        value,
        scheme,
        stats,
        measured_bits,
        bound_bits_ok,
        spacing_denominator,
    })
}

/// Full pipeline: minimize exactly, then round to a short certificate.
pub fn certify_noncopositive(m: &SymmetricIntMatrix, scheme: Scheme) -> Result<CertificateReport> {
    let minimum = solve_box_qp_lcp(m)?;
    certify_from_minimum(m, &minimum, scheme)
}

/// Why a candidate vector fails to certify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    NegativeCoordinate { index: usize },
    NonnegativeValue,
}

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyFailure::NegativeCoordinate { index } => {
                write!(f, "coordinate {index} is negative")
            }
            VerifyFailure::NonnegativeValue => f.write_str("quadratic form is not negative"),
        }
    }
}

/// Result of checking a candidate certificate: its exact value and, when
/// invalid, the reason.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub valid: bool,
    pub value: Rational,
    pub failure: Option<VerifyFailure>,
}

/// y certifies non-copositivity iff y ≥ 0 componentwise and yᵀMy < 0.
pub fn verify_certificate(m: &SymmetricIntMatrix, y: &[Rational]) -> Result<VerifyOutcome> {
    let value = quadratic_form(m, y)?;
    if let Some(index) = y.iter().position(|v| v.is_negative()) {
        return Ok(VerifyOutcome {
            valid: false,
            value,
            failure: Some(VerifyFailure::NegativeCoordinate { index }),
        });
    }
    if !value.is_negative() {
        return Ok(VerifyOutcome {
            valid: false,
            value,
            failure: Some(VerifyFailure::NonnegativeValue),
        });
    }
    Ok(VerifyOutcome {
        valid: true,
        value,
        failure: None,
    })
}
