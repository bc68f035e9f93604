//! Exact rational scalars: thin helpers over `num`'s arbitrary-precision
//! types. Values are always reduced with a positive denominator, so equality
//! and ordering are decidable no matter how small the quantities get.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Vector of exact rationals.
pub type RationalVector = Vec<Rational>;

/// `v` as an exact rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `numer/denom` as an exact rational. Panics when `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// 2^exp as a big integer.
pub fn pow2(exp: u64) -> BigInt {
    BigInt::one() << exp
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision parts.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    let bad = || Error::InvalidRational {
        literal: trimmed.to_string(),
    };
    let (p, q) = match trimmed.split_once('/') {
        Some((p, q)) => (p, q),
        None => (trimmed, "1"),
    };
    let numer: BigInt = p.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = q.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Formats exactly as `"p/q"`; the denominator is always written out.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
