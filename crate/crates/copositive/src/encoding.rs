//! Binary encoding length of a matrix and the derived negativity threshold.
//!
//! Each stored entry costs one magnitude field plus one sign bit: an entry m
//! takes ⌈log2(|m|+1)⌉ + 1 bits, which is a single bit when m = 0. The total
//! L over the upper triangle drives every bound downstream: the box minimum
//! of a non-copositive matrix is at most −2^{−2L+1}, every restricted basis
//! determinant stays below 2^{2L−1}, and certificate sizes are measured
//! against 17·L^{3/2} and 10·L^{3/2}.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::matrix::SymmetricIntMatrix;
use crate::rational::{pow2, Rational};

/// Size measurements of a matrix: total encoding bits (L), the largest
/// absolute entry (d), and the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodingStats {
    /// Total bits for the upper triangle; at least n(n+1)/2.
    pub bits: u64,
    /// Largest absolute entry; zero only for the zero matrix.
    pub max_abs: BigInt,
    pub n: usize,
}

/// Bits to store one signed entry: ⌈log2(|m|+1)⌉ + 1, and 1 for m = 0.
pub fn encode_bits(m: &BigInt) -> u64 {
    // for m ≠ 0, ⌈log2(|m|+1)⌉ equals the bit length of |m|
    if m.is_zero() {
        1
    } else {
        m.bits() + 1
    }
}

/// Magnitude-only bit count for certificate coordinates, which carry no
/// sign: ⌈log2(z+1)⌉ for z ≥ 1 and 1 for z = 0.
pub fn magnitude_bits(z: &BigInt) -> u64 {
    debug_assert!(!z.is_negative());
    if z.is_zero() {
        1
    } else {
        z.bits()
    }
}

/// Encoding length and largest absolute entry of the upper triangle.
pub fn encoding_length(m: &SymmetricIntMatrix) -> EncodingStats {
    EncodingStats {
        bits: m.upper_entries().map(encode_bits).sum(),
        max_abs: m.max_abs_entry(),
        n: m.n(),
    }
}

/// The dichotomy threshold −1/2^{2L−1}: an exact box minimum that is not
/// zero is at most this value.
pub fn gamma_threshold(bits: u64) -> Rational {
    assert!(bits >= 1, "encoding length is at least one bit");
    -Rational::new(BigInt::one(), pow2(2 * bits - 1))
}
