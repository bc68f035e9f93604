//! Exact copositivity testing for symmetric integer matrices.
//!
//! A symmetric matrix M is *copositive* when xᵀMx ≥ 0 for every
//! componentwise non-negative x. This crate decides that property exactly at
//! desk scale by two independent routes — complementary-basis enumeration of
//! a linear system in non-negative variables ([`lcp`]), and exhaustive face
//! enumeration of the unit box ([`oracle`]) — and, for matrices that are not
//! copositive, constructs short non-negative rational certificates y with
//! yᵀMy < 0 ([`certificate`]). The measured bit size of a certificate stays
//! within 17·L^{3/2} (fixed-denominator grid) or 10·L^{3/2} (dyadic grid),
//! where L is the binary encoding length of the matrix.
//!
//! All arithmetic is arbitrary-precision rational; no floating point enters
//! any decision. With the default `parallel` feature the enumeration loops
//! run on rayon; disable default features for the sequential fallback.
//!
//! ```
//! use num::traits::Signed;
//!
//! use copositive::certificate::{certify_noncopositive, verify_certificate, Scheme};
//! use copositive::{oracle, SymmetricIntMatrix};
//!
//! let hollow = SymmetricIntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
//! assert!(oracle::is_copositive(&hollow).unwrap());
//!
//! let spiked = SymmetricIntMatrix::from_i64_rows(&[&[1, -2], &[-2, 1]]).unwrap();
//! let report = certify_noncopositive(&spiked, Scheme::FixedDenominator).unwrap();
//! assert!(report.value.is_negative());
//! assert!(verify_certificate(&spiked, &report.y).unwrap().valid);
//! ```

pub mod certificate;
pub mod encoding;
mod error;
mod exec;
pub mod instances;
pub mod lcp;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod rational;

pub use error::{Error, Result};
pub use matrix::{mat_vec, quadratic_form, SymmetricIntMatrix};
pub use rational::{Rational, RationalVector};
