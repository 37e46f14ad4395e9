//! Exact combinatorics of integer compositions inside a rectangle.
//!
//! The crate is organised bottom-up:
//!
//! * [`polycoeff`] builds rows of the (l+1)-nomial triangle, whose entries are
//!   the coefficients of `(1 + x + ... + x^l)^k`.
//! * [`compositions`] counts and enumerates compositions with bounded parts.
//! * [`distributions`] turns those counts into exact probability mass
//!   functions, decomposes the rectangle distribution against the sum of
//!   independent uniforms and measures the distance to a normal law.
//! * [`table`] reproduces the published grid of maximum absolute differences.
//!
//! All counts are arbitrary-precision ([`BigNat`]); floats only appear at the
//! edges, converted from exact rationals with correct rounding.

pub mod bignum;
pub mod compositions;
pub mod distributions;
mod error;
pub mod polycoeff;
pub mod table;

pub use bignum::{BigNat, Rational};
pub use compositions::{
    count, count_support, enumerate, enumerate_support, h_sequence, Composition, Compositions,
    PartBounds, UpperBound, DEFAULT_ENUMERATION_GUARD,
};
pub use distributions::{
    error_decomposition, normal_distance, pmf_s, pmf_x, sample, stirling_h_estimate,
    stirling_h_ratio, CompositionSampler, DistanceReport, ErrorReport, ExactPmf, NormalRef,
    RectSpec,
};
pub use error::{Error, Result};
pub use polycoeff::{
    central_asymptotic, central_asymptotic_ratio, central_coeff, poly_coeff, triangle_row,
    RowBuilder, TriangleRow,
};
