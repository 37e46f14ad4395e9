//! Exact distributions of composition sums and their normal limit.
//!
//! `X` is the integer represented by a composition drawn uniformly from all
//! compositions with `1..=m` parts in `a..=b`; `S` is the sum of `m`
//! independent uniform draws from `a..=b`. Both are kept as big-integer
//! weights over a common-denominator total.

mod decomposition;
mod exact;
mod normal;
mod pmf;
mod sampler;
mod stirling;

pub use decomposition::{approximate_gamma, error_decomposition, max_abs_diff, ErrorReport};
pub use exact::{pmf_s, pmf_x};
pub use normal::{normal_cdf, normal_distance, DistanceReport, NormalRef};
pub use pmf::ExactPmf;
pub use sampler::{sample, CompositionSampler};
pub use stirling::{ln_stirling_h_estimate, stirling_h_estimate, stirling_h_ratio};

use crate::{Error, Result};

/// The composition family: parts in `a..=b`, at most `m` of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectSpec {
    lower: usize,
    upper: usize,
    max_parts: usize,
}

impl RectSpec {
    pub fn new(lower: usize, upper: usize, max_parts: usize) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvalidBounds { lower, upper });
        }
        if max_parts == 0 {
            return Err(Error::ZeroParts);
        }
        Ok(RectSpec {
            lower,
            upper,
            max_parts,
        })
    }

    /// The `l x m` rectangle: parts in `0..=l`.
    pub fn rectangle(l: usize, m: usize) -> Result<Self> {
        Self::new(0, l, m)
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn max_parts(&self) -> usize {
        self.max_parts
    }

    /// Number of admissible part values, `b - a + 1`.
    pub fn arity(&self) -> usize {
        self.upper - self.lower + 1
    }

    /// The mean and variance of `S` for this family.
    pub fn normal_ref(&self) -> NormalRef {
        NormalRef::for_spec(self)
    }
}
