use num_traits::Zero;

use super::{pmf_x, RectSpec};
use crate::bignum::{ratio_to_f64, BigNat};
use crate::{Error, Result};

/// Standard normal CDF via the complementary error function.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / std::f64::consts::SQRT_2)
}

/// The normal law matched to `S`: mean `m(a+b)/2`, variance `m((b-a+1)^2 - 1)/12`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalRef {
    pub mu: f64,
    pub sigma2: f64,
}

impl NormalRef {
    pub fn for_spec(spec: &RectSpec) -> Self {
        let m = spec.max_parts() as f64;
        let arity = spec.arity() as f64;
        NormalRef {
            mu: m * (spec.lower() + spec.upper()) as f64 / 2.0,
            sigma2: m * (arity * arity - 1.0) / 12.0,
        }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma2.sqrt()
    }

    /// `Phi((x - mu) / sigma)`.
    pub fn cdf(&self, x: f64) -> f64 {
        normal_cdf((x - self.mu) / self.sigma())
    }

    /// Normal mass of the unit cell `[n - 1/2, n + 1/2]`.
    pub fn cell_mass(&self, n: i64) -> f64 {
        let n = n as f64;
        self.cdf(n + 0.5) - self.cdf(n - 0.5)
    }
}

/// How far the exact distribution of `X` is from its normal reference.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub normal: NormalRef,
    /// First support point of `X`; `density_diffs[i]` belongs to `offset + i`.
    pub offset: i64,
    /// `P[X = n] - cell_mass(n)` over the support of `X`.
    pub density_diffs: Vec<f64>,
    pub max_density_diff: f64,
    /// `sup_n |P[X <= n] - Phi((n + 1/2 - mu)/sigma)|` over all integers `n`.
    pub ks: f64,
    /// Most likely value of `X`.
    pub peak: i64,
}

/// Compares `X` to the continuity-corrected normal law with the mean and
/// variance of `S`.
pub fn normal_distance(spec: &RectSpec) -> Result<DistanceReport> {
    if spec.lower() == spec.upper() {
        return Err(Error::DegenerateVariance(spec.lower()));
    }
    let normal = spec.normal_ref();
    let pmf = pmf_x(spec);
    let offset = pmf.offset();

    // Below the support the CDF of X is 0, above it 1; the supremum over those
    // integers is attained next to the support.
    let mut ks = normal.cdf(offset as f64 - 0.5);
    let mut cumulative = BigNat::zero();
    let mut density_diffs = Vec::with_capacity(pmf.len());
    let mut max_density_diff = 0.0f64;
    for (n, w) in pmf.support().zip(pmf.weights()) {
        cumulative += w;
        let cdf = ratio_to_f64(&cumulative, pmf.total());
        ks = ks.max((cdf - normal.cdf(n as f64 + 0.5)).abs());
        let diff = ratio_to_f64(w, pmf.total()) - normal.cell_mass(n);
        max_density_diff = max_density_diff.max(diff.abs());
        density_diffs.push(diff);
    }
    ks = ks.max(1.0 - normal.cdf(*pmf.support().end() as f64 + 0.5));

    Ok(DistanceReport {
        normal,
        offset,
        density_diffs,
        max_density_diff,
        ks,
        peak: pmf.argmax(),
    })
}
