use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Zero;

use super::{pmf_s, pmf_x, ExactPmf, RectSpec};
use crate::bignum::{self, ratio_to_f64, BigNat, Rational};
use crate::compositions::h_sequence;
use crate::{Error, Result};

/// Decomposition `P[X = n] = gamma * P[S = n] + e[n]` for the `l x m` rectangle.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    /// `alpha * (l+1)^m`, exactly.
    pub gamma: Rational,
    /// `l / ((l+1) * ((l+1)^m - 1))`, the reciprocal of the number of
    /// rectangle compositions.
    pub alpha: Rational,
    /// `e[n] = alpha * e_numerators[n]`, with `e_numerators[n]` the number of
    /// compositions of `n` with fewer than `m` parts.
    pub e_numerators: Vec<BigNat>,
    pub e_values: Vec<f64>,
    pub e_max: f64,
    /// `max_n |P[X = n] - P[S = n]|`, exactly.
    pub max_abs_diff_exact: Rational,
    pub max_abs_diff: f64,
}

impl ErrorReport {
    /// Exact `e[n]`.
    pub fn error_term(&self, n: usize) -> Rational {
        match self.e_numerators.get(n) {
            Some(num) => &self.alpha * Ratio::from_integer(num.clone()),
            None => Rational::zero(),
        }
    }
}

/// The asymptotic `gamma ~ 1 / (1 + 1/l) = l / (l + 1)`, which drops the `-1`
/// in `(l+1)^m - 1`. Differs from [`ErrorReport::gamma`] by `O((l+1)^-m)`.
pub fn approximate_gamma(l: usize) -> Rational {
    Ratio::new(BigUint::from(l), BigUint::from(l + 1))
}

/// Splits the rectangle distribution into a scaled copy of `S` plus a
/// nonnegative error term.
///
/// Requires `a = 0` and `b = l >= 1`.
pub fn error_decomposition(spec: &RectSpec) -> Result<ErrorReport> {
    if spec.lower() != 0 {
        return Err(Error::NonZeroLower(spec.lower()));
    }
    let l = spec.upper();
    if l == 0 {
        return Err(Error::ZeroWidth);
    }
    let m = spec.max_parts();
    let full = bignum::pow(l + 1, m);
    let alpha = Ratio::new(BigNat::from(l), (full.clone() - 1u32) * (l + 1));
    let gamma = &alpha * Ratio::from_integer(full);

    let mut e_numerators = if m > 1 {
        h_sequence(l, m - 1)?
    } else {
        Vec::new()
    };
    e_numerators.resize(l * m + 1, BigNat::zero());
    let e_values: Vec<f64> = e_numerators
        .iter()
        .map(|num| ratio_to_f64(&(num * alpha.numer()), alpha.denom()))
        .collect();
    let e_max = e_values.iter().copied().fold(0.0, f64::max);

    let max_abs_diff_exact = max_abs_diff(&pmf_x(spec), &pmf_s(spec));
    let max_abs_diff = bignum::rational_to_f64(&max_abs_diff_exact);
    Ok(ErrorReport {
        gamma,
        alpha,
        e_numerators,
        e_values,
        e_max,
        max_abs_diff_exact,
        max_abs_diff,
    })
}

/// `max_n |P[n] - Q[n]|` over the union of both supports, exactly.
pub fn max_abs_diff(p: &ExactPmf, q: &ExactPmf) -> Rational {
    let lo = *p.support().start().min(q.support().start());
    let hi = *p.support().end().max(q.support().end());
    // Compare over the common denominator total_p * total_q.
    let mut best = BigNat::zero();
    for n in lo..=hi {
        let lhs = p.weight(n) * q.total();
        let rhs = q.weight(n) * p.total();
        let diff = if lhs >= rhs { lhs - rhs } else { rhs - lhs };
        if diff > best {
            best = diff;
        }
    }
    Ratio::new(best, p.total() * q.total())
}
