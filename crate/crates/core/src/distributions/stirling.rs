use crate::bignum;
use crate::compositions::h_sequence;
use crate::{Error, Result};

/// Natural log of `((l+1)^m - 1) * ((l+1)/l) / sqrt(2*pi*m*((l+1)^2 - 1)/12)`.
pub fn ln_stirling_h_estimate(l: usize, m: usize) -> Result<f64> {
    if l == 0 {
        return Err(Error::ZeroWidth);
    }
    if m == 0 {
        return Err(Error::ZeroParts);
    }
    let base = (l + 1) as f64;
    // ln((l+1)^m - 1) = m ln(l+1) + ln(1 - (l+1)^-m)
    let ln_count = m as f64 * base.ln() + (-(-(m as f64) * base.ln()).exp()).ln_1p();
    let variance = (base * base - 1.0) / 12.0;
    let spread = 2.0 * std::f64::consts::PI * m as f64 * variance;
    Ok(ln_count + (base / l as f64).ln() - 0.5 * spread.ln())
}

/// Normal-density estimate of `h_{l,m}` at its center `m*l/2`.
pub fn stirling_h_estimate(l: usize, m: usize) -> Result<f64> {
    ln_stirling_h_estimate(l, m).map(f64::exp)
}

/// `h_{l,m}(floor(m*l/2))` divided by [`stirling_h_estimate`], in log space.
pub fn stirling_h_ratio(l: usize, m: usize) -> Result<f64> {
    let ln_estimate = ln_stirling_h_estimate(l, m)?;
    let h = h_sequence(l, m)?;
    Ok((bignum::ln(&h[m * l / 2]) - ln_estimate).exp())
}
