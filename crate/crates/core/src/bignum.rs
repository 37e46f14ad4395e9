//! Big-integer helpers shared by the exact kernels.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision nonnegative integer.
pub type BigNat = BigUint;

/// Exact nonnegative rational.
pub type Rational = Ratio<BigUint>;

/// `base^exp` as a big integer.
pub fn pow(base: usize, exp: usize) -> BigNat {
    num_traits::pow(BigNat::from(base), exp)
}

/// Binomial coefficient `C(n, k)` by the multiplicative formula. Zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigNat {
    if k > n {
        return BigNat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigNat::one();
    for i in 1..=k {
        // acc * (n - k + i) is divisible by i after the multiplication.
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Natural logarithm of a positive big integer.
///
/// Uses the bit length plus the top 64 bits, so the result is accurate to a
/// few ulps regardless of magnitude. Returns `-inf` for zero.
pub fn ln(x: &BigNat) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return x
            .to_u64()
            .unwrap_or(u64::MAX)
            .to_f64()
            .unwrap_or(f64::INFINITY)
            .ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap_or(u64::MAX) as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Correctly rounded (round-to-nearest-even) `num / den` as `f64`.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn ratio_to_f64(num: &BigNat, den: &BigNat) -> f64 {
    assert!(!den.is_zero(), "ratio_to_f64: zero denominator");
    if num.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient carries 66-67 significant bits, then fold
    // the remainder into a sticky bit below the rounding position.
    let shift = 66 - (num.bits() as i64 - den.bits() as i64);
    let (quot, rem) = if shift >= 0 {
        (num << shift as u64).div_rem(den)
    } else {
        num.div_rem(&(den << (-shift) as u64))
    };
    let mut q = quot.to_u128().expect("quotient fits in 68 bits");
    if !rem.is_zero() {
        q |= 1;
    }
    scale_pow2(q as f64, -shift)
}

/// Correctly rounded value of an exact rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    ratio_to_f64(r.numer(), r.denom())
}

fn scale_pow2(mut x: f64, mut exp: i64) -> f64 {
    // Powers of two are exact; step in chunks that stay inside the normal range.
    while exp > 1000 {
        x *= 2f64.powi(1000);
        exp -= 1000;
    }
    while exp < -1000 {
        x *= 2f64.powi(-1000);
        exp += 1000;
    }
    x * 2f64.powi(exp as i32)
}
