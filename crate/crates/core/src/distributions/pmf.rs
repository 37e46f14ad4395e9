use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use crate::bignum::{ratio_to_f64, BigNat, Rational};

/// A probability mass function over a contiguous integer support, stored as
/// exact weights and their exact total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPmf {
    offset: i64,
    weights: Vec<BigNat>,
    total: BigNat,
}

impl ExactPmf {
    /// Builds a pmf whose support starts at `offset`.
    ///
    /// # Panics
    ///
    /// Panics if `weights` is empty or sums to zero.
    pub fn new(offset: i64, weights: Vec<BigNat>) -> Self {
        let total: BigNat = weights.iter().sum();
        assert!(!total.is_zero(), "pmf weights must not all be zero");
        ExactPmf {
            offset,
            weights,
            total,
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn weights(&self) -> &[BigNat] {
        &self.weights
    }

    pub fn total(&self) -> &BigNat {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn support(&self) -> RangeInclusive<i64> {
        self.offset..=self.offset + self.weights.len() as i64 - 1
    }

    /// Weight at `n`; zero outside the support.
    pub fn weight(&self, n: i64) -> BigNat {
        self.weight_ref(n).cloned().unwrap_or_default()
    }

    fn weight_ref(&self, n: i64) -> Option<&BigNat> {
        usize::try_from(n - self.offset)
            .ok()
            .and_then(|i| self.weights.get(i))
    }

    /// Exact `P[n]`.
    pub fn probability(&self, n: i64) -> Rational {
        Ratio::new(self.weight(n), self.total.clone())
    }

    /// Correctly rounded `P[n]`.
    pub fn probability_f64(&self, n: i64) -> f64 {
        match self.weight_ref(n) {
            Some(w) => ratio_to_f64(w, &self.total),
            None => 0.0,
        }
    }

    /// Correctly rounded probabilities over the support.
    pub fn to_f64(&self) -> Vec<f64> {
        self.weights
            .iter()
            .map(|w| ratio_to_f64(w, &self.total))
            .collect()
    }

    /// Correctly rounded `P[X <= n]` for each `n` in the support.
    pub fn cdf_f64(&self) -> Vec<f64> {
        let mut acc = BigNat::zero();
        self.weights
            .iter()
            .map(|w| {
                acc += w;
                ratio_to_f64(&acc, &self.total)
            })
            .collect()
    }

    /// Smallest support point with maximal weight.
    pub fn argmax(&self) -> i64 {
        let mut best = 0;
        for (i, w) in self.weights.iter().enumerate() {
            if *w > self.weights[best] {
                best = i;
            }
        }
        self.offset + best as i64
    }

    pub fn mean(&self) -> BigRational {
        self.raw_moment(1)
    }

    pub fn variance(&self) -> BigRational {
        let mean = self.mean();
        self.raw_moment(2) - &mean * &mean
    }

    fn raw_moment(&self, power: u32) -> BigRational {
        let numer: BigInt = self
            .weights
            .iter()
            .zip(self.support())
            .map(|(w, n)| BigInt::from(w.clone()) * BigInt::from(n).pow(power))
            .sum();
        BigRational::new(numer, BigInt::from(self.total.clone()))
    }
}
