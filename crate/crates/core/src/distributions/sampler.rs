use num_traits::Zero;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RectSpec;
use crate::bignum::{self, BigNat};
use crate::compositions::Composition;

/// Draws compositions uniformly from all compositions with `1..=m` parts in
/// `a..=b`.
///
/// The number of parts `j` is chosen with probability proportional to
/// `(b-a+1)^j`, then every part independently and uniformly. The stream comes
/// from ChaCha8 seeded through `seed_from_u64`, which is stable across
/// platforms.
#[derive(Debug, Clone)]
pub struct CompositionSampler {
    spec: RectSpec,
    // Correctly rounded P[parts <= j] for j = 1..=m; the last entry is 1.
    parts_cdf: Vec<f64>,
    rng: ChaCha8Rng,
}

impl CompositionSampler {
    pub fn new(spec: RectSpec, seed: u64) -> Self {
        let arity = spec.arity();
        let m = spec.max_parts();
        let sizes: Vec<BigNat> = (1..=m).map(|j| bignum::pow(arity, j)).collect();
        let total: BigNat = sizes.iter().sum();
        let mut acc = BigNat::zero();
        let parts_cdf = sizes
            .iter()
            .map(|size| {
                acc += size;
                bignum::ratio_to_f64(&acc, &total)
            })
            .collect();
        CompositionSampler {
            spec,
            parts_cdf,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn spec(&self) -> &RectSpec {
        &self.spec
    }

    pub fn draw(&mut self) -> Composition {
        let u = unit_interval(self.rng.next_u64());
        let j = 1 + self
            .parts_cdf
            .iter()
            .position(|&c| u < c)
            .unwrap_or(self.parts_cdf.len() - 1);
        let arity = self.spec.arity() as u64;
        let parts = (0..j)
            .map(|_| self.spec.lower() + below(self.rng.next_u64(), arity) as usize)
            .collect();
        Composition::new(parts)
    }
}

impl Iterator for CompositionSampler {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        Some(self.draw())
    }
}

/// `count` seeded draws from the rectangle family.
pub fn sample(spec: &RectSpec, count: usize, seed: u64) -> Vec<Composition> {
    CompositionSampler::new(*spec, seed).take(count).collect()
}

/// Uniform double in `[0, 1)` from the top 53 bits.
fn unit_interval(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Maps 64 random bits to `0..bound` by widening multiplication (no rejection;
/// bias at most `bound / 2^64`).
fn below(bits: u64, bound: u64) -> u64 {
    ((bits as u128 * bound as u128) >> 64) as u64
}
