//! Counting and enumerating restricted integer compositions.
//!
//! A composition of `n` into `k` parts is an ordered `k`-tuple of nonnegative
//! integers summing to `n`; zero parts are allowed when the bounds permit them.

use num_traits::{One, Zero};

use crate::bignum::{self, BigNat};
use crate::polycoeff::{poly_coeff, RowBuilder};
use crate::{Error, Result};

/// Default cap on the `(max_part + 1)^k` search space of [`enumerate`].
pub const DEFAULT_ENUMERATION_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UpperBound {
    Finite(usize),
    Unbounded,
}

/// Inclusive bounds `a <= part <= b` on every part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartBounds {
    lower: usize,
    upper: UpperBound,
}

impl PartBounds {
    pub fn new(lower: usize, upper: UpperBound) -> Result<Self> {
        if let UpperBound::Finite(upper) = upper {
            if lower > upper {
                return Err(Error::InvalidBounds { lower, upper });
            }
        }
        Ok(PartBounds { lower, upper })
    }

    pub fn finite(lower: usize, upper: usize) -> Result<Self> {
        Self::new(lower, UpperBound::Finite(upper))
    }

    pub fn at_least(lower: usize) -> Self {
        PartBounds {
            lower,
            upper: UpperBound::Unbounded,
        }
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn upper(&self) -> UpperBound {
        self.upper
    }

    pub fn contains(&self, part: usize) -> bool {
        part >= self.lower
            && match self.upper {
                UpperBound::Finite(b) => part <= b,
                UpperBound::Unbounded => true,
            }
    }
}

/// An ordered tuple of parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The integer the composition represents.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition::new(parts)
    }
}

/// Number of compositions of `n` into `k` parts within `bounds`.
///
/// Finite bounds reduce to the polynomial coefficient `C(k, n - k*a)_{b-a+1}`;
/// unbounded ones to the binomial `C(n - k*a + k - 1, k - 1)`.
pub fn count(n: usize, k: usize, bounds: PartBounds) -> BigNat {
    let floor = match k.checked_mul(bounds.lower) {
        Some(floor) if floor <= n => floor,
        _ => return BigNat::zero(),
    };
    let shifted = n - floor;
    match bounds.upper {
        UpperBound::Finite(b) => poly_coeff(b - bounds.lower, k, shifted as i64),
        UpperBound::Unbounded if k == 0 => {
            if shifted == 0 {
                BigNat::one()
            } else {
                BigNat::zero()
            }
        }
        UpperBound::Unbounded => bignum::binomial(shifted + k - 1, k - 1),
    }
}

/// Number of `k`-tuples over `support` summing to `n`.
///
/// Extracts the coefficient of `x^n` in `(sum_{s in support} x^s)^k`.
/// Duplicate support values are treated as one.
pub fn count_support(n: usize, k: usize, support: &[usize]) -> Result<BigNat> {
    let support = normalize_support(support)?;
    let usable: Vec<usize> = support.into_iter().filter(|&s| s <= n).collect();
    // Coefficients above x^n never feed back into x^n, so truncate there.
    let mut poly = vec![BigNat::zero(); n + 1];
    poly[0] = BigNat::one();
    for _ in 0..k {
        let mut next = vec![BigNat::zero(); n + 1];
        for (i, coeff) in poly.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &s in usable.iter().take_while(|&&s| i + s <= n) {
                next[i + s] += coeff;
            }
        }
        poly = next;
    }
    Ok(std::mem::take(&mut poly[n]))
}

/// All compositions of `n` into `k` parts within `bounds`, in lexicographic order.
///
/// Unbounded parts are capped at `n`. Fails with [`Error::GuardExceeded`] when
/// `(max_part + 1)^k` exceeds `guard`.
pub fn enumerate(n: usize, k: usize, bounds: PartBounds, guard: u64) -> Result<Compositions> {
    let max_part = match bounds.upper {
        UpperBound::Finite(b) => b,
        UpperBound::Unbounded => n,
    };
    let values = (bounds.lower..=max_part).collect();
    Compositions::new(n, k, values, max_part, guard)
}

/// All `k`-tuples over `support` summing to `n`, in lexicographic order.
pub fn enumerate_support(
    n: usize,
    k: usize,
    support: &[usize],
    guard: u64,
) -> Result<Compositions> {
    let values = normalize_support(support)?;
    let max_part = *values.last().expect("non-empty support");
    Compositions::new(n, k, values, max_part, guard)
}

/// `h_{l,m}(n)` for `n = 0..=l*m`: the number of compositions of `n` with
/// between one and `m` parts, each in `0..=l`.
pub fn h_sequence(l: usize, m: usize) -> Result<Vec<BigNat>> {
    if m == 0 {
        return Err(Error::ZeroParts);
    }
    let mut h = vec![BigNat::zero(); l * m + 1];
    let mut rows = RowBuilder::new(l);
    for _ in 1..=m {
        for (slot, entry) in h.iter_mut().zip(rows.advance().entries()) {
            *slot += entry;
        }
    }
    Ok(h)
}

fn normalize_support(support: &[usize]) -> Result<Vec<usize>> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut values = support.to_vec();
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

/// Lexicographic depth-first walk over tuples of `values` with a fixed sum.
#[derive(Debug, Clone)]
pub struct Compositions {
    target: usize,
    parts: usize,
    values: Vec<usize>,
    // Indices into `values` for the positions chosen so far.
    stack: Vec<usize>,
    sum: usize,
    started: bool,
    done: bool,
}

impl Compositions {
    fn new(
        target: usize,
        parts: usize,
        values: Vec<usize>,
        max_part: usize,
        guard: u64,
    ) -> Result<Self> {
        let states = bignum::pow(max_part.saturating_add(1), parts);
        if states > BigNat::from(guard) {
            return Err(Error::GuardExceeded { states, guard });
        }
        Ok(Compositions {
            target,
            parts,
            values,
            stack: Vec::with_capacity(parts),
            sum: 0,
            started: false,
            done: false,
        })
    }

    /// Whether choosing `value` at the next position can still reach the target.
    fn feasible(&self, value: usize) -> bool {
        let (Some(&lo), Some(&hi)) = (self.values.first(), self.values.last()) else {
            return false;
        };
        let remaining = self.parts - self.stack.len() - 1;
        let sum = self.sum + value;
        sum + remaining * lo <= self.target && self.target <= sum + remaining * hi
    }

    fn push_first_feasible(&mut self, from: usize) -> bool {
        match (from..self.values.len()).find(|&i| self.feasible(self.values[i])) {
            Some(i) => {
                self.sum += self.values[i];
                self.stack.push(i);
                true
            }
            None => false,
        }
    }

    fn descend(&mut self) -> bool {
        while self.stack.len() < self.parts {
            if !self.push_first_feasible(0) {
                return false;
            }
        }
        self.sum == self.target
    }

    fn backtrack(&mut self) -> bool {
        while let Some(i) = self.stack.pop() {
            self.sum -= self.values[i];
            if self.push_first_feasible(i + 1) {
                return true;
            }
        }
        false
    }

    fn current(&self) -> Composition {
        Composition::new(self.stack.iter().map(|&i| self.values[i]).collect())
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        let mut live = if self.started {
            self.backtrack()
        } else {
            self.started = true;
            true
        };
        while live {
            if self.descend() {
                if self.parts == 0 {
                    // The empty tuple has no successor.
                    self.done = true;
                }
                return Some(self.current());
            }
            live = self.backtrack();
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigNat {
        BigNat::from(v)
    }

    #[test]
    fn counts_from_closed_forms() {
        assert_eq!(count(5, 2, PartBounds::at_least(0)), big(6));
        assert_eq!(count(3, 2, PartBounds::finite(1, 2).unwrap()), big(2));
        assert_eq!(count(4, 3, PartBounds::finite(0, 2).unwrap()), big(6));
        assert_eq!(count(5, 2, PartBounds::at_least(1)), big(4));
    }

    #[test]
    fn empty_composition() {
        assert_eq!(count(0, 0, PartBounds::at_least(3)), big(1));
        assert_eq!(count(0, 0, PartBounds::finite(2, 5).unwrap()), big(1));
        assert_eq!(count(1, 0, PartBounds::at_least(0)), big(0));
        assert_eq!(count(1, 0, PartBounds::finite(0, 4).unwrap()), big(0));
        let all: Vec<_> = enumerate(0, 0, PartBounds::at_least(0), 10)
            .unwrap()
            .collect();
        assert_eq!(all, vec![Composition::new(vec![])]);
    }

    #[test]
    fn unreachable_targets_count_zero() {
        assert_eq!(count(2, 3, PartBounds::at_least(1)), big(0));
        assert_eq!(count(10, 2, PartBounds::finite(0, 4).unwrap()), big(0));
        assert_eq!(count_support(7, 3, &[2]).unwrap(), big(0));
    }

    #[test]
    fn support_counts() {
        assert_eq!(count_support(5, 2, &[1, 2, 3]).unwrap(), big(2));
        assert_eq!(count_support(5, 2, &[0, 1, 2, 3, 4, 5]).unwrap(), big(6));
        assert_eq!(count_support(5, 2, &[3, 1, 2, 2]).unwrap(), big(2));
        assert_eq!(count_support(3, 0, &[1]).unwrap(), big(0));
        assert_eq!(count_support(0, 0, &[1]).unwrap(), big(1));
        assert_eq!(count_support(5, 2, &[]), Err(Error::EmptySupport));
    }

    #[test]
    fn invalid_bounds_rejected() {
        assert_eq!(
            PartBounds::finite(3, 2),
            Err(Error::InvalidBounds { lower: 3, upper: 2 })
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let got: Vec<Vec<usize>> =
            enumerate(5, 2, PartBounds::at_least(0), DEFAULT_ENUMERATION_GUARD)
                .unwrap()
                .map(Composition::into_parts)
                .collect();
        assert_eq!(
            got,
            [[0, 5], [1, 4], [2, 3], [3, 2], [4, 1], [5, 0]].map(|p| p.to_vec())
        );
    }

    #[test]
    fn enumeration_small_cases() {
        let zeros: Vec<_> = enumerate(0, 3, PartBounds::finite(0, 4).unwrap(), 1000)
            .unwrap()
            .collect();
        assert_eq!(zeros, vec![Composition::new(vec![0, 0, 0])]);
        assert_eq!(
            enumerate_support(6, 3, &[1, 2, 3], 1000).unwrap().count(),
            7
        );
        assert_eq!(enumerate_support(7, 3, &[2], 1000).unwrap().count(), 0);
        // Gaps in the support that the min/max pruning cannot see.
        let gaps: Vec<_> = enumerate_support(5, 2, &[0, 5], 1000).unwrap().collect();
        assert_eq!(gaps.len(), 2);
    }

    #[test]
    fn guard_is_enforced() {
        let err = enumerate(
            30,
            8,
            PartBounds::finite(0, 30).unwrap(),
            DEFAULT_ENUMERATION_GUARD,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::GuardExceeded {
                guard: 10_000_000,
                ..
            }
        ));
        assert!(enumerate(3, 3, PartBounds::finite(0, 9).unwrap(), 1000).is_ok());
        assert!(enumerate(3, 3, PartBounds::finite(0, 9).unwrap(), 999).is_err());
    }

    #[test]
    fn h_sequence_small() {
        assert_eq!(h_sequence(1, 1).unwrap(), vec![big(1), big(1)]);
        let h = h_sequence(2, 5).unwrap();
        assert_eq!(h.len(), 11);
        assert_eq!(h.iter().sum::<BigNat>(), big(363));
        assert_eq!(h[0], big(5));
        assert_eq!(h_sequence(0, 4).unwrap(), vec![big(4)]);
        assert_eq!(h_sequence(3, 0), Err(Error::ZeroParts));
    }
}
