use num_traits::Zero;

use super::{ExactPmf, RectSpec};
use crate::bignum::BigNat;
use crate::polycoeff::{triangle_row, RowBuilder};

/// Distribution of the sum of `m` independent uniform draws from `a..=b`.
///
/// Support `m*a..=m*b`; the weight at `n` is `C(m, n - m*a)_{b-a+1}` out of
/// `(b - a + 1)^m`.
pub fn pmf_s(spec: &RectSpec) -> ExactPmf {
    let m = spec.max_parts();
    let row = triangle_row(spec.arity() - 1, m);
    ExactPmf::new((m * spec.lower()) as i64, row.into_entries())
}

/// Distribution of the integer represented by a uniformly chosen composition
/// with `1..=m` parts in `a..=b`.
///
/// The weight at `n` is `sum_{j=1..m} C(j, n - j*a)_{b-a+1}`, the total
/// `sum_{j=1..m} (b - a + 1)^j`. The support is `a..=m*b`, with zero weights
/// in any gaps between the per-`j` ranges `j*a..=j*b`.
pub fn pmf_x(spec: &RectSpec) -> ExactPmf {
    let (a, b, m) = (spec.lower(), spec.upper(), spec.max_parts());
    // One part already reaches the smallest sum, a.
    let offset = a;
    let mut weights = vec![BigNat::zero(); m * b - offset + 1];
    let mut rows = RowBuilder::new(b - a);
    for j in 1..=m {
        let start = j * a - offset;
        for (slot, entry) in weights[start..].iter_mut().zip(rows.advance().entries()) {
            *slot += entry;
        }
    }
    ExactPmf::new(offset as i64, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bignum::pow;

    fn weights(p: &ExactPmf) -> Vec<u64> {
        p.weights()
            .iter()
            .map(|w| u64::try_from(w).unwrap())
            .collect()
    }

    #[test]
    fn s_single_part_is_uniform() {
        let p = pmf_s(&RectSpec::rectangle(4, 1).unwrap());
        assert_eq!(weights(&p), [1; 5]);
        assert_eq!(p.offset(), 0);
    }

    #[test]
    fn s_trinomial_row() {
        let p = pmf_s(&RectSpec::rectangle(2, 3).unwrap());
        assert_eq!(weights(&p), [1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(p.total(), &BigNat::from(27u32));
    }

    #[test]
    fn s_shifted_interval() {
        let p = pmf_s(&RectSpec::new(1, 2, 2).unwrap());
        assert_eq!(p.support(), 2..=4);
        assert_eq!(weights(&p), [1, 2, 1]);
    }

    #[test]
    fn s_point_mass() {
        let p = pmf_s(&RectSpec::new(3, 3, 4).unwrap());
        assert_eq!(p.support(), 12..=12);
    }

    #[test]
    fn x_single_part_is_uniform() {
        let p = pmf_x(&RectSpec::rectangle(3, 1).unwrap());
        assert_eq!(weights(&p), [1; 4]);
    }

    #[test]
    fn x_rectangle_total_and_origin() {
        let p = pmf_x(&RectSpec::rectangle(2, 5).unwrap());
        assert_eq!(p.total(), &BigNat::from(363u32));
        assert_eq!(p.weight(0), BigNat::from(5u32));
        assert_eq!(p.weight(10), BigNat::from(1u32));
        // Closed form ((l+1)^(m+1) - (l+1)) / l.
        let p = pmf_x(&RectSpec::rectangle(7, 9).unwrap());
        assert_eq!(p.total(), &((pow(8, 10) - 8u32) / 7u32));
    }

    #[test]
    fn x_point_masses_at_multiples() {
        let p = pmf_x(&RectSpec::new(3, 3, 3).unwrap());
        assert_eq!(p.support(), 3..=9);
        assert_eq!(weights(&p), [1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn x_interval_small() {
        // j=1: {1,2}; j=2: sums 2,3,3,4.
        let p = pmf_x(&RectSpec::new(1, 2, 2).unwrap());
        assert_eq!(p.support(), 1..=4);
        assert_eq!(weights(&p), [1, 2, 2, 1]);
        assert_eq!(p.total(), &BigNat::from(6u32));
    }
}
