//! Rows of the (l+1)-nomial triangle.
//!
//! Row `k` holds the coefficients of `(1 + x + ... + x^l)^k`, i.e. the
//! polynomial coefficients `C(k, n)_{l+1}` for `0 <= n <= k*l`. Each entry is
//! the sum of the `l + 1` entries above it in row `k - 1`; entries outside a
//! row are zero.

use num_traits::{One, Zero};

use crate::bignum::{self, BigNat};
use crate::{Error, Result};

/// Row `k` of the (l+1)-nomial triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    width: usize,
    index: usize,
    entries: Vec<BigNat>,
}

impl TriangleRow {
    /// Row zero, `[1]`, of the triangle with part width `l`.
    pub fn first(width: usize) -> Self {
        TriangleRow {
            width,
            index: 0,
            entries: vec![BigNat::one()],
        }
    }

    /// The part width `l`; the row arity is `l + 1`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// The row index `k`.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn entries(&self) -> &[BigNat] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigNat> {
        self.entries
    }

    /// Number of entries, `k*l + 1`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry `n`, or `None` outside `0..=k*l`.
    pub fn get(&self, n: i64) -> Option<&BigNat> {
        usize::try_from(n).ok().and_then(|n| self.entries.get(n))
    }

    /// Entry `n`, treating positions outside the row as zero.
    pub fn coeff(&self, n: i64) -> BigNat {
        self.get(n).cloned().unwrap_or_else(BigNat::zero)
    }

    /// Position `floor(k*l/2)` of the central (maximal) entry.
    pub fn central_index(&self) -> usize {
        self.index * self.width / 2
    }

    pub fn central(&self) -> &BigNat {
        &self.entries[self.central_index()]
    }

    /// The next row, built with a sliding window over this one.
    pub fn next_row(&self) -> TriangleRow {
        let l = self.width;
        let prev = &self.entries;
        let len = prev.len() + l;
        let mut entries = Vec::with_capacity(len);
        let mut window = BigNat::zero();
        for n in 0..len {
            if n < prev.len() {
                window += &prev[n];
            }
            if n > l {
                window -= &prev[n - l - 1];
            }
            entries.push(window.clone());
        }
        TriangleRow {
            width: l,
            index: self.index + 1,
            entries,
        }
    }
}

/// Yields rows `0, 1, 2, ...` of one triangle, each built from its predecessor.
#[derive(Debug, Clone)]
pub struct RowBuilder {
    current: TriangleRow,
}

impl RowBuilder {
    pub fn new(width: usize) -> Self {
        RowBuilder {
            current: TriangleRow::first(width),
        }
    }

    pub fn current(&self) -> &TriangleRow {
        &self.current
    }

    /// Moves to the next row and returns it.
    pub fn advance(&mut self) -> &TriangleRow {
        self.current = self.current.next_row();
        &self.current
    }
}

impl Iterator for RowBuilder {
    type Item = TriangleRow;

    fn next(&mut self) -> Option<TriangleRow> {
        let next = self.current.next_row();
        Some(std::mem::replace(&mut self.current, next))
    }
}

/// Row `k` of the (l+1)-nomial triangle.
pub fn triangle_row(l: usize, k: usize) -> TriangleRow {
    let mut builder = RowBuilder::new(l);
    for _ in 0..k {
        builder.advance();
    }
    builder.current
}

/// The polynomial coefficient `C(k, n)_{l+1}`; zero when `n` is outside `0..=k*l`.
pub fn poly_coeff(l: usize, k: usize, n: i64) -> BigNat {
    if n < 0 || n as u128 > (k as u128) * (l as u128) {
        return BigNat::zero();
    }
    triangle_row(l, k).coeff(n)
}

/// The central coefficient `C(k, floor(k*l/2))_{l+1}`, the maximum of row `k`.
pub fn central_coeff(l: usize, k: usize) -> BigNat {
    triangle_row(l, k).central().clone()
}

/// Natural log of `(l+1)^k / sqrt(2*pi*k*((l+1)^2 - 1)/12)`.
pub fn ln_central_asymptotic(l: usize, k: usize) -> Result<f64> {
    if l == 0 {
        return Err(Error::ZeroWidth);
    }
    if k == 0 {
        return Err(Error::ZeroRow);
    }
    let base = (l + 1) as f64;
    let variance = ((l + 1) * (l + 1) - 1) as f64 / 12.0;
    let spread = 2.0 * std::f64::consts::PI * k as f64 * variance;
    Ok(k as f64 * base.ln() - 0.5 * spread.ln())
}

/// The normal approximation `(l+1)^k / sqrt(2*pi*k*((l+1)^2 - 1)/12)` to the
/// central coefficient. Overflows to `inf` for large rows; use
/// [`central_asymptotic_ratio`] there.
pub fn central_asymptotic(l: usize, k: usize) -> Result<f64> {
    ln_central_asymptotic(l, k).map(f64::exp)
}

/// `central_coeff(l, k) / central_asymptotic(l, k)`, evaluated in log space.
pub fn central_asymptotic_ratio(l: usize, k: usize) -> Result<f64> {
    let ln_formula = ln_central_asymptotic(l, k)?;
    Ok((bignum::ln(&central_coeff(l, k)) - ln_formula).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_u64(l: usize, k: usize) -> Vec<u64> {
        triangle_row(l, k)
            .entries()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn published_rows() {
        assert_eq!(row_u64(2, 3), [1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(row_u64(3, 3), [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]);
        assert_eq!(row_u64(1, 3), [1, 3, 3, 1]);
        assert_eq!(row_u64(0, 5), [1]);
    }

    #[test]
    fn row_zero_is_one() {
        for l in 0..5 {
            assert_eq!(row_u64(l, 0), [1]);
        }
    }

    #[test]
    fn coefficient_lookup() {
        assert_eq!(poly_coeff(2, 3, 3), BigNat::from(7u32));
        assert_eq!(poly_coeff(2, 3, -1), BigNat::zero());
        assert_eq!(poly_coeff(2, 3, 7), BigNat::zero());
        // Coefficient of x^12 in (1+x+x^2+x^3+x^4)^6, by naive expansion.
        assert_eq!(poly_coeff(4, 6, 12), BigNat::from(1751u32));
    }

    #[test]
    fn central_coefficients() {
        assert_eq!(central_coeff(1, 4), BigNat::from(6u32));
        assert_eq!(central_coeff(2, 4), BigNat::from(19u32));
        assert_eq!(central_coeff(3, 3), BigNat::from(12u32));
        assert_eq!(central_coeff(5, 0), BigNat::one());
    }

    #[test]
    fn asymptotic_formula_values() {
        let v = central_asymptotic(1, 4).unwrap();
        assert!((v - 6.383076486422923).abs() < 1e-12, "{v}");
        let v = central_asymptotic(2, 1).unwrap();
        assert!((v - 1.4658075357087597).abs() < 1e-12, "{v}");
        // Tiny rows carry no accuracy claim; k = 1, l = 1 gives 1 / (2/sqrt(pi/2)).
        let r = central_asymptotic_ratio(1, 1).unwrap();
        assert!((r - 0.6266570686577501).abs() < 1e-12, "{r}");
    }

    #[test]
    fn asymptotic_rejects_degenerate_input() {
        assert_eq!(central_asymptotic(0, 4), Err(Error::ZeroWidth));
        assert_eq!(central_asymptotic_ratio(0, 4), Err(Error::ZeroWidth));
        assert_eq!(central_asymptotic(2, 0), Err(Error::ZeroRow));
    }

    #[test]
    fn asymptotic_ratio_converges() {
        let r = central_asymptotic_ratio(1, 100).unwrap();
        assert!((r - 1.0).abs() < 0.01, "{r}");
        let r100 = central_asymptotic_ratio(2, 100).unwrap();
        let r400 = central_asymptotic_ratio(2, 400).unwrap();
        assert!((r400 - 1.0).abs() < (r100 - 1.0).abs());
        // Far beyond f64 range for the raw formula.
        assert!(central_asymptotic(2, 1000).unwrap().is_infinite());
        let r = central_asymptotic_ratio(2, 1000).unwrap();
        assert!((r - 1.0).abs() < 1e-3, "{r}");
    }

    #[test]
    fn builder_yields_consecutive_rows() {
        let rows: Vec<_> = RowBuilder::new(2).take(4).collect();
        for (k, row) in rows.iter().enumerate() {
            assert_eq!(row.index(), k);
            assert_eq!(row.len(), 2 * k + 1);
        }
        assert_eq!(rows[3], triangle_row(2, 3));
    }
}
