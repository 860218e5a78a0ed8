//! Truncated formal power series over exact rationals.
//!
//! Just enough arithmetic for the series <-> continued-fraction conversions:
//! fixed-length coefficient vectors with exact add/sub/mul, reciprocal of a
//! unit (nonzero constant term) series, and a shift-down used to strip one
//! power of the variable. Truncation order is the vector length; binary
//! operations take the shorter length.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Power series truncated after `coeffs.len()` terms: `coeffs[k]` is the
/// coefficient of the k-th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        Self { coeffs }
    }

    pub fn constant(value: Rational, len: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); len];
        coeffs[0] = value;
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.iter().take(len).cloned().collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Reciprocal by the standard convolution recurrence.
    /// Requires a nonzero constant term.
    pub fn reciprocal(&self) -> Option<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut coeffs = vec![Rational::zero(); self.len()];
        coeffs[0] = inv0.clone();
        for n in 1..self.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let a = self.coeff(k);
                if a.is_zero() {
                    continue;
                }
                acc += a * &coeffs[n - k];
            }
            coeffs[n] = -&inv0 * acc;
        }
        Some(Self::new(coeffs))
    }

    /// Exact division: `self / other`, truncated to the shorter length.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let len = self.len().min(other.len());
        Some(self.truncate(len).mul(&other.truncate(len).reciprocal()?))
    }

    /// Divide by the variable: drop the constant term (which must be zero)
    /// and shift every coefficient down one power. Shrinks the length by one.
    pub fn shift_down(&self) -> Option<Self> {
        if !self.coeff(0).is_zero() || self.len() < 2 {
            return None;
        }
        Some(Self::new(self.coeffs[1..].to_vec()))
    }

    pub fn one(len: usize) -> Self {
        Self::constant(Rational::one(), len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn series(vals: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(vals.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn multiplication_truncates_to_shorter_operand() {
        let a = series(&[1, 1, 1, 1]);
        let b = series(&[1, -1, 0]);
        // (1 + x + x^2 + x^3)(1 - x) = 1 - x^4, truncated at order 2.
        assert_eq!(a.mul(&b), series(&[1, 0, 0]));
    }

    #[test]
    fn reciprocal_inverts_geometric_series() {
        let a = series(&[1, 1, 0, 0, 0]);
        // 1/(1 + x) = 1 - x + x^2 - x^3 + x^4
        assert_eq!(a.reciprocal().unwrap(), series(&[1, -1, 1, -1, 1]));
        assert!(series(&[0, 1, 2]).reciprocal().is_none());
    }

    #[test]
    fn reciprocal_round_trips() {
        let a = TruncatedSeries::new(vec![rat(2, 3), int(1), rat(-5, 7), int(4), rat(1, 2)]);
        let product = a.mul(&a.reciprocal().unwrap());
        assert_eq!(product, TruncatedSeries::one(5));
    }

    #[test]
    fn shift_down_requires_zero_constant() {
        assert_eq!(series(&[0, 2, 3]).shift_down().unwrap(), series(&[2, 3]));
        assert!(series(&[1, 2, 3]).shift_down().is_none());
    }
}
