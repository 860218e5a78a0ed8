//! Exact rational arithmetic helpers.
//!
//! All exact tables in this crate are built from [`Rational`] values
//! (arbitrary-size signed numerator, positive denominator, kept canonical by
//! `num-rational`). This module adds the pieces the tables need on top of the
//! raw arithmetic: decimal rounding at a fixed number of places, fixed-point
//! rendering, parsing of `"num/den"` strings, exact rational powers, and
//! conversion to `f64`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number: the numeric backbone of every exact table.
pub type Rational = BigRational;

/// Shorthand for a small rational from two machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a small integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"3"`, `"-3/4"`, or `"0.25"`-style decimal strings into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError(s.to_string()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n
            .trim()
            .parse()
            .map_err(|_| RationalParseError(s.to_string()))?;
        let denom: BigInt = d
            .trim()
            .parse()
            .map_err(|_| RationalParseError(s.to_string()))?;
        if denom.is_zero() {
            return Err(RationalParseError(s.to_string()));
        }
        return Ok(Rational::new(numer, denom));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let places = frac.len() as u32;
        if frac.chars().any(|c| !c.is_ascii_digit()) || places == 0 {
            return Err(RationalParseError(s.to_string()));
        }
        let negative = whole.starts_with('-');
        let whole_part: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole
                .parse()
                .map_err(|_| RationalParseError(s.to_string()))?
        };
        let frac_part: BigInt = frac
            .parse()
            .map_err(|_| RationalParseError(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(places);
        let magnitude = whole_part.abs() * &scale + frac_part;
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(numer, scale));
    }
    let numer: BigInt = s.parse().map_err(|_| RationalParseError(s.to_string()))?;
    Ok(Rational::from_integer(numer))
}

/// Error for unparseable rational strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a rational (expected `n`, `n/d`, or a plain decimal)")]
pub struct RationalParseError(pub String);

/// Round to the nearest integer, halves away from zero.
///
/// This is the rule behind every fixed-decimal table in the crate: 1/65 at
/// seven places becomes 0.0153846, 1/13700 becomes 0.0000730.
pub fn round_half_away(value: &Rational) -> BigInt {
    let two = BigInt::from(2);
    let (num, den) = (value.numer(), value.denom());
    // floor((2*|num| + den) / (2*den)) applied to the magnitude, sign restored.
    let magnitude = (num.abs() * &two + den).div_floor(&(den * &two));
    match num.sign() {
        Sign::Minus => -magnitude,
        _ => magnitude,
    }
}

/// Round to `places` decimal places, halves away from zero. Exact.
pub fn round_decimal(value: &Rational, places: u32) -> Rational {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = value * Rational::from_integer(scale.clone());
    Rational::new(round_half_away(&scaled), scale)
}

/// Render at exactly `places` decimal places (the value is rounded first).
///
/// `format_decimal(&rat(1, 2), 7)` renders as `0.5000000`, matching the
/// layout of the printed seven-place tables.
pub fn format_decimal(value: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = round_half_away(&(value * Rational::from_integer(scale.clone())));
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let (whole, frac) = magnitude.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>width$}", width = places as usize)
}

/// Render as `n` or `n/d`, never reducing beyond canonical form.
pub fn format_ratio(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Exact rational power with a rational exponent.
///
/// Succeeds when the result is itself rational: integer exponents always
/// work, a fractional exponent `a/b` requires the base to be an exact b-th
/// power. Returns `None` otherwise (the result would be irrational).
pub fn rational_pow(base: &Rational, exponent: &Rational) -> Option<Rational> {
    if exponent.is_zero() {
        return Some(Rational::one());
    }
    if base.is_zero() {
        return if exponent.is_positive() {
            Some(Rational::zero())
        } else {
            None
        };
    }
    let root = exponent.denom().to_u32()?;
    let rooted = if root == 1 {
        base.clone()
    } else {
        if base.is_negative() {
            return None;
        }
        Rational::new(
            exact_nth_root(base.numer(), root)?,
            exact_nth_root(base.denom(), root)?,
        )
    };
    let power = exponent.numer().to_i64()?;
    let magnitude = rooted.pow(power.unsigned_abs().try_into().ok()?);
    Some(if power < 0 {
        magnitude.recip()
    } else {
        magnitude
    })
}

fn exact_nth_root(value: &BigInt, n: u32) -> Option<BigInt> {
    let root = value.nth_root(n);
    if root.pow(n) == *value {
        Some(root)
    } else {
        None
    }
}

/// Convert to `f64`.
///
/// Numerator and denominator are shifted down together until both fit the
/// f64 exponent range, so huge intermediates (factorial tables, deep
/// convergents) still convert with full relative precision.
pub fn to_f64(value: &Rational) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    let num = value.numer();
    let den = value.denom();
    let n_shift = num.bits().saturating_sub(900);
    let d_shift = den.bits().saturating_sub(900);
    let n = (num >> n_shift).to_f64().unwrap_or(f64::NAN);
    let d = (den >> d_shift).to_f64().unwrap_or(f64::NAN);
    (n / d) * 2f64.powi(n_shift as i32 - d_shift as i32)
}
