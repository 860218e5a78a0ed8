//! Continued fractions with unit partial denominators: conversion from power
//! series by successive division, the closed-form numerator law for the
//! factorial family, convergents and their bracketing averages, collapse of
//! CF segments to integer Möbius maps, cubic tail closures, and expansion of
//! rationals into simple continued fractions.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::power_series::TruncatedSeries;
use crate::rational::{to_f64, Rational};
use crate::series::FactorialFamily;

/// Errors from the continued-fraction machinery.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CfError {
    #[error("leading series coefficient is zero; cannot start the division")]
    LeadingCoefficientZero,
    #[error("need at least {needed} coefficients for depth {depth}, got {got}")]
    InsufficientCoefficients {
        depth: usize,
        needed: usize,
        got: usize,
    },
    #[error("division breakdown at level {level}: remainder starts above first order")]
    Breakdown { level: usize },
    #[error("convergent count {count} exceeds what {numerators} numerators support")]
    CountExceedsNumerators { count: usize, numerators: usize },
    #[error("segment bounds {from}..{to} out of range for {numerators} numerators")]
    SegmentOutOfRange {
        from: usize,
        to: usize,
        numerators: usize,
    },
    #[error("values do not bracket a common interval: {0}")]
    BracketViolation(String),
    #[error("closure parameter out of range: {0}")]
    ClosureParameter(String),
    #[error("no positive root found for the closure cubic in ({lo}, {hi})")]
    ClosureRootMissing { lo: f64, hi: f64 },
    #[error("closure pattern does not occur in the fraction's numerators: {0}")]
    ClosureMismatch(String),
    #[error("need at least {needed} levels, got {got}")]
    TooFewLevels { needed: usize, got: usize },
    #[error("value must be positive")]
    NonPositiveValue,
}

/// Generalized continued fraction `leading / (1 + a1/(1 + a2/(1 + ...)))`
/// with all partial denominators equal to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCf {
    /// The numerator above the outermost `1 +`.
    pub leading: Rational,
    /// Partial numerators `a1, a2, ...`.
    pub numerators: Vec<Rational>,
    /// True when the fraction terminates exactly there (trailing numerators
    /// are genuinely zero), false for a truncation of an infinite fraction.
    pub exact: bool,
}

/// One convergent `h/k`, kept unreduced: `h` and `k` are stored exactly as
/// the three-term recurrence produces them, so the tables read `20/34` and
/// `300/501`, not their reduced forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub h: Rational,
    pub k: Rational,
}

impl Convergent {
    /// Reduced value `h/k`.
    pub fn value(&self) -> Rational {
        &self.h / &self.k
    }

    pub fn value_f64(&self) -> f64 {
        to_f64(&self.value())
    }

    /// Unreduced rendering `h/k`.
    pub fn unreduced(&self) -> String {
        format!(
            "{}/{}",
            crate::rational::format_ratio(&self.h),
            crate::rational::format_ratio(&self.k)
        )
    }
}

/// Emit `count` partial numerators of the factorial family's continued
/// fraction by the closed-form law
/// `p·x^q, q·x^q, (p+q)·x^q, 2q·x^q, (p+2q)·x^q, 3q·x^q, ...`
/// with leading numerator `x^m`.
pub fn factorial_cf(family: &FactorialFamily, count: usize) -> GeneralizedCf {
    assert!(count >= 1, "numerator count must be positive");
    let xq = family.x_pow_q();
    let mut numerators = Vec::with_capacity(count);
    numerators.push(family.p() * xq);
    let mut i = BigInt::one();
    while numerators.len() < count {
        let iq = family.q() * Rational::from_integer(i.clone());
        numerators.push(&iq * xq);
        if numerators.len() < count {
            numerators.push((family.p() + &iq) * xq);
        }
        i += 1;
    }
    GeneralizedCf {
        leading: family.x_pow_m().clone(),
        numerators,
        exact: false,
    }
}

/// Convert a power series (given by its signed coefficients, nonzero leading
/// coefficient) into a generalized continued fraction by successive division,
/// in exact truncated-series arithmetic.
///
/// Each level extracts one first-order numerator; a remainder that starts
/// above first order means the next division would be by a series with zero
/// constant term, which is a breakdown of the algorithm (it has no pivot
/// rule). A remainder that is identically zero terminates the fraction
/// exactly; the remaining numerators are zero.
pub fn series_to_cf(coeffs: &[Rational], depth: usize) -> Result<GeneralizedCf, CfError> {
    assert!(depth >= 1, "depth must be positive");
    if coeffs.first().map(Zero::is_zero).unwrap_or(true) {
        return Err(CfError::LeadingCoefficientZero);
    }
    if coeffs.len() < 2 * depth {
        return Err(CfError::InsufficientCoefficients {
            depth,
            needed: 2 * depth,
            got: coeffs.len(),
        });
    }
    let leading = coeffs[0].clone();
    let mut v = TruncatedSeries::new(coeffs.to_vec()).scale(&leading.recip());
    let mut numerators: Vec<Rational> = Vec::with_capacity(depth);
    let mut exact = false;
    for level in 1..=depth {
        let w = TruncatedSeries::one(v.len())
            .sub(&v)
            .div(&v)
            .expect("v keeps constant term 1");
        if w.is_zero() {
            exact = true;
            break;
        }
        let a = w.coeff(1);
        if a.is_zero() {
            return Err(CfError::Breakdown { level });
        }
        v = w
            .shift_down()
            .expect("w has zero constant term")
            .scale(&a.recip());
        numerators.push(a);
    }
    while numerators.len() < depth {
        numerators.push(Rational::zero());
    }
    Ok(GeneralizedCf {
        leading,
        numerators,
        exact,
    })
}

/// Re-expand a (truncated) continued fraction as a power series, exactly.
/// The result carries `numerators.len() + 1` coefficients; a fraction built
/// from a series by [`series_to_cf`] at depth `d` matches that series through
/// order `d`.
pub fn cf_to_series(cf: &GeneralizedCf) -> TruncatedSeries {
    let len = cf.numerators.len() + 1;
    let mut denom = TruncatedSeries::one(len);
    for a in cf.numerators.iter().rev() {
        let recip = denom
            .reciprocal()
            .expect("denominators keep constant term 1");
        let mut shifted = vec![Rational::zero(); len];
        for k in 0..len - 1 {
            shifted[k + 1] = recip.coeff(k) * a;
        }
        denom = TruncatedSeries::one(len).add(&TruncatedSeries::new(shifted));
    }
    denom
        .reciprocal()
        .expect("denominator has constant term 1")
        .scale(&cf.leading)
}

/// First `count` convergents `0/1, leading/1, ...` by the three-term
/// recurrence `h_n = h_{n-1} + a_{n-1} * h_{n-2}` (same for `k`), unreduced.
pub fn convergents(cf: &GeneralizedCf, count: usize) -> Result<Vec<Convergent>, CfError> {
    if count > cf.numerators.len() + 2 {
        return Err(CfError::CountExceedsNumerators {
            count,
            numerators: cf.numerators.len(),
        });
    }
    let mut out = Vec::with_capacity(count);
    let mut prev = Convergent {
        h: Rational::zero(),
        k: Rational::one(),
    };
    let mut curr = Convergent {
        h: cf.leading.clone(),
        k: Rational::one(),
    };
    if count >= 1 {
        out.push(prev.clone());
    }
    if count >= 2 {
        out.push(curr.clone());
    }
    for n in 2..count {
        let a = &cf.numerators[n - 2];
        let next = Convergent {
            h: &curr.h + a * &prev.h,
            k: &curr.k + a * &prev.k,
        };
        prev = curr;
        curr = next.clone();
        out.push(next);
    }
    Ok(out)
}

/// Lower/upper bracketing subsequences of convergent values and their
/// adjacent-pair averages, which again bracket alternately.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketAverage {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub averaged_lower: Vec<f64>,
    pub averaged_upper: Vec<f64>,
}

/// Split convergent values into the two monotone bracketing subsequences
/// (even indices below, odd above) and average adjacent opposite-side values.
///
/// Validation is non-strict so degenerate constant inputs pass; the strict
/// bracketing of positive-numerator fractions is a property of the inputs,
/// not a requirement here.
pub fn bracket_and_average(values: &[f64]) -> Result<BracketAverage, CfError> {
    let lower: Vec<f64> = values.iter().copied().step_by(2).collect();
    let upper: Vec<f64> = values.iter().copied().skip(1).step_by(2).collect();
    for w in lower.windows(2) {
        if w[1] < w[0] {
            return Err(CfError::BracketViolation(format!(
                "lower values decrease: {} -> {}",
                w[0], w[1]
            )));
        }
    }
    for w in upper.windows(2) {
        if w[1] > w[0] {
            return Err(CfError::BracketViolation(format!(
                "upper values increase: {} -> {}",
                w[0], w[1]
            )));
        }
    }
    if let (Some(max_lower), Some(min_upper)) = (
        lower.iter().copied().reduce(f64::max),
        upper.iter().copied().reduce(f64::min),
    ) {
        if max_lower > min_upper {
            return Err(CfError::BracketViolation(format!(
                "sides overlap: lower reaches {max_lower}, upper reaches {min_upper}"
            )));
        }
    }
    let averaged: Vec<f64> = values.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let averaged_lower = averaged.iter().copied().step_by(2).collect();
    let averaged_upper = averaged.iter().copied().skip(1).step_by(2).collect();
    Ok(BracketAverage {
        lower,
        upper,
        averaged_lower,
        averaged_upper,
    })
}

/// Integer Möbius map `t -> (alpha + beta*t) / (gamma + delta*t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusMap {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub delta: BigInt,
}

impl MobiusMap {
    /// The identity map `t -> t`.
    pub fn identity() -> Self {
        Self {
            alpha: BigInt::zero(),
            beta: BigInt::one(),
            gamma: BigInt::one(),
            delta: BigInt::zero(),
        }
    }

    /// The map `t -> a/(1 + t)` for a rational numerator `a`, scaled to
    /// integer entries.
    fn level(a: &Rational) -> Self {
        Self {
            alpha: a.numer().clone(),
            beta: BigInt::zero(),
            gamma: a.denom().clone(),
            delta: a.denom().clone(),
        }
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            alpha: &self.beta * &other.alpha + &self.alpha * &other.gamma,
            beta: &self.beta * &other.beta + &self.alpha * &other.delta,
            gamma: &self.delta * &other.alpha + &self.gamma * &other.gamma,
            delta: &self.delta * &other.beta + &self.gamma * &other.delta,
        }
    }

    /// `alpha*delta - beta*gamma`; nonzero for every collapsed segment.
    pub fn determinant(&self) -> BigInt {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }

    pub fn apply(&self, t: &Rational) -> Option<Rational> {
        let denom = Rational::from_integer(self.gamma.clone())
            + Rational::from_integer(self.delta.clone()) * t;
        if denom.is_zero() {
            return None;
        }
        let numer = Rational::from_integer(self.alpha.clone())
            + Rational::from_integer(self.beta.clone()) * t;
        Some(numer / denom)
    }

    pub fn apply_f64(&self, t: f64) -> f64 {
        let alpha = big_to_f64(&self.alpha);
        let beta = big_to_f64(&self.beta);
        let gamma = big_to_f64(&self.gamma);
        let delta = big_to_f64(&self.delta);
        (alpha + beta * t) / (gamma + delta * t)
    }
}

fn big_to_f64(value: &BigInt) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Collapse the numerators `from..to` (0-based levels) into a single exact
/// integer Möbius map acting on the tail value.
///
/// A segment starting at level 0 includes the leading numerator, so its map
/// sends the tail directly to the fraction's value; a zero-length segment is
/// the identity. The composition law
/// `collapse(0, b) = collapse(0, a) ∘ collapse(a, b)` holds exactly because
/// both sides are literally the same matrix product.
pub fn collapse_segment(cf: &GeneralizedCf, from: usize, to: usize) -> Result<MobiusMap, CfError> {
    if from > to || to > cf.numerators.len() {
        return Err(CfError::SegmentOutOfRange {
            from,
            to,
            numerators: cf.numerators.len(),
        });
    }
    let mut map = MobiusMap::identity();
    if from == to {
        return Ok(map);
    }
    if from == 0 {
        map = MobiusMap::level(&cf.leading);
    }
    for a in &cf.numerators[from..to] {
        map = map.compose(&MobiusMap::level(a));
    }
    Ok(map)
}

/// How a tail closure models the remainder of the fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosurePattern {
    /// Numerators continue pairwise: `a-1, a-1, a, a, a+1, ...`.
    Paired { a: u32 },
    /// Numerators continue singly: `n, n+1, n+2, ...`.
    Single { n: u32 },
}

/// A tail closed by assuming three consecutive tail values lie in arithmetic
/// progression, which turns the self-similar remainder into a cubic.
#[derive(Debug, Clone, PartialEq)]
pub struct TailClosure {
    pub pattern: ClosurePattern,
    /// Cubic coefficients `[c3, c2, c1, c0]`, exact.
    pub cubic: [Rational; 4],
    /// The positive root of the cubic.
    pub root: f64,
    /// Bracket the root was isolated in.
    pub bracket: (f64, f64),
    /// Value of the tail the closure attaches to the fraction.
    pub tail_value: f64,
    /// Cruder constant-numerator model of the same tail, kept as an error
    /// scale for the closure.
    pub flat_tail_value: f64,
}

impl TailClosure {
    pub fn cubic_residual(&self) -> f64 {
        let c: Vec<f64> = self.cubic.iter().map(to_f64).collect();
        ((c[0] * self.root + c[1]) * self.root + c[2]) * self.root + c[3]
    }
}

/// Close a paired tail `a-1, a-1, a, a, a+1, ...`.
///
/// With `r`, `s`, `t` the tails starting at `a-1`, `a`, `a+1` and the
/// postulate `r + t = 2s`, the middle tail solves
/// `2s^3 + 2s^2 - (2a-1)s - a = 0`; the closure returns the unique positive
/// root `s` and attaches `r = ((a-1)s + (a-1)) / (s + a)`.
pub fn tail_closure_paired(a: u32) -> Result<TailClosure, CfError> {
    if a < 2 {
        return Err(CfError::ClosureParameter(format!(
            "paired closure needs a >= 2, got {a}"
        )));
    }
    let af = f64::from(a);
    let cubic = [
        Rational::from_integer(2.into()),
        Rational::from_integer(2.into()),
        Rational::from_integer(BigInt::from(-(2 * i64::from(a) - 1))),
        Rational::from_integer(BigInt::from(-i64::from(a))),
    ];
    let (root, bracket) = positive_cubic_root(&cubic, 0.0, af)?;
    let tail_value = ((af - 1.0) * root + (af - 1.0)) / (root + af);
    // Constant-numerator model of the same tail: r(r+1) = a-1.
    let flat_tail_value = ((4.0 * (af - 1.0) + 1.0).sqrt() - 1.0) / 2.0;
    Ok(TailClosure {
        pattern: ClosurePattern::Paired { a },
        cubic,
        root,
        bracket,
        tail_value,
        flat_tail_value,
    })
}

/// Close a single-step tail `n, n+1, n+2, ...`.
///
/// With `p = n/(1+q)`, `q = (n+1)/(1+r)` and the postulate `p + r = 2q`, the
/// middle tail solves `2q^3 + 3q^2 - 2n*q - (n+1) = 0`; the closure attaches
/// `p = n/(1+q)`.
pub fn tail_closure_single(n: u32) -> Result<TailClosure, CfError> {
    if n < 1 {
        return Err(CfError::ClosureParameter(
            "single closure needs n >= 1".into(),
        ));
    }
    let nf = f64::from(n);
    let cubic = [
        Rational::from_integer(2.into()),
        Rational::from_integer(3.into()),
        Rational::from_integer(BigInt::from(-2 * i64::from(n))),
        Rational::from_integer(BigInt::from(-(i64::from(n) + 1))),
    ];
    let (root, bracket) = positive_cubic_root(&cubic, 0.0, nf.max(2.0))?;
    let tail_value = nf / (1.0 + root);
    let flat_q = ((4.0 * (nf + 1.0) + 1.0).sqrt() - 1.0) / 2.0;
    let flat_tail_value = nf / (1.0 + flat_q);
    Ok(TailClosure {
        pattern: ClosurePattern::Single { n },
        cubic,
        root,
        bracket,
        tail_value,
        flat_tail_value,
    })
}

/// Bisection on a sign change in `(lo, hi)`, then Newton polish.
/// The closure cubics have exactly one positive root (single sign change in
/// their coefficients), so the bracket is guaranteed; the error is a guard.
fn positive_cubic_root(
    cubic: &[Rational; 4],
    lo: f64,
    hi: f64,
) -> Result<(f64, (f64, f64)), CfError> {
    let c: Vec<f64> = cubic.iter().map(to_f64).collect();
    let f = |s: f64| ((c[0] * s + c[1]) * s + c[2]) * s + c[3];
    let df = |s: f64| (3.0 * c[0] * s + 2.0 * c[1]) * s + c[2];
    let (mut lo, mut hi) = (lo, hi);
    if !(f(lo) < 0.0 && f(hi) > 0.0) {
        return Err(CfError::ClosureRootMissing { lo, hi });
    }
    let bracket = (lo, hi);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut root = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = df(root);
        if d.abs() > 0.0 {
            root -= f(root) / d;
        }
    }
    Ok((root, bracket))
}

/// One collapsed segment of the back-substitution chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentMap {
    pub from: usize,
    pub to: usize,
    pub map: MobiusMap,
}

/// Result of summing a factorial-family fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct CfSummation {
    pub value: f64,
    pub error_estimate: f64,
    /// Level at which the closure tail attaches (absent without closure).
    pub attach_level: Option<usize>,
    /// Final convergent bracket (absent with a closure).
    pub bracket: Option<(f64, f64)>,
    /// Collapsed segments of the chain, outermost first.
    pub segments: Vec<SegmentMap>,
}

/// Sum a factorial family by its continued fraction.
///
/// Without a closure: compute `levels` numerators, return the midpoint of the
/// final convergent bracket with the bracket width as the reported error.
///
/// With a closure: the closure fixes where its tail value attaches (the first
/// level whose numerator starts the closure's pattern). The numerators before
/// that point collapse to exact Möbius maps — one segment of `levels`, then
/// ten-numerator back-substitution segments — and the value is the composed
/// map applied to the closure tail. The reported error is the spread between
/// the cubic closure and its cruder constant-numerator model pushed through
/// the same map.
pub fn sum_by_cf(
    family: &FactorialFamily,
    levels: usize,
    closure: Option<&TailClosure>,
) -> Result<CfSummation, CfError> {
    if levels < 2 {
        return Err(CfError::TooFewLevels {
            needed: 2,
            got: levels,
        });
    }
    match closure {
        None => {
            let cf = factorial_cf(family, levels);
            let convs = convergents(&cf, levels + 2)?;
            let low = convs[convs.len() - 2].value_f64();
            let high = convs[convs.len() - 1].value_f64();
            let (lo, hi) = if low <= high {
                (low, high)
            } else {
                (high, low)
            };
            Ok(CfSummation {
                value: 0.5 * (lo + hi),
                error_estimate: hi - lo,
                attach_level: None,
                bracket: Some((lo, hi)),
                segments: Vec::new(),
            })
        }
        Some(closure) => {
            let scan = match closure.pattern {
                ClosurePattern::Paired { a } => 2 * a as usize + 8,
                ClosurePattern::Single { n } => n as usize + 8,
            };
            let cf = factorial_cf(family, scan.max(levels + 4));
            let attach = closure_attach_level(&cf, closure)?;
            if levels > attach {
                return Err(CfError::ClosureMismatch(format!(
                    "closure tail attaches at level {attach}, below the requested {levels} levels"
                )));
            }
            let mut segments = Vec::new();
            let mut cut = levels;
            segments.push(SegmentMap {
                from: 0,
                to: cut,
                map: collapse_segment(&cf, 0, cut)?,
            });
            while cut < attach {
                let next = (cut + 10).min(attach);
                segments.push(SegmentMap {
                    from: cut,
                    to: next,
                    map: collapse_segment(&cf, cut, next)?,
                });
                cut = next;
            }
            let whole = collapse_segment(&cf, 0, attach)?;
            let value = whole.apply_f64(closure.tail_value);
            let alt = whole.apply_f64(closure.flat_tail_value);
            let error_estimate = (value - alt).abs() + 4.0 * f64::EPSILON * value.abs();
            Ok(CfSummation {
                value,
                error_estimate,
                attach_level: Some(attach),
                bracket: None,
                segments,
            })
        }
    }
}

/// First level whose numerator begins the closure's tail pattern.
fn closure_attach_level(cf: &GeneralizedCf, closure: &TailClosure) -> Result<usize, CfError> {
    let expected: Vec<Rational> = match closure.pattern {
        ClosurePattern::Paired { a } => {
            let a = i64::from(a);
            [a - 1, a - 1, a, a, a + 1]
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect()
        }
        ClosurePattern::Single { n } => {
            let n = i64::from(n);
            [n, n + 1, n + 2]
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect()
        }
    };
    let nums = &cf.numerators;
    if nums.len() >= expected.len() {
        for start in 0..=nums.len() - expected.len() {
            if nums[start..start + expected.len()] == expected[..] {
                return Ok(start);
            }
        }
    }
    Err(CfError::ClosureMismatch(format!(
        "tail pattern starting {:?} not found",
        closure.pattern
    )))
}

/// Simple continued fraction `[a0; a1, a2, ...]` from the Euclidean algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCf {
    pub quotients: Vec<BigInt>,
    /// True when the expansion terminated exactly (rational fully consumed).
    pub exact: bool,
}

impl SimpleCf {
    /// Convergents `h/k` of the simple fraction, one per quotient.
    pub fn convergents(&self) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::with_capacity(self.quotients.len());
        let (mut h_prev, mut k_prev) = (BigInt::zero(), BigInt::one());
        let (mut h, mut k) = (BigInt::one(), BigInt::zero());
        for a in &self.quotients {
            let h_next = a * &h + &h_prev;
            let k_next = a * &k + &k_prev;
            h_prev = std::mem::replace(&mut h, h_next.clone());
            k_prev = std::mem::replace(&mut k, k_next.clone());
            out.push((h_next, k_next));
        }
        out
    }

    /// Exact reconstruction of the rational the quotients encode.
    pub fn to_rational(&self) -> Rational {
        let mut value: Option<Rational> = None;
        for a in self.quotients.iter().rev() {
            let a = Rational::from_integer(a.clone());
            value = Some(match value {
                None => a,
                Some(tail) => a + tail.recip(),
            });
        }
        value.expect("at least one quotient")
    }
}

/// Expand a positive rational into its simple continued fraction, stopping
/// after `count` partial quotients past the integer part or at exact
/// termination, whichever comes first.
pub fn real_to_simple_cf(value: &Rational, count: usize) -> Result<SimpleCf, CfError> {
    if !value.is_positive() {
        return Err(CfError::NonPositiveValue);
    }
    let mut quotients = Vec::with_capacity(count + 1);
    let mut rest = value.clone();
    let mut exact = false;
    for _ in 0..=count {
        let floor = rest.floor();
        quotients.push(floor.numer().clone());
        rest -= floor;
        if rest.is_zero() {
            exact = true;
            break;
        }
        rest = rest.recip();
    }
    Ok(SimpleCf { exact, quotients })
}

/// `lead * a1 * ... * a_{n-1}`: the numerator product entering the
/// determinant identity `h_n*k_{n-1} - h_{n-1}*k_n = (-1)^{n-1} * product`.
pub fn numerator_product(cf: &GeneralizedCf, n: usize) -> Rational {
    let mut product = cf.leading.clone();
    for a in cf.numerators.iter().take(n.saturating_sub(1)) {
        product *= a;
    }
    product
}
