//! Integral representations of the factorial-family values and their
//! numerical evaluation: the unit-interval curves behind the ten-panel
//! trapezoid computation, the logarithmic substitution of the same area, the
//! general finite-integral form, and a rigorous half-line integral used as
//! the ground-truth oracle for every summation method.
//!
//! All floating computation is plain `f64` (15+ significant digits);
//! acceptance tolerances sit an order of magnitude looser.

use crate::rational::{to_f64, Rational};

/// Exponent cap for the finite-integral prefactor `exp(1/(q*x^q))`.
const EXPONENT_CAP: f64 = 700.0;

/// Which curve is being integrated.
#[derive(Debug, Clone, PartialEq)]
pub enum IntegrandSpec {
    /// `y(x) = e^(1 - 1/x) / x` on `[0, 1]`, `y(0) = 0` (limit), `y(1) = 1`.
    /// Its area is the value of the alternating factorial series.
    FactorialUnit,
    /// `y(v) = 1 / (1 - ln v)` on `[0, 1]`, `y(0) = 0` (limit), `y(1) = 1`.
    /// The same area after the substitution `v = e^(1 - 1/x)`.
    LogUnit,
    /// The finite-integral integrand `e^(-1/(q t^q)) * t^(p-q-1)` on `[0, x]`
    /// with the endpoint limit `y(0) = 0`.
    General {
        p: Rational,
        q: Rational,
        m: Rational,
        x: Rational,
    },
    /// `y(t) = e^(-t) * (1 + q t)^(-p/q)` on `[0, ∞)`: the half-line form
    /// whose term-by-term binomial expansion reproduces the family series at
    /// `x = 1`.
    BorelHalfline { p: Rational, q: Rational },
}

/// Quadrature errors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuadratureError {
    #[error("point {point} outside the integrand domain {domain}")]
    OutsideDomain { point: f64, domain: &'static str },
    #[error("integrand domain is not the unit interval")]
    NotUnitInterval,
    #[error("prefactor exponent {exponent} exceeds the cap {cap}")]
    ExponentOverflow { exponent: f64, cap: f64 },
    #[error("tolerance {0} below the supported floor 1e-13")]
    ToleranceTooTight(f64),
    #[error("parameters must be positive: {0}")]
    NonPositiveParameter(String),
}

/// Method tag for reported results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureMethod {
    Trapezoid,
    Adaptive,
}

/// A quadrature value with its error estimate and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Panels for the trapezoid rule, function evaluations for adaptive.
    pub nodes: u64,
    pub error_estimate: f64,
    pub method: QuadratureMethod,
}

/// Evaluate the integrand at a point, honouring the endpoint limits.
pub fn evaluate_integrand(spec: &IntegrandSpec, point: f64) -> Result<f64, QuadratureError> {
    match spec {
        IntegrandSpec::FactorialUnit => {
            if !(0.0..=1.0).contains(&point) {
                return Err(QuadratureError::OutsideDomain {
                    point,
                    domain: "[0, 1]",
                });
            }
            Ok(if point == 0.0 {
                0.0
            } else {
                (1.0 - 1.0 / point).exp() / point
            })
        }
        IntegrandSpec::LogUnit => {
            if !(0.0..=1.0).contains(&point) {
                return Err(QuadratureError::OutsideDomain {
                    point,
                    domain: "[0, 1]",
                });
            }
            Ok(if point == 0.0 {
                0.0
            } else {
                1.0 / (1.0 - point.ln())
            })
        }
        IntegrandSpec::General { p, q, x, .. } => {
            let xf = to_f64(x);
            if !(0.0..=xf).contains(&point) {
                return Err(QuadratureError::OutsideDomain {
                    point,
                    domain: "[0, x]",
                });
            }
            let pf = to_f64(p);
            let qf = to_f64(q);
            Ok(if point == 0.0 {
                0.0
            } else {
                (-1.0 / (qf * point.powf(qf))).exp() * point.powf(pf - qf - 1.0)
            })
        }
        IntegrandSpec::BorelHalfline { p, q } => {
            if point < 0.0 {
                return Err(QuadratureError::OutsideDomain {
                    point,
                    domain: "[0, ∞)",
                });
            }
            let pf = to_f64(p);
            let qf = to_f64(q);
            Ok((-point).exp() * (1.0 + qf * point).powf(-pf / qf))
        }
    }
}

/// Composite trapezoid rule on `[0, 1]`:
/// `(1/n) * (y(0)/2 + y(1/n) + ... + y((n-1)/n) + y(1)/2)`.
///
/// With ten panels on [`IntegrandSpec::FactorialUnit`] this is exactly the
/// printed layout: nine interior ordinates plus the final `1/20` term.
/// The error estimate is the Richardson bound `4/3 * |T(n) - T(2n)|`.
pub fn trapezoid_unit_interval(
    spec: &IntegrandSpec,
    panels: u64,
) -> Result<QuadratureResult, QuadratureError> {
    assert!(panels >= 1, "panel count must be positive");
    domain_is_unit_interval(spec)?;
    let value = composite_trapezoid(&|t| evaluate_integrand(spec, t).unwrap_or(f64::NAN), panels);
    let refined = composite_trapezoid(
        &|t| evaluate_integrand(spec, t).unwrap_or(f64::NAN),
        panels * 2,
    );
    Ok(QuadratureResult {
        value,
        nodes: panels,
        error_estimate: 4.0 / 3.0 * (value - refined).abs(),
        method: QuadratureMethod::Trapezoid,
    })
}

fn domain_is_unit_interval(spec: &IntegrandSpec) -> Result<(), QuadratureError> {
    match spec {
        IntegrandSpec::FactorialUnit | IntegrandSpec::LogUnit => Ok(()),
        IntegrandSpec::General { x, .. } if to_f64(x) == 1.0 => Ok(()),
        _ => Err(QuadratureError::NotUnitInterval),
    }
}

/// Plain composite trapezoid on `[0, 1]`, summed left to right in a fixed
/// order so results are bit-stable across runs.
pub(crate) fn composite_trapezoid(f: &dyn Fn(f64) -> f64, panels: u64) -> f64 {
    let n = panels as f64;
    let mut acc = 0.5 * (f(0.0) + f(1.0));
    for k in 1..panels {
        acc += f(k as f64 / n);
    }
    acc / n
}

/// Adaptive quadrature of a unit-interval integrand to an absolute tolerance.
pub fn adaptive_unit_interval(
    spec: &IntegrandSpec,
    tolerance: f64,
) -> Result<QuadratureResult, QuadratureError> {
    if tolerance < 1e-13 {
        return Err(QuadratureError::ToleranceTooTight(tolerance));
    }
    domain_is_unit_interval(spec)?;
    let f = |t: f64| evaluate_integrand(spec, t).unwrap_or(f64::NAN);
    let outcome = adaptive_simpson(&f, 0.0, 1.0, tolerance);
    Ok(QuadratureResult {
        value: outcome.value,
        nodes: outcome.evaluations,
        error_estimate: outcome.error,
        method: QuadratureMethod::Adaptive,
    })
}

/// Ground-truth oracle: `∫_0^∞ e^(-t) (1 + q t)^(-p/q) dt`.
///
/// The integral is truncated at `T` with the analytic remainder bound
/// `∫_T^∞ e^(-t)(1+qt)^(-p/q) dt <= e^(-T) (1+qT)^(-p/q)`, with `T` picked so
/// the bound is below `tolerance/10`; the finite part runs through adaptive
/// quadrature with the remaining budget. The reported error estimate is the
/// quadrature estimate plus the tail bound and is kept `<= tolerance`.
pub fn borel_oracle(
    p: &Rational,
    q: &Rational,
    tolerance: f64,
) -> Result<QuadratureResult, QuadratureError> {
    use num_traits::Signed;
    if !p.is_positive() || !q.is_positive() {
        return Err(QuadratureError::NonPositiveParameter(format!(
            "p = {}, q = {}",
            crate::rational::format_ratio(p),
            crate::rational::format_ratio(q)
        )));
    }
    if tolerance < 1e-13 {
        return Err(QuadratureError::ToleranceTooTight(tolerance));
    }
    let spec = IntegrandSpec::BorelHalfline {
        p: p.clone(),
        q: q.clone(),
    };
    // e^(-T) <= tol/10 already forces the full tail bound below tol/10.
    let cutoff = (10.0 / tolerance).ln().max(1.0);
    let f = |t: f64| evaluate_integrand(&spec, t).unwrap_or(f64::NAN);
    let outcome = adaptive_simpson(&f, 0.0, cutoff, 0.8 * tolerance);
    let tail_bound = f(cutoff);
    Ok(QuadratureResult {
        value: outcome.value,
        nodes: outcome.evaluations,
        error_estimate: outcome.error + tail_bound,
        method: QuadratureMethod::Adaptive,
    })
}

/// The general finite-integral representation
/// `z = e^(1/(q x^q)) * x^(m-p) * ∫_0^x e^(-1/(q t^q)) t^(p-q-1) dt`.
///
/// The prefactor exponential is folded into the integrand
/// (`exp(1/(q x^q) - 1/(q t^q))`), which keeps every evaluated exponent
/// non-positive; the literal prefactor exponent is still checked against the
/// configured cap because the formula is meaningless in f64 beyond it.
///
/// At `m = p = q = 1, x = 1` this is the area of
/// [`IntegrandSpec::FactorialUnit`].
pub fn general_integral(
    p: &Rational,
    q: &Rational,
    m: &Rational,
    x: f64,
) -> Result<f64, QuadratureError> {
    use num_traits::Signed;
    if !p.is_positive() || !q.is_positive() {
        return Err(QuadratureError::NonPositiveParameter(format!(
            "p = {}, q = {}",
            crate::rational::format_ratio(p),
            crate::rational::format_ratio(q)
        )));
    }
    if x.is_nan() || x <= 0.0 {
        return Err(QuadratureError::NonPositiveParameter(format!("x = {x}")));
    }
    let pf = to_f64(p);
    let qf = to_f64(q);
    let mf = to_f64(m);
    let exponent = 1.0 / (qf * x.powf(qf));
    if exponent > EXPONENT_CAP {
        return Err(QuadratureError::ExponentOverflow {
            exponent,
            cap: EXPONENT_CAP,
        });
    }
    let f = |t: f64| {
        if t <= 0.0 {
            0.0
        } else {
            (exponent - 1.0 / (qf * t.powf(qf))).exp() * t.powf(pf - qf - 1.0)
        }
    };
    let outcome = adaptive_simpson(&f, 0.0, x, 1e-12 * x.max(1.0));
    Ok(x.powf(mf - pf) * outcome.value)
}

struct AdaptiveOutcome {
    value: f64,
    error: f64,
    evaluations: u64,
}

/// Adaptive Simpson with the usual 15-to-1 acceptance rule and a depth cap.
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tolerance: f64) -> AdaptiveOutcome {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
        evals: &mut u64,
        err: &mut f64,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        *evals += 2;
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            *err += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evals, err)
            + recurse(
                f,
                m,
                b,
                fm,
                frm,
                fb,
                right,
                0.5 * tol,
                depth - 1,
                evals,
                err,
            )
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let mut evaluations = 3u64;
    let mut error = 0.0;
    let whole = simpson(fa, fm, fb, b - a);
    let value = recurse(
        f,
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        tolerance,
        48,
        &mut evaluations,
        &mut error,
    );
    AdaptiveOutcome {
        value,
        error,
        evaluations,
    }
}
