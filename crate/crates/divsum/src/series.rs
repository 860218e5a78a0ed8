//! Series families, exact term generation, partial sums, and the four-species
//! classification of divergent series.
//!
//! The central family here is the alternating factorial type
//! `term(k) = (-1)^k * p(p+q)(p+2q)...(p+(k-1)q) * x^(m+kq)`,
//! which at `p = q = m = x = 1` produces the alternating hypergeometric series
//! `1 - 1 + 2 - 6 + 24 - 120 + ...` and at `p = 1, q = 2` the odd-factorial
//! series `1 - 1 + 3 - 15 + 105 - ...`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_ratio, rational_pow, Rational};

/// Ordered list of exact signed terms; index 0 is the first term of the series.
pub type TermList = Vec<Rational>;

/// Errors from series construction and classification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Family parameters violate the constructor contract.
    #[error("invalid factorial family: {0}")]
    InvalidFamily(String),
    /// A zero term makes the sign pattern undefined.
    #[error("term {index} is zero: sign pattern undefined")]
    ZeroTerm { index: usize },
    /// Not enough terms for the requested operation.
    #[error("need at least {needed} terms, got {got}")]
    TooShort { needed: usize, got: usize },
}

/// Alternating factorial-type series family.
///
/// Parameters are exact rationals so every generated table is exact. The
/// constructor also fixes `x^m` and `x^q` once; both must be exactly rational
/// (always true for integer exponents or `x = 1`), so term generation itself
/// cannot fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialFamily {
    p: Rational,
    q: Rational,
    m: Rational,
    x: Rational,
    x_pow_m: Rational,
    x_pow_q: Rational,
}

impl FactorialFamily {
    /// Build a family with `p > 0`, `q > 0`, `m >= 0`, `x > 0`.
    pub fn new(p: Rational, q: Rational, m: Rational, x: Rational) -> Result<Self, SeriesError> {
        if !p.is_positive() {
            return Err(SeriesError::InvalidFamily(format!(
                "p must be positive, got {}",
                format_ratio(&p)
            )));
        }
        if !q.is_positive() {
            return Err(SeriesError::InvalidFamily(format!(
                "q must be positive, got {}",
                format_ratio(&q)
            )));
        }
        if m.is_negative() {
            return Err(SeriesError::InvalidFamily(format!(
                "m must be non-negative, got {}",
                format_ratio(&m)
            )));
        }
        if !x.is_positive() {
            return Err(SeriesError::InvalidFamily(format!(
                "x must be positive, got {}",
                format_ratio(&x)
            )));
        }
        let x_pow_m = rational_pow(&x, &m).ok_or_else(|| {
            SeriesError::InvalidFamily(format!(
                "x^m = ({})^({}) is not an exact rational",
                format_ratio(&x),
                format_ratio(&m)
            ))
        })?;
        let x_pow_q = rational_pow(&x, &q).ok_or_else(|| {
            SeriesError::InvalidFamily(format!(
                "x^q = ({})^({}) is not an exact rational",
                format_ratio(&x),
                format_ratio(&q)
            ))
        })?;
        Ok(Self {
            p,
            q,
            m,
            x,
            x_pow_m,
            x_pow_q,
        })
    }

    /// The alternating hypergeometric series `1 - 1 + 2 - 6 + 24 - ...`
    /// (`p = q = m = x = 1`).
    pub fn wallis() -> Self {
        Self::new(
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
        )
        .expect("unit parameters are valid")
    }

    /// The odd-factorial series `1 - 1 + 3 - 15 + 105 - ...`
    /// (`p = 1, q = 2, m = 1, x = 1`).
    pub fn odd_factorial() -> Self {
        Self::new(
            Rational::one(),
            Rational::from_integer(BigInt::from(2)),
            Rational::one(),
            Rational::one(),
        )
        .expect("unit parameters are valid")
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    /// `x^m`, the magnitude of the first term.
    pub fn x_pow_m(&self) -> &Rational {
        &self.x_pow_m
    }

    /// `x^q`, the per-step power factor.
    pub fn x_pow_q(&self) -> &Rational {
        &self.x_pow_q
    }

    /// One-line description for reports.
    pub fn describe(&self) -> String {
        format!(
            "factorial family p={}, q={}, m={}, x={}",
            format_ratio(&self.p),
            format_ratio(&self.q),
            format_ratio(&self.m),
            format_ratio(&self.x)
        )
    }
}

/// First `count` exact terms of the family.
///
/// `term(0) = x^m` (empty product) and
/// `term(k+1) = term(k) * -(p + kq) * x^q`, which is the same multiplicative
/// recurrence the closed form satisfies.
pub fn generate_terms(family: &FactorialFamily, count: usize) -> TermList {
    assert!(count >= 1, "term count must be positive");
    let mut terms = Vec::with_capacity(count);
    let mut current = family.x_pow_m.clone();
    terms.push(current.clone());
    for k in 0..count - 1 {
        let factor = family.p() + family.q() * Rational::from_integer(BigInt::from(k));
        current = -current * factor * &family.x_pow_q;
        terms.push(current.clone());
    }
    terms
}

/// The auxiliary integer sequence `B(1) = 1, B(n+1) = n*B(n) + 1`:
/// `1, 2, 5, 16, 65, 326, 1957, 13700, ...`.
///
/// Its reciprocals feed the reciprocal extrapolation protocol, its base-10
/// logarithms the logarithmic one.
pub fn generate_b_sequence(count: usize) -> TermList {
    assert!(count >= 1, "term count must be positive");
    let mut terms = Vec::with_capacity(count);
    let mut current = BigInt::one();
    terms.push(Rational::from_integer(current.clone()));
    for n in 1..count {
        current = current * BigInt::from(n) + BigInt::one();
        terms.push(Rational::from_integer(current.clone()));
    }
    terms
}

/// Cumulative sums: `output[k] = terms[0] + ... + terms[k]`, exact.
pub fn partial_sums(terms: &[Rational]) -> TermList {
    let mut sums = Vec::with_capacity(terms.len());
    let mut acc = Rational::zero();
    for t in terms {
        acc += t;
        sums.push(acc.clone());
    }
    sums
}

/// The four species of divergent series, by sign pattern and term growth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    /// Same-sign terms of bounded size: `1 + 1 + 1 + ...`
    I,
    /// Alternating terms of bounded size: `1 - 1 + 1 - ...`
    II,
    /// Same-sign growing terms: `1 + 2 + 4 + ...`
    III,
    /// Alternating growing terms: `1 - 2 + 4 - ...`
    IV,
}

impl std::fmt::Display for Species {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            Species::I => "I",
            Species::II => "II",
            Species::III => "III",
            Species::IV => "IV",
        };
        f.write_str(tag)
    }
}

/// Classify a finite prefix into one of the four species.
///
/// This is a heuristic over the supplied prefix and never extrapolates:
/// species membership is a limit property, and a finite sample can only be
/// read, not proven. Alternation is strict sign alternation over the whole
/// sample. Growth is read from the increments of the term magnitudes: a
/// prefix counts as growing (species III/IV) when those increments never
/// decrease and end positive; decelerating magnitudes (increments shrinking,
/// as in `1/2, 2/3, 3/4, ...`) count as bounded (species I/II).
///
/// Invariant under multiplication of all terms by a positive constant.
pub fn classify_series(terms: &[Rational]) -> Result<Species, SeriesError> {
    if terms.len() < 4 {
        return Err(SeriesError::TooShort {
            needed: 4,
            got: terms.len(),
        });
    }
    for (index, t) in terms.iter().enumerate() {
        if t.is_zero() {
            return Err(SeriesError::ZeroTerm { index });
        }
    }
    let alternating = terms
        .windows(2)
        .all(|w| w[0].is_positive() != w[1].is_positive());
    let magnitudes: Vec<Rational> = terms.iter().map(|t| t.abs()).collect();
    let increments: Vec<Rational> = magnitudes.windows(2).map(|w| &w[1] - &w[0]).collect();
    let non_decreasing = increments.windows(2).all(|w| w[1] >= w[0]);
    let growing = non_decreasing && increments.last().map(|d| d.is_positive()).unwrap_or(false);
    Ok(match (alternating, growing) {
        (false, false) => Species::I,
        (true, false) => Species::II,
        (false, true) => Species::III,
        (true, true) => Species::IV,
    })
}
