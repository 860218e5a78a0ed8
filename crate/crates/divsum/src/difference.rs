//! Difference tables, the alternating-series transform, its iterated peeling
//! protocol, and Newton extrapolation to index zero.
//!
//! Two difference conventions are first-class because the source protocols
//! switch between them: `forward` takes `next - current`, `reversed` takes
//! `current - next`. Every table carries its convention tag; silent mixing of
//! the two is the classic way to ruin a reproduction.
//!
//! Fixed-decimal tables (the seven-place ones) run under a [`DecimalProtocol`]
//! that rounds entries half-away-from-zero before differencing; differences of
//! rounded entries stay exact at the same number of places.

use num_traits::{One, Zero};

use crate::rational::{round_decimal, Rational};
use crate::series::{generate_b_sequence, generate_terms, FactorialFamily, TermList};

/// Which neighbour is subtracted from which when differencing a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferenceConvention {
    /// `delta = next - current` (the "usual way").
    Forward,
    /// `delta = current - next` (each term subtracted from the preceding one).
    Reversed,
}

/// Fixed-decimal rounding applied to table entries before differencing.
/// Rounding is half-away-from-zero; seven places reproduces the printed
/// tables (`1/65 -> 0.0153846`, `1/13700 -> 0.0000730`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecimalProtocol {
    pub decimal_places: u32,
}

impl DecimalProtocol {
    pub const SEVEN: DecimalProtocol = DecimalProtocol { decimal_places: 7 };

    pub fn round(&self, value: &Rational) -> Rational {
        round_decimal(value, self.decimal_places)
    }
}

/// Triangular table of differences. Row 0 is the (possibly rounded) input;
/// row k holds the k-th differences and is one entry shorter than row k-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTable {
    pub rows: Vec<TermList>,
    pub convention: DifferenceConvention,
}

impl DifferenceTable {
    /// Head (first entry) of row `k`.
    pub fn head(&self, k: usize) -> Option<&Rational> {
        self.rows.get(k).and_then(|row| row.first())
    }

    /// Heads of rows `1..=depth`.
    pub fn heads(&self, depth: usize) -> Vec<Rational> {
        (1..=depth).filter_map(|k| self.head(k).cloned()).collect()
    }
}

/// Errors from the difference machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DifferenceError {
    #[error("input must contain at least {needed} terms, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("zero term at interior position {index}: sign alternation ambiguous")]
    ZeroInteriorTerm { index: usize },
    #[error("extrapolation depth {depth} exceeds available difference rows {available}")]
    DepthExceeded { depth: usize, available: usize },
}

/// Build the full difference table of `terms` under `convention`, optionally
/// rounding every entry per `protocol` first.
pub fn build_table(
    terms: &[Rational],
    convention: DifferenceConvention,
    protocol: Option<DecimalProtocol>,
) -> DifferenceTable {
    assert!(
        !terms.is_empty(),
        "difference table needs at least one term"
    );
    let round = |v: &Rational| match protocol {
        Some(p) => p.round(v),
        None => v.clone(),
    };
    let mut rows: Vec<TermList> = vec![terms.iter().map(round).collect()];
    while rows.last().unwrap().len() > 1 {
        let prev = rows.last().unwrap();
        let next: TermList = prev
            .windows(2)
            .map(|w| match convention {
                DifferenceConvention::Forward => &w[1] - &w[0],
                DifferenceConvention::Reversed => &w[0] - &w[1],
            })
            .map(|v| round(&v))
            .collect();
        rows.push(next);
    }
    DifferenceTable { rows, convention }
}

/// The alternating-series transform.
///
/// Input terms stand for `a - b + c - d + ...` exactly as signed; internally
/// the signs are stripped (`u_k = (-1)^k * term_k`), forward differences of
/// the unsigned magnitudes are taken, and the output is
/// `[a/2, -alpha/4, +beta/8, -gamma/16, ...]` where `alpha, beta, ...` are the
/// heads of successive difference rows. Output length equals input length.
///
/// The transform is linear and needs no sign checks of its own, but a zero
/// at an interior position makes the intended alternation ambiguous and is
/// rejected.
pub fn euler_transform(terms: &[Rational]) -> Result<TermList, DifferenceError> {
    if terms.is_empty() {
        return Err(DifferenceError::TooShort { needed: 1, got: 0 });
    }
    for (index, t) in terms.iter().enumerate() {
        if index > 0 && index + 1 < terms.len() && t.is_zero() {
            return Err(DifferenceError::ZeroInteriorTerm { index });
        }
    }
    let unsigned: TermList = terms
        .iter()
        .enumerate()
        .map(|(k, t)| if k % 2 == 0 { t.clone() } else { -t })
        .collect();
    let table = build_table(&unsigned, DifferenceConvention::Forward, None);
    let mut weight = Rational::new(One::one(), 2.into());
    let mut out = Vec::with_capacity(terms.len());
    for (j, row) in table.rows.iter().enumerate() {
        let head = row.first().expect("rows are non-empty");
        let signed = if j % 2 == 0 { head.clone() } else { -head };
        out.push(signed * &weight);
        weight /= Rational::from_integer(2.into());
    }
    Ok(out)
}

/// One stage of the iterated transform: what was peeled off, its sum, and
/// the transform of the remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformStage {
    pub peeled: TermList,
    pub peeled_sum: Rational,
    pub transformed: TermList,
}

/// Outcome of an iterated transform run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedTransform {
    pub stages: Vec<TransformStage>,
    /// Sum of everything peeled plus the final transformed remainder.
    pub value: Rational,
}

/// Iterate the transform with a peeling schedule: for each entry `k` of
/// `peel_schedule`, peel the `k` leading terms (they join the accumulated
/// value) and transform what remains. After the last stage the remaining
/// transformed terms are summed outright.
///
/// The schedule is data, not heuristics: reproduction protocols freeze the
/// exact schedule they need.
pub fn iterated_transform(
    terms: &[Rational],
    peel_schedule: &[usize],
) -> Result<IteratedTransform, DifferenceError> {
    let mut current: TermList = terms.to_vec();
    let mut stages = Vec::with_capacity(peel_schedule.len());
    let mut total = Rational::zero();
    for &peel in peel_schedule {
        if current.len() < peel + 1 {
            return Err(DifferenceError::TooShort {
                needed: peel + 1,
                got: current.len(),
            });
        }
        let peeled: TermList = current[..peel].to_vec();
        let peeled_sum: Rational = peeled.iter().sum();
        total += &peeled_sum;
        let transformed = euler_transform(&current[peel..])?;
        current = transformed.clone();
        stages.push(TransformStage {
            peeled,
            peeled_sum,
            transformed,
        });
    }
    total += current.iter().sum::<Rational>();
    Ok(IteratedTransform {
        stages,
        value: total,
    })
}

/// The frozen three-stage protocol for the alternating hypergeometric series
/// `1 - 1 + 2 - 6 + 24 - ...`: peel the cancelling leading pair and transform,
/// twice more peel two terms and transform, then add everything up.
/// Returns exactly `38015/65536`.
///
/// (The printed version halves the series before the first transform and
/// doubles after; by linearity of the transform that cancels, so the
/// schedule here works on the raw terms.)
pub fn reproduce_a_by_iterated_transform() -> IteratedTransform {
    let terms = generate_terms(&FactorialFamily::wallis(), 10);
    iterated_transform(&terms, &[2, 2, 2]).expect("frozen protocol is valid")
}

/// Newton extrapolation to index zero: the "term preceding the first" for a
/// list sampled at indices 1, 2, 3, ...
///
/// With the reversed convention the value is
/// `terms[0] + alpha + beta + gamma + ...`, with the forward convention
/// `terms[0] - alpha + beta - gamma + ...`, where the Greek letters are the
/// heads of difference rows `1..=depth`. The two formulas are the same number
/// under the convention duality `reversed head = (-1)^k * forward head`.
pub fn newton_extrapolate_zero(
    terms: &[Rational],
    convention: DifferenceConvention,
    protocol: Option<DecimalProtocol>,
    depth: usize,
) -> Result<Rational, DifferenceError> {
    if terms.is_empty() {
        return Err(DifferenceError::TooShort { needed: 1, got: 0 });
    }
    if depth > terms.len() - 1 {
        return Err(DifferenceError::DepthExceeded {
            depth,
            available: terms.len() - 1,
        });
    }
    let table = build_table(terms, convention, protocol);
    let mut value = table.rows[0][0].clone();
    for (k, head) in table.heads(depth).iter().enumerate() {
        match convention {
            DifferenceConvention::Reversed => value += head,
            DifferenceConvention::Forward => {
                if k % 2 == 0 {
                    value -= head;
                } else {
                    value += head;
                }
            }
        }
    }
    Ok(value)
}

/// The seven-place reciprocal extrapolation: reciprocals of the first 13
/// entries of the B-sequence, rounded at seven places, reversed differences,
/// five heads. Returns exactly `1.6517401` (as a rational), the reciprocal
/// of the series value.
pub fn reciprocal_extrapolation() -> Rational {
    let reciprocals: TermList = generate_b_sequence(13)
        .into_iter()
        .map(|b| b.recip())
        .collect();
    newton_extrapolate_zero(
        &reciprocals,
        DifferenceConvention::Reversed,
        Some(DecimalProtocol::SEVEN),
        5,
    )
    .expect("frozen protocol is valid")
}

/// Everything the logarithmic extrapolation produces, for reporting.
#[derive(Debug, Clone)]
pub struct LogExtrapolation {
    /// Base-10 logarithms of B(1..=9), rounded at seven places.
    pub logs: TermList,
    /// The alternating series for log10 of the reciprocal value.
    pub log_inv_series: TermList,
    /// Transform of that series.
    pub transformed: TermList,
    /// Sum of the first six transformed terms, rounded at seven places.
    pub log_inv_value: Rational,
    /// `10^(-log_inv_value)`.
    pub value: f64,
}

/// The logarithmic extrapolation protocol.
///
/// Take base-10 logarithms of B(1..=9) at seven places, extrapolate the log
/// sequence to index zero via forward-difference heads (giving the series
/// `0 - alpha + beta - gamma + ...` for the log of the value), negate it to
/// get the series for the log of the reciprocal, transform, and sum the six
/// leading transformed terms. The protocol yields `log10(1/A) = 0.2220911`
/// and `A = 10^(-0.2220911) = 0.59966...`.
pub fn log_extrapolate_a() -> LogExtrapolation {
    let protocol = DecimalProtocol::SEVEN;
    let logs: TermList = generate_b_sequence(9)
        .iter()
        .map(|b| {
            let log = crate::rational::to_f64(b).log10();
            protocol.round(&f64_to_rational_7dp(log))
        })
        .collect();
    let table = build_table(&logs, DifferenceConvention::Forward, Some(protocol));
    // Series for log10(1/A): term j is (-1)^j * head_{j+1}.
    let log_inv_series: TermList = table
        .heads(logs.len() - 1)
        .iter()
        .enumerate()
        .map(|(j, h)| if j % 2 == 0 { h.clone() } else { -h })
        .collect();
    let transformed = euler_transform(&log_inv_series).expect("log series has no interior zero");
    let log_inv_value = protocol.round(&transformed.iter().take(6).sum::<Rational>());
    let value = 10f64.powf(-crate::rational::to_f64(&log_inv_value));
    LogExtrapolation {
        logs,
        log_inv_series,
        transformed,
        log_inv_value,
        value,
    }
}

/// Exact rational carrying the first seven decimal places of an f64.
///
/// The f64 logarithms here sit comfortably clear of rounding boundaries at
/// seven places, so carrying a few guard digits before the protocol rounding
/// is enough.
fn f64_to_rational_7dp(value: f64) -> Rational {
    let scaled = (value * 1e12).round() as i128;
    Rational::new(scaled.into(), 10i128.pow(12).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{format_decimal, int, rat, to_f64};

    fn ints(vals: &[i64]) -> TermList {
        vals.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn forward_table_reproduces_the_halved_series_rows() {
        let table = build_table(
            &ints(&[1, 3, 12, 60, 360, 2520, 20160, 181440]),
            DifferenceConvention::Forward,
            None,
        );
        assert_eq!(table.rows[1], ints(&[2, 9, 48, 300, 2160, 17640, 161280]));
        assert_eq!(table.rows[2], ints(&[7, 39, 252, 1860, 15480, 143640]));
        assert_eq!(table.rows[3], ints(&[32, 213, 1608, 13620, 128160]));
        assert_eq!(table.rows[4], ints(&[181, 1395, 12012, 114540]));
        assert_eq!(table.rows[5], ints(&[1214, 10617, 102528]));
        assert_eq!(table.rows[6], ints(&[9403, 91911]));
        assert_eq!(table.rows[7], ints(&[82508]));
    }

    #[test]
    fn constant_rows_difference_to_zero() {
        let table = build_table(&ints(&[5, 5, 5]), DifferenceConvention::Forward, None);
        assert_eq!(table.rows[1], ints(&[0, 0]));
    }

    #[test]
    fn reversed_seven_place_rows_match_the_reciprocal_table() {
        let table = build_table(
            &[int(1), rat(1, 2), rat(1, 5), rat(1, 16)],
            DifferenceConvention::Reversed,
            Some(DecimalProtocol::SEVEN),
        );
        let rendered: Vec<String> = table.rows[1].iter().map(|v| format_decimal(v, 7)).collect();
        assert_eq!(rendered, vec!["0.5000000", "0.3000000", "0.1375000"]);
    }

    #[test]
    fn convention_duality_flips_alternate_row_heads() {
        let terms = ints(&[3, 1, 4, 1, 5, 9, 2, 6]);
        let fwd = build_table(&terms, DifferenceConvention::Forward, None);
        let rev = build_table(&terms, DifferenceConvention::Reversed, None);
        for k in 0..terms.len() {
            let f = fwd.head(k).unwrap();
            let r = rev.head(k).unwrap();
            if k % 2 == 0 {
                assert_eq!(f, r);
            } else {
                assert_eq!(&-f, r);
            }
        }
    }

    #[test]
    fn transform_sums_the_three_classic_examples() {
        let t = euler_transform(&ints(&[1, -1, 1, -1, 1])).unwrap();
        assert_eq!(t, vec![rat(1, 2), int(0), int(0), int(0), int(0)]);
        assert_eq!(t.iter().sum::<Rational>(), rat(1, 2));

        let t = euler_transform(&ints(&[1, -2, 3, -4, 5])).unwrap();
        assert_eq!(t, vec![rat(1, 2), rat(-1, 4), int(0), int(0), int(0)]);
        assert_eq!(t.iter().sum::<Rational>(), rat(1, 4));

        let t = euler_transform(&ints(&[1, -4, 9, -16, 25])).unwrap();
        assert_eq!(t, vec![rat(1, 2), rat(-3, 4), rat(2, 8), int(0), int(0)]);
        assert_eq!(t.iter().sum::<Rational>(), int(0));
    }

    #[test]
    fn transform_rejects_interior_zeros_only() {
        assert_eq!(
            euler_transform(&ints(&[1, 0, 1, -1])),
            Err(DifferenceError::ZeroInteriorTerm { index: 1 })
        );
        // Leading or trailing zeros are formally fine.
        assert!(euler_transform(&ints(&[0, -1, 1])).is_ok());
        assert!(euler_transform(&ints(&[1, -1, 0])).is_ok());
    }

    #[test]
    fn transform_is_linear() {
        let u = vec![rat(1, 3), int(-2), rat(7, 5), int(-11), int(24)];
        let v = vec![int(2), rat(-1, 7), int(5), rat(-3, 2), int(1)];
        let sum: TermList = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let tu = euler_transform(&u).unwrap();
        let tv = euler_transform(&v).unwrap();
        let tsum = euler_transform(&sum).unwrap();
        for k in 0..tu.len() {
            assert_eq!(&tu[k] + &tv[k], tsum[k]);
        }
    }

    #[test]
    fn geometric_series_transforms_to_geometric_exactly() {
        // Transform of [(-r)^k] is (1/2) * [-(r-1)/2]^k, summing to 1/(1+r).
        for r in [rat(1, 2), rat(5, 7), rat(2, 1), rat(29, 10)] {
            let n = 9usize;
            let mut terms = Vec::with_capacity(n);
            let mut t = Rational::one();
            for _ in 0..n {
                terms.push(t.clone());
                t *= -&r;
            }
            let transformed = euler_transform(&terms).unwrap();
            let ratio = -(&r - Rational::one()) / int(2);
            let mut expected = rat(1, 2);
            for out in &transformed {
                assert_eq!(out, &expected);
                expected *= &ratio;
            }
            // Closed form of the transformed geometric sum.
            let closed = rat(1, 2) / (Rational::one() - ratio);
            assert_eq!(closed, (Rational::one() + &r).recip());
        }
    }

    #[test]
    fn iterated_protocol_reaches_38015_over_65536() {
        let outcome = reproduce_a_by_iterated_transform();
        assert_eq!(outcome.value, rat(38015, 65536));
        // The second transform's input starts with the heads 7/4, 32/8, 181/16
        // (after the cancelling leading pair of the first transform's output).
        let stage2_input = &outcome.stages[0].transformed;
        assert_eq!(stage2_input[2], rat(7, 4));
        assert_eq!(stage2_input[3], rat(-32, 8));
        assert_eq!(stage2_input[4], rat(181, 16));
        // Third stage peels 7/8 - 18/32 = 5/16.
        assert_eq!(outcome.stages[2].peeled_sum, rat(5, 16));
        // First differences of the third-stage input magnitudes.
        let stage3_input: TermList = outcome.stages[1].transformed[2..]
            .iter()
            .enumerate()
            .map(|(k, t)| if k % 2 == 0 { t.clone() } else { -t })
            .collect();
        let table = build_table(&stage3_input, DifferenceConvention::Forward, None);
        assert_eq!(
            table.rows[1],
            vec![rat(132, 512), rat(1299, 2048), rat(12402, 8192)]
        );
    }

    #[test]
    fn iterated_transform_rejects_overlong_peels() {
        let err = iterated_transform(&ints(&[1, -1, 2]), &[3]).unwrap_err();
        assert_eq!(err, DifferenceError::TooShort { needed: 4, got: 3 });
    }

    #[test]
    fn newton_extrapolation_handles_polynomial_and_constant_lists() {
        // Samples of P(i) = i + 1 at indices 1..=4; index 0 gives 1.
        let value =
            newton_extrapolate_zero(&ints(&[2, 3, 4, 5]), DifferenceConvention::Forward, None, 3)
                .unwrap();
        assert_eq!(value, int(1));
        let constant = newton_extrapolate_zero(
            &ints(&[9, 9, 9, 9]),
            DifferenceConvention::Reversed,
            None,
            2,
        )
        .unwrap();
        assert_eq!(constant, int(9));
    }

    #[test]
    fn polynomial_rows_vanish_beyond_the_degree() {
        // P(i) = 2i^2 - 3i + 5 sampled at 1..=7.
        let terms: TermList = (1..=7).map(|i| int(2 * i * i - 3 * i + 5)).collect();
        let table = build_table(&terms, DifferenceConvention::Forward, None);
        for row in &table.rows[3..] {
            assert!(row.iter().all(Zero::is_zero));
        }
        for convention in [
            DifferenceConvention::Forward,
            DifferenceConvention::Reversed,
        ] {
            for depth in 2..=6 {
                let v = newton_extrapolate_zero(&terms, convention, None, depth).unwrap();
                assert_eq!(v, int(5), "depth {depth}");
            }
        }
    }

    #[test]
    fn extrapolation_depth_is_bounded_by_the_table() {
        let err = newton_extrapolate_zero(&ints(&[1, 2]), DifferenceConvention::Forward, None, 2)
            .unwrap_err();
        assert_eq!(
            err,
            DifferenceError::DepthExceeded {
                depth: 2,
                available: 1
            }
        );
    }

    #[test]
    fn reciprocal_extrapolation_hits_the_seven_place_target_exactly() {
        assert_eq!(reciprocal_extrapolation(), rat(16517401, 10_000_000));
    }

    #[test]
    fn log_extrapolation_reproduces_the_printed_protocol() {
        let out = log_extrapolate_a();
        assert_eq!(out.logs[1], rat(3010300, 10_000_000));
        assert_eq!(out.log_inv_series[0], rat(3010300, 10_000_000));
        assert_eq!(out.log_inv_value, rat(2220911, 10_000_000));
        assert!((out.value - 0.59966).abs() < 1e-5);
        // Direct exponentiation sanity bracket.
        assert!(out.value > 0.59965 && out.value < 0.59967);
        let _ = to_f64(&out.log_inv_value);
    }
}
