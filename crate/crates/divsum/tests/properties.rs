//! Property tests over the exact kernels: transform linearity, classification
//! scale invariance, simple-fraction round trips, and the series/fraction
//! correspondence on arbitrary inputs.

use proptest::prelude::*;

use divsum::cf::{cf_to_series, real_to_simple_cf, series_to_cf, CfError};
use divsum::difference::euler_transform;
use divsum::rational::{rat, Rational};
use divsum::series::{classify_series, partial_sums};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !num_traits::Zero::is_zero(r))
}

proptest! {
    #[test]
    fn transform_is_linear(
        u in prop::collection::vec(small_rational(), 3..9),
        v in prop::collection::vec(small_rational(), 3..9),
    ) {
        let len = u.len().min(v.len());
        let (u, v) = (&u[..len], &v[..len]);
        let sum: Vec<Rational> = u.iter().zip(v).map(|(a, b)| a + b).collect();
        // Interior zeros are rejected by contract; skip those draws.
        let transforms = (
            euler_transform(u),
            euler_transform(v),
            euler_transform(&sum),
        );
        if let (Ok(tu), Ok(tv), Ok(ts)) = transforms {
            for k in 0..len {
                prop_assert_eq!(&tu[k] + &tv[k], ts[k].clone());
            }
        }
    }

    #[test]
    fn transform_preserves_length_and_halves_the_head(
        terms in prop::collection::vec(nonzero_rational(), 1..10),
    ) {
        let transformed = euler_transform(&terms).unwrap();
        prop_assert_eq!(transformed.len(), terms.len());
        prop_assert_eq!(transformed[0].clone(), &terms[0] / rat(2, 1));
    }

    #[test]
    fn classification_is_scale_invariant(
        terms in prop::collection::vec(nonzero_rational(), 4..10),
        scale in (1i64..=50, 1i64..=5).prop_map(|(n, d)| rat(n, d)),
    ) {
        let scaled: Vec<Rational> = terms.iter().map(|t| t * &scale).collect();
        prop_assert_eq!(
            classify_series(&terms).unwrap(),
            classify_series(&scaled).unwrap()
        );
    }

    #[test]
    fn partial_sums_telescope(terms in prop::collection::vec(small_rational(), 1..12)) {
        let sums = partial_sums(&terms);
        prop_assert_eq!(sums.len(), terms.len());
        let direct: Rational = terms.iter().sum();
        prop_assert_eq!(sums.last().unwrap().clone(), direct);
        for k in 1..terms.len() {
            prop_assert_eq!(&sums[k] - &sums[k - 1], terms[k].clone());
        }
    }

    #[test]
    fn simple_fraction_round_trips(
        numer in 1u64..500_000,
        denom in 1u64..500_000,
    ) {
        let value = Rational::new(numer.into(), denom.into());
        let cf = real_to_simple_cf(&value, 64).unwrap();
        prop_assert!(cf.exact);
        prop_assert_eq!(cf.to_rational(), value.clone());
        // Partial quotients past the integer part are at least one.
        for q in cf.quotients.iter().skip(1) {
            prop_assert!(q >= &num_bigint::BigInt::from(1));
        }
        // Convergents satisfy the quality bound |x - h/k| <= 1/(k*k_next).
        let convs = cf.convergents();
        for i in 0..convs.len().saturating_sub(1) {
            let (h, k) = &convs[i];
            let approx = Rational::new(h.clone(), k.clone());
            let bound = Rational::new(1.into(), k * &convs[i + 1].1);
            prop_assert!(num_traits::Signed::abs(&(&value - approx)) <= bound);
        }
    }

    #[test]
    fn division_and_reexpansion_are_inverse(
        coeffs in prop::collection::vec(nonzero_rational(), 6..12),
    ) {
        let depth = coeffs.len() / 2;
        match series_to_cf(&coeffs, depth) {
            Ok(cf) => {
                let series = cf_to_series(&cf);
                for (k, coeff) in coeffs.iter().enumerate().take(depth + 1) {
                    prop_assert_eq!(series.coeff(k), coeff.clone());
                }
            }
            // Breakdown is a legal outcome (remainder above first order);
            // the correspondence only covers series reachable without one.
            Err(CfError::Breakdown { .. }) => {}
            Err(other) => return Err(TestCaseError::fail(other.to_string())),
        }
    }
}
