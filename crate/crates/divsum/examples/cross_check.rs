//! Sum the alternating factorial series three independent ways and print the
//! spread between the methods.

use divsum::cf::{sum_by_cf, tail_closure_paired};
use divsum::difference::reproduce_a_by_iterated_transform;
use divsum::quadrature::{borel_oracle, trapezoid_unit_interval, IntegrandSpec};
use divsum::rational::{format_ratio, int, to_f64};
use divsum::series::FactorialFamily;

fn main() {
    let family = FactorialFamily::wallis();

    let transform = reproduce_a_by_iterated_transform();
    println!(
        "difference transform : {} = {:.10}",
        format_ratio(&transform.value),
        to_f64(&transform.value)
    );

    let closure = tail_closure_paired(22).expect("valid closure");
    let fraction = sum_by_cf(&family, 20, Some(&closure)).expect("closure applies");
    println!(
        "continued fraction   : {:.13} (± {:.1e})",
        fraction.value, fraction.error_estimate
    );

    let trapezoid = trapezoid_unit_interval(&IntegrandSpec::FactorialUnit, 10).unwrap();
    println!(
        "ten-panel trapezoid  : {:.8} (± {:.1e})",
        trapezoid.value, trapezoid.error_estimate
    );

    let oracle = borel_oracle(&int(1), &int(1), 1e-12).unwrap();
    println!(
        "half-line oracle     : {:.13} (± {:.1e})",
        oracle.value, oracle.error_estimate
    );
    println!(
        "fraction vs oracle   : {:.1e}",
        (fraction.value - oracle.value).abs()
    );
}
