//! Finite values for divergent alternating series of factorial type.
//!
//! Three independent routes to the same number, cross-validated against each
//! other and against the classical printed tables:
//!
//! - **difference transforms** ([`difference`]): the alternating-series
//!   transform, its iterated peeling protocol, and Newton extrapolation to
//!   index zero in plain, reciprocal, and logarithmic variants;
//! - **continued fractions** ([`cf`]): series-to-fraction conversion by
//!   successive division, the closed-form numerator law for the factorial
//!   family, convergent brackets, Möbius-map collapse, and cubic tail
//!   closures;
//! - **integral representations** ([`quadrature`]): the unit-interval curves,
//!   the ten-panel trapezoid layout, and a rigorous half-line oracle.
//!
//! Exact tables are exact: term generation, difference tables, convergents,
//! and collapsed maps all run over arbitrary-precision rationals
//! ([`rational::Rational`]). Floating point enters only where a protocol
//! rounds (fixed-decimal tables) or where quadrature and root-finding live.
//!
//! The [`report`] module drives everything from a single configuration and
//! renders text, CSV, or JSON; [`repro`] holds the frozen reproduction
//! protocols (`s15` … `s29`) with their reference tables.

pub mod cf;
pub mod difference;
pub mod power_series;
pub mod quadrature;
pub mod rational;
pub mod report;
pub mod repro;
pub mod series;

pub use cf::{
    bracket_and_average, collapse_segment, convergents, factorial_cf, real_to_simple_cf,
    series_to_cf, sum_by_cf, tail_closure_paired, tail_closure_single, CfError, CfSummation,
    Convergent, GeneralizedCf, MobiusMap, SimpleCf, TailClosure,
};
pub use difference::{
    build_table, euler_transform, iterated_transform, log_extrapolate_a, newton_extrapolate_zero,
    reciprocal_extrapolation, reproduce_a_by_iterated_transform, DecimalProtocol,
    DifferenceConvention, DifferenceError, DifferenceTable,
};
pub use quadrature::{
    adaptive_unit_interval, borel_oracle, evaluate_integrand, general_integral,
    trapezoid_unit_interval, IntegrandSpec, QuadratureError, QuadratureMethod, QuadratureResult,
};
pub use rational::{parse_rational, Rational};
pub use series::{
    classify_series, generate_b_sequence, generate_terms, partial_sums, FactorialFamily,
    SeriesError, Species, TermList,
};
