//! Command layer: a single configuration drives the three summation methods,
//! table printing, and the reproduction protocols, producing a [`Report`]
//! that renders as human text, CSV, or versioned JSON.
//!
//! Rationals cross this boundary as `"num/den"` strings so no decimal
//! truncation happens at the interface; decimals render at ten significant
//! digits with explicit error fields. Output is deterministic: fixed method
//! order, fixed summation orders, fixed formatting.

use serde::{Deserialize, Serialize};

use crate::cf::{
    convergents, factorial_cf, series_to_cf, sum_by_cf, tail_closure_paired, tail_closure_single,
    CfError, TailClosure,
};
use crate::difference::{
    build_table, euler_transform, iterated_transform, DifferenceConvention, DifferenceError,
};
use crate::quadrature::{borel_oracle, general_integral, QuadratureError};
use crate::rational::{format_ratio, parse_rational, to_f64, Rational, RationalParseError};
use crate::repro::{run_section, Comparison, Section, SectionOutcome, TableBlock};
use crate::series::{generate_terms, FactorialFamily, SeriesError};

/// JSON schema version stamped into every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Which summation method(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Transform,
    Cf,
    Integral,
    #[default]
    All,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "transform" => Ok(Method::Transform),
            "cf" => Ok(Method::Cf),
            "integral" => Ok(Method::Integral),
            "all" => Ok(Method::All),
            other => Err(format!(
                "unknown method `{other}` (expected transform, cf, integral, or all)"
            )),
        }
    }
}

/// Tail-closure request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum ClosureSpec {
    /// Pick a closure from the fraction's numerator pattern, fall back to
    /// plain bracketing.
    #[default]
    Auto,
    /// Plain bracketing only.
    None,
    /// Pairwise tail closure at the given center value.
    Paired(u32),
    /// Single-step tail closure starting at the given numerator.
    Single(u32),
}

impl std::str::FromStr for ClosureSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        if lower == "auto" {
            return Ok(ClosureSpec::Auto);
        }
        if lower == "none" {
            return Ok(ClosureSpec::None);
        }
        if let Some(rest) = lower.strip_prefix("paired:") {
            return rest
                .parse()
                .map(ClosureSpec::Paired)
                .map_err(|_| format!("bad paired closure parameter `{rest}`"));
        }
        if let Some(rest) = lower.strip_prefix("single:") {
            return rest
                .parse()
                .map(ClosureSpec::Single)
                .map_err(|_| format!("bad single closure parameter `{rest}`"));
        }
        Err(format!(
            "unknown closure `{s}` (expected auto, none, paired:<a>, or single:<n>)"
        ))
    }
}

/// One series to sum, plus method parameters. Exactly one of `family` /
/// `coefficients` must be present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    /// Family parameters as `"num/den"` strings: `[p, q, m, x]`.
    pub family: Option<[String; 4]>,
    /// Explicit signed coefficients as `"num/den"` strings.
    pub coefficients: Option<Vec<String>>,
    pub method: Method,
    /// Terms used by the transform method (and table printing). The default
    /// of 24 lets the iterated transform reach its plateau; depth 10 is the
    /// historical run.
    pub depth: usize,
    /// Fraction levels used by the cf method.
    pub levels: usize,
    /// Panels for trapezoid tables (kept for interface completeness).
    pub panels: u64,
    /// Oracle tolerance for the integral method.
    pub tolerance: f64,
    pub closure: ClosureSpec,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            family: None,
            coefficients: None,
            method: Method::All,
            depth: 24,
            levels: 20,
            panels: 10,
            tolerance: 1e-10,
            closure: ClosureSpec::Auto,
        }
    }
}

impl SeriesConfig {
    pub fn for_family(p: &str, q: &str, m: &str, x: &str) -> Self {
        Self {
            family: Some([p.into(), q.into(), m.into(), x.into()]),
            ..Self::default()
        }
    }

    pub fn for_coefficients(coeffs: &[&str]) -> Self {
        Self {
            coefficients: Some(coeffs.iter().map(|c| c.to_string()).collect()),
            ..Self::default()
        }
    }
}

/// Errors surfaced to the command line as a one-line diagnostic.
#[derive(Debug, thiserror::Error)]
#[allow(clippy::large_enum_variant)]
pub enum AppError {
    #[error("config: {0}")]
    Config(String),
    #[error("rational: {0}")]
    Parse(#[from] RationalParseError),
    #[error("series: {0}")]
    Series(#[from] SeriesError),
    #[error("difference: {0}")]
    Difference(#[from] DifferenceError),
    #[error("continued fraction: {0}")]
    Cf(#[from] CfError),
    #[error("quadrature: {0}")]
    Quadrature(#[from] QuadratureError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// One method's result: value, error estimate, and free-form detail pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    pub value: f64,
    pub error_estimate: f64,
    pub detail: Vec<(String, String)>,
}

/// The full report a command produces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub series: String,
    /// Protocol tags backing the numbers in this report.
    pub provenance: Vec<String>,
    pub methods: Vec<MethodResult>,
    pub tables: Vec<TableBlock>,
    pub comparisons: Vec<Comparison>,
    /// Pairwise |difference| between method values, symmetric, `None` on the
    /// diagonal.
    pub agreement: Vec<Vec<Option<f64>>>,
    /// True when any comparison disagreed with its reference value. Never
    /// affects the exit code.
    pub mismatch: bool,
}

impl Report {
    fn new(command: &str, series: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            series,
            provenance: Vec::new(),
            methods: Vec::new(),
            tables: Vec::new(),
            comparisons: Vec::new(),
            agreement: Vec::new(),
            mismatch: false,
        }
    }

    fn fill_agreement(&mut self) {
        let n = self.methods.len();
        self.agreement = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            None
                        } else {
                            Some((self.methods[i].value - self.methods[j].value).abs())
                        }
                    })
                    .collect()
            })
            .collect();
    }
}

/// Parsed form of a [`SeriesConfig`].
#[allow(clippy::large_enum_variant)]
enum SeriesInput {
    Family(FactorialFamily),
    Coefficients(Vec<Rational>),
}

fn parse_input(config: &SeriesConfig) -> Result<SeriesInput, AppError> {
    match (&config.family, &config.coefficients) {
        (Some(params), None) => {
            let [p, q, m, x] = params;
            let family = FactorialFamily::new(
                parse_rational(p)?,
                parse_rational(q)?,
                parse_rational(m)?,
                parse_rational(x)?,
            )?;
            Ok(SeriesInput::Family(family))
        }
        (None, Some(coeffs)) => {
            if coeffs.is_empty() {
                return Err(AppError::Config("coefficient list is empty".into()));
            }
            let parsed = coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(SeriesInput::Coefficients(parsed))
        }
        (Some(_), Some(_)) => Err(AppError::Config(
            "give either a family or coefficients, not both".into(),
        )),
        (None, None) => Err(AppError::Config(
            "give a family (--p --q --m --x) or --coeffs".into(),
        )),
    }
}

fn describe_input(input: &SeriesInput) -> String {
    match input {
        SeriesInput::Family(family) => family.describe(),
        SeriesInput::Coefficients(coeffs) => {
            format!(
                "coefficients [{}]",
                coeffs
                    .iter()
                    .map(format_ratio)
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        }
    }
}

/// Resolve the closure request against a family's fraction.
///
/// `Auto` recognizes the two numerator patterns the closures model and
/// scales the closure parameter so its tail attaches at or beyond the
/// requested level count (never below the canonical 22 / 11 choices).
fn resolve_closure(
    family: &FactorialFamily,
    spec: ClosureSpec,
    levels: usize,
) -> Result<Option<TailClosure>, AppError> {
    use num_traits::One;
    match spec {
        ClosureSpec::None => Ok(None),
        ClosureSpec::Paired(a) => Ok(Some(tail_closure_paired(a)?)),
        ClosureSpec::Single(n) => Ok(Some(tail_closure_single(n)?)),
        ClosureSpec::Auto => {
            let one = Rational::one();
            let two = &one + &one;
            if !family.x().is_one() {
                return Ok(None);
            }
            if family.p().is_one() && family.q().is_one() {
                // Paired tail attaches at level 2a - 4.
                let a = u32::try_from(levels.div_ceil(2) + 2)
                    .map_err(|_| AppError::Config("levels out of range".into()))?;
                Ok(Some(tail_closure_paired(a.max(22))?))
            } else if family.p().is_one() && *family.q() == two {
                // Single tail attaches at level n - 1.
                let n = u32::try_from(levels + 1)
                    .map_err(|_| AppError::Config("levels out of range".into()))?;
                Ok(Some(tail_closure_single(n.max(11))?))
            } else {
                Ok(None)
            }
        }
    }
}

/// The transform method.
///
/// For an explicit coefficient list this is one exact transform pass (the
/// value is the exact sum of the transformed terms). For a family it is the
/// iterated peel-two protocol run to exhaustion on `depth` exact terms; note
/// that for strongly divergent families the protocol carries a methodological
/// bias (for the unit factorial series it stalls ~2e-3 below the true value,
/// exactly as the historical computation did), which the agreement matrix
/// makes visible.
fn transform_method(input: &SeriesInput, config: &SeriesConfig) -> Result<MethodResult, AppError> {
    match input {
        SeriesInput::Coefficients(coeffs) => {
            let transformed = euler_transform(coeffs)?;
            let sum: Rational = transformed.iter().sum();
            let tail = transformed.last().cloned().unwrap_or_default();
            Ok(MethodResult {
                method: "transform".into(),
                value: to_f64(&sum),
                error_estimate: to_f64(&tail).abs(),
                detail: vec![
                    ("exact_value".into(), format_ratio(&sum)),
                    ("terms".into(), transformed.len().to_string()),
                ],
            })
        }
        SeriesInput::Family(family) => {
            let depth = config.depth.max(4);
            let value_at = |terms: usize| -> Result<Rational, AppError> {
                let series = generate_terms(family, terms);
                let rounds = (terms - 2) / 2;
                Ok(iterated_transform(&series, &vec![2; rounds])?.value)
            };
            let value = value_at(depth)?;
            let previous = value_at(depth - 2)?;
            let value_f = to_f64(&value);
            Ok(MethodResult {
                method: "transform".into(),
                value: value_f,
                error_estimate: (value_f - to_f64(&previous)).abs(),
                detail: vec![
                    ("exact_value".into(), format_ratio(&value)),
                    ("terms".into(), depth.to_string()),
                    (
                        "protocol".into(),
                        "iterated transform, peel 2 per stage".into(),
                    ),
                ],
            })
        }
    }
}

/// The continued-fraction method.
fn cf_method(input: &SeriesInput, config: &SeriesConfig) -> Result<MethodResult, AppError> {
    match input {
        SeriesInput::Family(family) => {
            let closure = resolve_closure(family, config.closure, config.levels)?;
            let sum = sum_by_cf(family, config.levels, closure.as_ref())?;
            let mut detail = vec![("levels".into(), config.levels.to_string())];
            match (&closure, sum.attach_level) {
                (Some(c), Some(level)) => {
                    detail.push(("closure".into(), format!("{:?}", c.pattern)));
                    detail.push(("attach_level".into(), level.to_string()));
                    detail.push(("closure_tail".into(), format!("{:.12}", c.tail_value)));
                }
                _ => {
                    if let Some((lo, hi)) = sum.bracket {
                        detail.push(("bracket".into(), format!("[{lo:.12}, {hi:.12}]")));
                    }
                }
            }
            Ok(MethodResult {
                method: "cf".into(),
                value: sum.value,
                error_estimate: sum.error_estimate,
                detail,
            })
        }
        SeriesInput::Coefficients(coeffs) => {
            let depth = coeffs.len() / 2;
            if depth == 0 {
                return Err(AppError::Config(
                    "need at least two coefficients for the cf method".into(),
                ));
            }
            let cf = series_to_cf(coeffs, depth)?;
            let convs = convergents(&cf, depth + 2)?;
            let low = convs[convs.len() - 2].value_f64();
            let high = convs[convs.len() - 1].value_f64();
            let (lo, hi) = if low <= high {
                (low, high)
            } else {
                (high, low)
            };
            Ok(MethodResult {
                method: "cf".into(),
                value: 0.5 * (lo + hi),
                error_estimate: hi - lo,
                detail: vec![
                    ("depth".into(), depth.to_string()),
                    ("bracket".into(), format!("[{lo:.12}, {hi:.12}]")),
                ],
            })
        }
    }
}

/// The integral method (family only: explicit coefficient lists carry no
/// integral representation).
fn integral_method(input: &SeriesInput, config: &SeriesConfig) -> Result<MethodResult, AppError> {
    match input {
        SeriesInput::Family(family) => {
            let x = to_f64(family.x());
            if x == 1.0 {
                let oracle = borel_oracle(family.p(), family.q(), config.tolerance)?;
                let mut detail = vec![
                    ("form".into(), "half-line".into()),
                    ("evaluations".into(), oracle.nodes.to_string()),
                ];
                // The unit-interval trapezoid layout only represents the
                // unit factorial series; report it where it applies.
                if family.p() == family.q() && family.m() == family.p() {
                    use num_traits::One;
                    if family.p().is_one() {
                        let trapezoid = crate::quadrature::trapezoid_unit_interval(
                            &crate::quadrature::IntegrandSpec::FactorialUnit,
                            config.panels,
                        )?;
                        detail.push((
                            format!("trapezoid_{}_panels", config.panels),
                            format_significant(trapezoid.value),
                        ));
                    }
                }
                Ok(MethodResult {
                    method: "integral".into(),
                    value: oracle.value,
                    error_estimate: oracle.error_estimate,
                    detail,
                })
            } else {
                let value = general_integral(family.p(), family.q(), family.m(), x)?;
                Ok(MethodResult {
                    method: "integral".into(),
                    value,
                    error_estimate: 1e-9 * value.abs().max(1.0),
                    detail: vec![("form".into(), "finite".into())],
                })
            }
        }
        SeriesInput::Coefficients(_) => Err(AppError::Config(
            "the integral method needs a family (explicit coefficients carry no integral form)"
                .into(),
        )),
    }
}

/// Sum a series by the configured method(s).
pub fn cmd_sum(config: &SeriesConfig) -> Result<Report, AppError> {
    let input = parse_input(config)?;
    let mut report = Report::new("sum", describe_input(&input));
    report.provenance = vec!["s14".into(), "s21".into(), "s28".into()];
    match config.method {
        Method::Transform => report.methods.push(transform_method(&input, config)?),
        Method::Cf => report.methods.push(cf_method(&input, config)?),
        Method::Integral => report.methods.push(integral_method(&input, config)?),
        Method::All => {
            report.methods.push(transform_method(&input, config)?);
            report.methods.push(cf_method(&input, config)?);
            // Coefficient lists have no integral form; "all" runs what the
            // input supports.
            if let SeriesInput::Family(_) = input {
                report.methods.push(integral_method(&input, config)?);
            }
        }
    }
    report.fill_agreement();
    Ok(report)
}

/// Which table `cmd_table` prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Differences,
    Convergents,
}

impl std::str::FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "differences" => Ok(TableKind::Differences),
            "convergents" => Ok(TableKind::Convergents),
            other => Err(format!(
                "unknown table kind `{other}` (expected differences or convergents)"
            )),
        }
    }
}

/// Print a difference table or a convergent table for the configured series.
pub fn cmd_table(config: &SeriesConfig, kind: TableKind) -> Result<Report, AppError> {
    let input = parse_input(config)?;
    let mut report = Report::new("table", describe_input(&input));
    match kind {
        TableKind::Differences => {
            report.provenance = vec!["s14".into()];
            let terms = match &input {
                SeriesInput::Family(family) => generate_terms(family, config.depth.max(2)),
                SeriesInput::Coefficients(coeffs) => coeffs.clone(),
            };
            // Differences run on the unsigned magnitudes, the transform's view.
            let unsigned: Vec<Rational> = terms
                .iter()
                .enumerate()
                .map(|(k, t)| if k % 2 == 0 { t.clone() } else { -t })
                .collect();
            let table = build_table(&unsigned, DifferenceConvention::Forward, None);
            report.tables.push(TableBlock {
                kind: "differences".into(),
                title: "forward differences of the unsigned terms".into(),
                rows: table
                    .rows
                    .iter()
                    .map(|row| row.iter().map(format_ratio).collect())
                    .collect(),
            });
        }
        TableKind::Convergents => {
            report.provenance = vec!["s22".into()];
            let (cf, count) = match &input {
                SeriesInput::Family(family) => (
                    factorial_cf(family, config.levels.max(2)),
                    config.levels.max(2),
                ),
                SeriesInput::Coefficients(coeffs) => {
                    let depth = coeffs.len() / 2;
                    if depth == 0 {
                        return Err(AppError::Config(
                            "need at least two coefficients for a convergent table".into(),
                        ));
                    }
                    (series_to_cf(coeffs, depth)?, depth + 2)
                }
            };
            let convs = convergents(&cf, count)?;
            report.tables.push(TableBlock {
                kind: "convergents".into(),
                title: "unreduced convergents".into(),
                rows: convs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        vec![
                            i.to_string(),
                            c.unreduced(),
                            format!("{:.10}", c.value_f64()),
                        ]
                    })
                    .collect(),
            });
        }
    }
    Ok(report)
}

/// Replay a reproduction protocol.
pub fn cmd_repro(section: Section) -> Report {
    let SectionOutcome {
        section,
        summary,
        comparisons,
        tables,
        mismatch,
    } = run_section(section);
    let mut report = Report::new("repro", summary);
    report.provenance = vec![section];
    report.comparisons = comparisons;
    report.tables = tables;
    report.mismatch = mismatch;
    report
}

/// Output format for rendered reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown format `{other}` (expected text, csv, or json)"
            )),
        }
    }
}

/// Ten significant digits, fixed notation where reasonable.
pub fn format_significant(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    if (-4..14).contains(&magnitude) {
        let places = (9 - magnitude).max(0) as usize;
        format!("{value:.places$}")
    } else {
        format!("{value:.9e}")
    }
}

impl Report {
    /// Render in the requested format. Identical reports render to identical
    /// bytes.
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => {
                let mut json = serde_json::to_string_pretty(self).expect("report serializes");
                json.push('\n');
                json
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("== {} : {}", self.command, self.series));
        if !self.provenance.is_empty() {
            push(
                &mut out,
                format!("   protocols: {}", self.provenance.join(", ")),
            );
        }
        for method in &self.methods {
            push(
                &mut out,
                format!(
                    "{:>10}  value = {}  (± {})",
                    method.method,
                    format_significant(method.value),
                    format_significant(method.error_estimate)
                ),
            );
            for (key, val) in &method.detail {
                push(&mut out, format!("{:>10}    {key}: {val}", ""));
            }
        }
        if self.methods.len() > 1 {
            push(&mut out, "   pairwise |difference|:".into());
            for (i, row) in self.agreement.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    if let Some(delta) = entry {
                        if i < j {
                            push(
                                &mut out,
                                format!(
                                    "     {} vs {}: {}",
                                    self.methods[i].method,
                                    self.methods[j].method,
                                    format_significant(*delta)
                                ),
                            );
                        }
                    }
                }
            }
        }
        for table in &self.tables {
            push(&mut out, format!("-- {}", table.title));
            for row in &table.rows {
                push(&mut out, format!("   {}", row.join("  ")));
            }
        }
        if !self.comparisons.is_empty() {
            push(&mut out, "-- computed vs printed".into());
            for c in &self.comparisons {
                let verdict = if c.matched { "match   " } else { "MISMATCH" };
                push(
                    &mut out,
                    format!(
                        "   [{verdict}] {}: {} vs {}",
                        c.label, c.computed, c.printed
                    ),
                );
            }
            push(
                &mut out,
                format!(
                    "   overall: {}",
                    if self.mismatch {
                        "mismatches flagged (see above)"
                    } else {
                        "all entries match"
                    }
                ),
            );
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("record,label,value,extra\n");
        let escape = |s: &str| {
            if s.contains(',') || s.contains('"') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        for method in &self.methods {
            out.push_str(&format!(
                "method,{},{},{}\n",
                escape(&method.method),
                format_significant(method.value),
                format_significant(method.error_estimate)
            ));
        }
        for table in &self.tables {
            for (i, row) in table.rows.iter().enumerate() {
                out.push_str(&format!(
                    "table,{},{},\n",
                    escape(&format!("{} row {i}", table.kind)),
                    escape(&row.join(" "))
                ));
            }
        }
        for c in &self.comparisons {
            out.push_str(&format!(
                "comparison,{},{},{}\n",
                escape(&c.label),
                escape(&c.computed),
                escape(&format!("printed={} matched={}", c.printed, c.matched))
            ));
        }
        out
    }
}
