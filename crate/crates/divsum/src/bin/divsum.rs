//! Command-line front end: sum a series by a chosen method, print difference
//! or convergent tables, or replay a reproduction protocol.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use divsum::report::{
    cmd_repro, cmd_sum, cmd_table, ClosureSpec, Method, OutputFormat, Report, SeriesConfig,
    TableKind,
};
use divsum::repro::Section;

#[derive(Parser)]
#[command(
    name = "divsum",
    version,
    about = "Finite values for divergent alternating factorial-type series",
    long_about = "Sums divergent alternating series of factorial type by difference \
                  transforms, continued fractions with tail closure, and integral \
                  representations, and cross-validates the methods against each other \
                  and against their classical reference tables."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeriesArgs {
    /// Family parameter p as `num` or `num/den`.
    #[arg(long)]
    p: Option<String>,
    /// Family parameter q as `num` or `num/den`.
    #[arg(long)]
    q: Option<String>,
    /// Family exponent m as `num` or `num/den`.
    #[arg(long, default_value = "1")]
    m: String,
    /// Family argument x as `num` or `num/den`.
    #[arg(long, default_value = "1")]
    x: String,
    /// Explicit signed coefficients, comma separated (`1,-1,2,-6`).
    #[arg(long, value_delimiter = ',')]
    coeffs: Option<Vec<String>>,
    /// Summation method: transform, cf, integral, or all.
    #[arg(long, default_value = "all")]
    method: Method,
    /// Terms for the transform method and difference tables.
    #[arg(long, default_value_t = 24)]
    depth: usize,
    /// Fraction levels for the cf method and convergent tables.
    #[arg(long, default_value_t = 20)]
    levels: usize,
    /// Panels for trapezoid layouts.
    #[arg(long, default_value_t = 10)]
    panels: u64,
    /// Absolute tolerance for the integral oracle.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Tail closure: auto, none, paired:<a>, or single:<n>.
    #[arg(long, default_value = "auto")]
    closure: ClosureSpec,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: text, csv, or json.
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Write the report to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sum a series by the chosen method(s) and report agreement.
    Sum {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a difference or convergent table.
    Table {
        /// Table kind: differences or convergents.
        #[arg(value_name = "KIND")]
        kind: TableKind,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Replay a frozen reproduction protocol (s15 ... s29).
    Repro {
        /// Protocol tag: s15, s16, s17, s18, s19, s22, s23, s25, or s29.
        #[arg(value_name = "SECTION")]
        section: Section,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn to_config(args: &SeriesArgs) -> SeriesConfig {
    let family = match (&args.p, &args.q) {
        (Some(p), Some(q)) => Some([p.clone(), q.clone(), args.m.clone(), args.x.clone()]),
        _ => None,
    };
    SeriesConfig {
        family,
        coefficients: args.coeffs.clone(),
        method: args.method,
        depth: args.depth,
        levels: args.levels,
        panels: args.panels,
        tolerance: args.tol,
        closure: args.closure,
    }
}

fn emit(report: &Report, output: &OutputArgs) -> std::io::Result<()> {
    let rendered = report.render(output.format);
    match &output.out {
        Some(path) => std::fs::write(path, rendered),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sum { series, output } => {
            cmd_sum(&to_config(series)).and_then(|report| Ok(emit(&report, output)?))
        }
        Command::Table {
            kind,
            series,
            output,
        } => cmd_table(&to_config(series), *kind).and_then(|report| Ok(emit(&report, output)?)),
        Command::Repro { section, output } => {
            let report = cmd_repro(*section);
            emit(&report, output).map_err(Into::into)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("divsum: {err}");
            ExitCode::FAILURE
        }
    }
}
