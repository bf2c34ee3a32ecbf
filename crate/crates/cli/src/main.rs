//! Command-line front end for exact quasiplatonic cyclic-action counting.

mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use quasicount::{
    enumerate_signatures, genus, oracle, qc_report, r_cyclic, t_value, Error as LibError, Signature,
};

use output::{Format, MethodView};

const MAX_N: u64 = 1_000_000_000;
const MAX_RANGE_END: u64 = 1_000_000;
const MAX_SERIES_ORDER: usize = 1000;

#[derive(Parser)]
#[command(
    name = "quasicount",
    version,
    about = "Exact counts of quasiplatonic topological cyclic-group actions on surfaces",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Suppress headers and informational lines.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Sum T-values over the admissible signatures (authoritative).
    Sum,
    /// Also evaluate the closed-form product formula, where it applies.
    Closed,
    /// Also count orbits of generating triples by brute force.
    Oracle,
    /// All methods, with an agreement verdict.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Recursions,
    Oracle,
    Corollary,
    Lloyd,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Count the distinct quasiplatonic actions of the cyclic group of order N.
    Qc {
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Sum)]
        method: Method,
    },
    /// Per-n counts over an inclusive range.
    Range { start: u64, end: u64 },
    /// List the admissible signatures for N with their genera.
    Signatures { n: u64 },
    /// Break down the action count of one signature.
    Tvalue { n: u64, n1: u64, n2: u64, n3: u64 },
    /// Number of regular dessins with cyclic symmetry group of order N.
    Dessins { n: u64 },
    /// Coefficients of the prime-order action generating function.
    Lloyd {
        p: u64,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Run the consistency suites and report pass/fail.
    Verify {
        /// Sweep ceiling; each suite has its own default and hard cap.
        #[arg(long = "n-max")]
        n_max: Option<u64>,
        /// Comma-separated list of suites.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Suite::All])]
        suites: Vec<Suite>,
    },
}

enum Failure {
    /// Invalid usage or input: exit 1.
    Input(String),
    /// A cross-check disagreed or an internal invariant broke: exit 2.
    Consistency(String),
}

fn classify(err: LibError) -> Failure {
    match err {
        LibError::NonIntegral { .. } | LibError::GenusNotHyperbolic { .. } => {
            Failure::Consistency(err.to_string())
        }
        _ => Failure::Input(err.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                emit(&err.to_string());
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Consistency(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn require_n(n: u64, max: u64) -> Result<(), Failure> {
    if n == 0 || n > max {
        return Err(Failure::Input(format!("n must be in 1..={max}, got {n}")));
    }
    Ok(())
}

/// Writes to stdout; when the consumer has gone away (closed pipe), exits
/// quietly instead of panicking mid-stream.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout();
    if out
        .write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .is_err()
    {
        std::process::exit(0);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format: Format = cli.format.into();
    let quiet = cli.quiet;
    match cli.command {
        Command::Qc { n, method } => cmd_qc(n, method, format, quiet),
        Command::Range { start, end } => cmd_range(start, end, format, quiet),
        Command::Signatures { n } => cmd_signatures(n, format, quiet),
        Command::Tvalue { n, n1, n2, n3 } => cmd_tvalue(n, n1, n2, n3, format, quiet),
        Command::Dessins { n } => cmd_dessins(n, format, quiet),
        Command::Lloyd { p, order } => cmd_lloyd(p, order, format, quiet),
        Command::Verify { n_max, suites } => cmd_verify(n_max, &suites, format, quiet),
    }
}

fn cmd_qc(n: u64, method: Method, format: Format, quiet: bool) -> Result<(), Failure> {
    require_n(n, MAX_N)?;
    let with_oracle = matches!(method, Method::Oracle | Method::All);
    if with_oracle {
        let bound = oracle::oracle_max();
        if n > bound {
            return Err(Failure::Input(format!(
                "brute-force counting is bounded at n <= {bound} \
                 (set QUASICOUNT_ORACLE_MAX to raise it); got {n}"
            )));
        }
    }
    let report = qc_report(n, with_oracle).map_err(classify)?;
    let view = MethodView {
        show_closed: matches!(method, Method::Closed | Method::All),
        show_oracle: with_oracle,
    };
    emit(&output::render_qc(&report, view, format, quiet));
    if !output::view_agrees(&report, view) {
        return Err(Failure::Consistency(format!(
            "methods disagree for n = {n}"
        )));
    }
    Ok(())
}

fn cmd_range(start: u64, end: u64, format: Format, quiet: bool) -> Result<(), Failure> {
    if start == 0 || start > end || end > MAX_RANGE_END {
        return Err(Failure::Input(format!(
            "range must satisfy 1 <= start <= end <= {MAX_RANGE_END}, got {start}..={end}"
        )));
    }
    let mut rows = Vec::with_capacity((end - start + 1) as usize);
    for n in start..=end {
        let mut qc = 0u64;
        let mut genera = Vec::new();
        for sig in enumerate_signatures(n) {
            qc += t_value(n, sig).map_err(classify)?.value;
            genera.push(genus(n, sig).map_err(classify)?);
        }
        rows.push(output::RangeRow {
            n,
            qc,
            r_cn: r_cyclic(n),
            num_signatures: genera.len(),
            min_genus: genera.iter().copied().min(),
            max_genus: genera.iter().copied().max(),
        });
    }
    emit(&output::render_range(&rows, format, quiet));
    Ok(())
}

fn cmd_signatures(n: u64, format: Format, quiet: bool) -> Result<(), Failure> {
    require_n(n, MAX_N)?;
    let mut rows = Vec::new();
    for sig in enumerate_signatures(n) {
        rows.push((sig, genus(n, sig).map_err(classify)?));
    }
    emit(&output::render_signatures(n, &rows, format, quiet));
    Ok(())
}

fn cmd_tvalue(
    n: u64,
    n1: u64,
    n2: u64,
    n3: u64,
    format: Format,
    quiet: bool,
) -> Result<(), Failure> {
    require_n(n, MAX_N)?;
    let sig = Signature::new(n1, n2, n3);
    let breakdown = t_value(n, sig).map_err(classify)?;
    let g = genus(n, sig).map_err(classify)?;
    emit(&output::render_tvalue(n, g, &breakdown, format, quiet));
    Ok(())
}

fn cmd_dessins(n: u64, format: Format, quiet: bool) -> Result<(), Failure> {
    require_n(n, MAX_N)?;
    emit(&output::render_dessins(n, r_cyclic(n), format, quiet));
    Ok(())
}

fn cmd_lloyd(p: u64, order: usize, format: Format, quiet: bool) -> Result<(), Failure> {
    if order > MAX_SERIES_ORDER {
        return Err(Failure::Input(format!(
            "order must be at most {MAX_SERIES_ORDER}, got {order}"
        )));
    }
    let series = quasicount::lloyd_series(p, order).map_err(classify)?;
    emit(&output::render_lloyd(
        p,
        series.coefficients(),
        format,
        quiet,
    ));
    Ok(())
}

fn cmd_verify(
    n_max: Option<u64>,
    suites: &[Suite],
    format: Format,
    quiet: bool,
) -> Result<(), Failure> {
    let selected = |suite: Suite| suites.contains(&suite) || suites.contains(&Suite::All);
    let resolve = |bounds: verify::SuiteBounds, name: &str| -> Result<u64, Failure> {
        match n_max {
            None => Ok(bounds.default.min(bounds.cap)),
            Some(v) if v >= 1 && v <= bounds.cap => Ok(v),
            Some(v) => Err(Failure::Input(format!(
                "--n-max {v} outside 1..={} for suite {name}",
                bounds.cap
            ))),
        }
    };
    let mut results = Vec::new();
    if selected(Suite::Recursions) {
        let bound = resolve(verify::recursion_bounds(), "recursions")?;
        results.push(verify::run_recursions(bound).map_err(classify)?);
    }
    if selected(Suite::Oracle) {
        let bound = resolve(verify::oracle_bounds(), "oracle")?;
        results.push(verify::run_oracle(bound).map_err(classify)?);
    }
    if selected(Suite::Corollary) {
        let bound = resolve(verify::corollary_bounds(), "corollary")?;
        results.push(verify::run_corollary(bound).map_err(classify)?);
    }
    if selected(Suite::Lloyd) {
        let bound = resolve(verify::lloyd_bounds(), "lloyd")?;
        results.push(verify::run_lloyd(bound).map_err(classify)?);
    }
    if results.is_empty() {
        return Err(Failure::Input("no suites selected".to_string()));
    }
    let rendered = match format {
        Format::Table => verify::render_table(&results, quiet),
        Format::Csv => verify::render_csv(&results),
        Format::Json => verify::render_json(&results),
    };
    emit(&rendered);
    if results.iter().any(|r| !r.passed()) {
        return Err(Failure::Consistency(
            "one or more verification suites failed".to_string(),
        ));
    }
    Ok(())
}
