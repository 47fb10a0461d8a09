//! Command-line front end for the `gridpart` counting engine.
//!
//! Exit codes: `0` success, `1` usage error, `2` a formula disagreed with
//! the exhaustive oracle (or an internal consistency check tripped).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use gridpart::{counts, foundation::DEFAULT_TABLE_CAP, oracle, Error, GridShape, Oracle};

pub mod fixture;
pub mod render;
pub mod series_catalog;
pub mod verify;

pub use fixture::{PaperFixture, Quantity};
pub use render::Format;
pub use series_catalog::SeriesId;
pub use verify::{Status, VerifyFinding, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Default `--max-cells` for `table`.
pub const TABLE_DEFAULT_CELLS: usize = 30;

#[derive(Debug, Parser)]
#[command(
    name = "gridpart",
    version,
    about = "Count set partitions of an m x n grid under rectangle symmetries"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest cell count covered by `table` (default 30) or `verify`
    /// (default 12).
    #[arg(long, global = true)]
    max_cells: Option<usize>,

    /// Worker threads for exhaustive enumeration (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Raise the enumeration cap above 12 cells (at most 15).
    #[arg(long, global = true, value_name = "K")]
    unsafe_cells: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// B, H, V, R, S, L and C for one m x n grid.
    Count { m: usize, n: usize },
    /// One row per non-square shape with at most --max-cells cells.
    Table,
    /// Compare formulas against exhaustive enumeration (and published values).
    Verify {
        /// Also compare against the bundled published values.
        #[arg(long)]
        against_paper: bool,
    },
    /// Dump the factorial-scaled coefficients of a generating function.
    Series {
        /// One of bell, 3.1, 3.2, 4.1, 5.1c, 5.2, 5.3, klein.
        id: SeriesId,
        /// Truncation order: one value for every variable, or a
        /// comma-separated list (outermost variable first).
        #[arg(long, default_value = "6")]
        order: String,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MISMATCH
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let oracle = {
        let o = Oracle::new().with_jobs(cli.jobs);
        match cli.unsafe_cells {
            Some(k) => o.with_cap(k).map_err(|_| {
                Failure::Usage(format!(
                    "--unsafe-cells {k} exceeds the hard limit of {}",
                    oracle::HARD_CAP
                ))
            })?,
            None => o,
        }
    };

    match cli.command {
        Command::Count { m, n } => {
            let shape = GridShape::new(m, n)?;
            if shape.is_square() {
                writeln!(
                    err,
                    "note: {shape} is square; counts use the four rectangle symmetries only \
                     (quarter turns and diagonal reflections are ignored)"
                )?;
            }
            render::count(out, &counts::count_report(shape)?, cli.format)?;
        }
        Command::Table => {
            let max = cli.max_cells.unwrap_or(TABLE_DEFAULT_CELLS);
            if max > DEFAULT_TABLE_CAP {
                return Err(Failure::Usage(format!(
                    "--max-cells {max} exceeds the table limit of {DEFAULT_TABLE_CAP}"
                )));
            }
            let reports = verify::shapes_up_to(max, false)
                .into_iter()
                .map(counts::count_report)
                .collect::<Result<Vec<_>, _>>()?;
            render::table(out, &reports, cli.format)?;
        }
        Command::Verify { against_paper } => {
            let max = cli.max_cells.unwrap_or(oracle::DEFAULT_CAP);
            let fixture = against_paper.then(PaperFixture::published);
            let report = verify::verify(max, fixture.as_ref(), &oracle, |line| {
                let _ = writeln!(err, "{line}");
            })?;
            render::verify(out, &report, cli.format)?;
            writeln!(
                err,
                "{} findings: {} confirmed, {} paper errata, {} formula bugs, {} formula only; {} tripwires",
                report.findings.len(),
                report.count(Status::Confirmed),
                report.count(Status::PaperErratum),
                report.count(Status::FormulaBug),
                report.count(Status::FormulaOnly),
                report.tripwires.len()
            )?;
            if report.has_formula_bug() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Series { id, order } => {
            let orders = parse_orders(&order, id.arity())?;
            let s = id.build(&orders)?;
            render::series(out, id, &s, cli.format)
                .map_err(|e| Failure::Mismatch(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_orders(text: &str, arity: usize) -> Result<Vec<usize>, Failure> {
    let parsed: Vec<usize> = text
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("invalid --order `{text}`")))?;
    let orders = match parsed.len() {
        1 => vec![parsed[0]; arity],
        n if n == arity => parsed,
        n => {
            return Err(Failure::Usage(format!(
                "--order has {n} values but the series has {arity} variables"
            )))
        }
    };
    if orders.iter().any(|&o| o > DEFAULT_TABLE_CAP) {
        return Err(Failure::Usage(format!(
            "--order values are limited to {DEFAULT_TABLE_CAP}"
        )));
    }
    Ok(orders)
}
