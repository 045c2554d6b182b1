//! geoprod: exact geodetic and hull numbers, convexity operators, and
//! boundary sets on strong product graphs.
//!
//! Exit codes: 0 all pass, 1 any check or table mismatch, 2 parse or usage
//! error, 3 a time budget expired (mismatches take precedence).

use std::io::Write;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

mod expr;
mod record;
mod run;

use record::ResultRecord;
use run::{CliError, RunOutput, Settings, TableName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "geoprod",
    version,
    about = "Exact geodetic and hull numbers, convexity operators, and boundary sets \
             on strong product graphs",
    after_help = "Graph expressions: P5, C7, K4, K2,3, S6, W6, T:(0-1,0-2,0-3,3-4), \
                  file:<edge list>, and products of two atoms joined by \" x \", \
                  e.g. \"K3 x C4\". Product vertices are numbered row major: \
                  (a, b) becomes a*|V(H)| + b."
)]
struct Cli {
    /// Wall clock budget per solved instance, in seconds.
    #[arg(long, global = true, default_value_t = 300, value_name = "SECS")]
    time_limit: u64,
    /// Worker threads for the exact search; any count produces identical output.
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    workers: usize,
    /// Output format: JSON Lines, or the flat CSV subset (instance, g, h, ms).
    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Add wall clock milliseconds to each record. Off by default so output
    /// is byte reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one expression: both numbers, witnesses, and boundary sets.
    Param { expr: String },
    /// Run a preset instance battery against reference values.
    Table {
        #[arg(value_enum)]
        name: TableName,
    },
    /// Run a property suite (intervals, projections, bounds, conditions,
    /// boundary, all) on fixed and seeded random instances.
    Check {
        suite: String,
        /// Seed for the random instance pools.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random instances per pool.
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Verify the boundary set factorization on a product of two expressions.
    Boundary { expr_g: String, expr_h: String },
    /// Solve a raw edge list (header "n m", then one "u v" line per edge)
    /// from a file, or stdin with "-".
    SolveRaw {
        #[arg(default_value = "-")]
        file: String,
    },
}

fn vertex_cap_from_env() -> Result<usize, CliError> {
    match std::env::var("GEOPROD_VERTEX_CAP") {
        Ok(text) => match text.parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(cap),
            _ => Err(CliError::Usage(format!(
                "GEOPROD_VERTEX_CAP must be a positive integer, got {text:?}"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(geoprod_core::DEFAULT_VERTEX_CAP),
        Err(std::env::VarError::NotUnicode(_)) => Err(CliError::Usage(
            "GEOPROD_VERTEX_CAP is not valid unicode".to_string(),
        )),
    }
}

fn execute(cli: &Cli) -> Result<RunOutput, CliError> {
    if cli.workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".to_string()));
    }
    let settings = Settings {
        time_limit: Duration::from_secs(cli.time_limit),
        workers: cli.workers,
        timing: cli.timing,
        vertex_cap: vertex_cap_from_env()?,
    };
    match &cli.command {
        Command::Param { expr } => run::cmd_param(expr, &settings),
        Command::Table { name } => run::cmd_table(*name, &settings),
        Command::Check { suite, seed, trials } => {
            run::cmd_check(suite, *seed, *trials, &settings)
        }
        Command::Boundary { expr_g, expr_h } => {
            run::cmd_boundary(expr_g, expr_h, &settings)
        }
        Command::SolveRaw { file } => run::cmd_solve_raw(file, &settings),
    }
}

fn print_records(records: &[ResultRecord], format: Format) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    match format {
        Format::Jsonl => {
            for rec in records {
                writeln!(w, "{}", rec.to_jsonl())?;
            }
        }
        Format::Csv => {
            writeln!(w, "{}", ResultRecord::CSV_HEADER)?;
            for rec in records {
                writeln!(w, "{}", rec.to_csv_row())?;
            }
        }
    }
    w.flush()
}

fn main() {
    let cli = Cli::parse();
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("geoprod: {e}");
            std::process::exit(e.exit_code());
        }
    };
    if let Err(e) = print_records(&out.records, cli.format) {
        eprintln!("geoprod: cannot write output: {e}");
        std::process::exit(1);
    }
    let code = if out.mismatch {
        1
    } else if out.timeout {
        3
    } else {
        0
    };
    std::process::exit(code);
}
