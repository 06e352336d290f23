use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hilbstrat::oracle::oracle_check;
use hilbstrat::report::{analyze, default_r_max, StratConfig, StratReport};
use hilbstrat::semigroup::NumericalSemigroup;
use hilbstrat::Rat;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Stratify the punctual Hilbert schemes M_r of k[[t^a1, ..., t^am]] into affine cells.
#[derive(Debug, Parser)]
#[command(name = "hilbstrat", version)]
struct Args {
    /// Semigroup generators, comma separated (e.g. 3,4).
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    gens: Vec<i64>,
    /// Analyze r = 1..=MAX_R (default 2 delta).
    #[arg(long, conflicts_with = "r")]
    max_r: Option<u32>,
    /// Analyze a single r.
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Extra series terms beyond the default truncation.
    #[arg(long, default_value_t = 0)]
    trunc_margin: usize,
    /// Exponent window of the degeneration search.
    #[arg(long, default_value_t = 3)]
    degen_window: i64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Cross-check enumeration and families against brute force.
    #[arg(long)]
    oracle_check: bool,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

fn main() -> ExitCode {
    let args = Args::parse();
    let gamma = match NumericalSemigroup::from_generators(&args.gens) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    if args.degen_window < 0 {
        eprintln!("error: --degen-window must be non-negative");
        return ExitCode::from(EXIT_INVALID);
    }
    let rs: Vec<u32> = match (args.r, args.max_r) {
        (Some(0), _) | (_, Some(0)) => {
            eprintln!("error: r must be at least 1");
            return ExitCode::from(EXIT_INVALID);
        }
        (Some(r), _) => vec![r],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => (1..=default_r_max(&gamma)).collect(),
    };
    let config = StratConfig { trunc_margin: args.trunc_margin, degen_window: args.degen_window, seed: args.seed };

    if args.oracle_check {
        let r_max = rs.iter().copied().max().unwrap_or(1);
        let diff = oracle_check::<Rat>(&gamma, r_max, args.seed, 20);
        for e in &diff.entries {
            eprintln!("oracle: r={} {}: {}", e.r, e.kind, e.detail);
        }
        if !diff.is_empty() {
            eprintln!("oracle: {} discrepancies", diff.entries.len());
            return ExitCode::from(EXIT_FAILURE);
        }
        eprintln!("oracle: no discrepancies for r <= {r_max}");
    }

    let strata = match analyze::<Rat>(&gamma, rs, &config) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    };
    let report = StratReport::new(&gamma, &strata);
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Table => report.to_table(),
    };
    let _ = std::io::stdout().write_all(text.as_bytes());
    let unknowns = report.unknowns();
    if unknowns > 0 {
        eprintln!("warning: {unknowns} closure verdicts are unknown; raise --degen-window");
        return ExitCode::from(EXIT_UNKNOWN);
    }
    ExitCode::SUCCESS
}
