//! `kummer` — reproducible tables of certified enclosures for the
//! reparametrized Kummer function and the incomplete Gamma function.
//!
//! Exit codes: 0 success, 2 usage error, 3 numerical failure.

// see the library crate: negated comparisons double as NaN guards
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod table;

use clap::{Parser, Subcommand, ValueEnum};
use commands::AppError;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "kummer", version, about = "Certified Kummer-function enclosure tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the table to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enclosures of N(alpha, delta, x) across an x grid
    Enclose {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        /// Gamma-expansion order
        #[arg(long)]
        n: u32,
        /// Taylor order
        #[arg(long)]
        m: u32,
        /// x grid as start:stop:step
        #[arg(long)]
        grid: String,
    },
    /// Approximant study for the incomplete Gamma function
    Gamma {
        #[arg(long)]
        nu: f64,
        /// Taylor order
        #[arg(long)]
        m: u32,
        /// Pade order (0, 1 or 2)
        #[arg(long, default_value_t = 1)]
        q: u32,
        /// x grid as start:stop:step
        #[arg(long)]
        grid: String,
    },
    /// Observed truncation error against its analytic bound
    ErrorRatio {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        /// Evaluation point; repeatable
        #[arg(long = "x", required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
        #[arg(long)]
        n_max: u32,
    },
    /// Recompute the published worked-example quantities
    Examples {
        /// One of: i, ii, iii, gamma-half, footnote
        which: String,
    },
    /// Uniform-norm error bound vs the empirical supremum
    Norm {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        /// Norm weight exponent, in [0, alpha]
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        n_max: u32,
    },
}

fn run(cli: &Cli) -> Result<String, AppError> {
    let table = match &cli.command {
        Command::Enclose {
            alpha,
            delta,
            n,
            m,
            grid,
        } => commands::cmd_enclose(*alpha, *delta, *n, *m, grid)?,
        Command::Gamma { nu, m, q, grid } => commands::cmd_gamma(*nu, *m, *q, grid)?,
        Command::ErrorRatio {
            alpha,
            delta,
            x,
            n_max,
        } => commands::cmd_error_ratio(*alpha, *delta, x, *n_max)?,
        Command::Examples { which } => commands::cmd_examples(which)?,
        Command::Norm {
            alpha,
            delta,
            sigma,
            n_max,
        } => commands::cmd_norm(*alpha, *delta, *sigma, *n_max)?,
    };
    Ok(match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(rendered) => rendered,
        Err(AppError::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
        Err(AppError::Numeric(message)) => {
            eprintln!("numerical failure: {message}");
            return ExitCode::from(3);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, rendered),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
