use std::process::ExitCode;

use catpell_cli::{
    check_count, classify_summary, oracle_report, render_figure, render_gen, render_period,
    verify_term, CliError, Format, Report,
};
use clap::{Parser, Subcommand};

/// Solutions of x(x+1) = 10y(y+1) and the concatenation identity
/// (y+1)/(x+1) = (x∘(y+1))/(y∘(x+1)).
#[derive(Parser, Debug)]
#[command(name = "catpell", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate and classify the first terms of the solution sequence.
    Gen {
        #[arg(short = 'n', long, default_value_t = 26)]
        count: usize,
        #[arg(long, default_value = "table")]
        format: Format,
        /// Allow more than 10000 terms.
        #[arg(long)]
        no_cap: bool,
    },
    /// Render the factorial table for the first members of the subset.
    Figure {
        #[arg(long, default_value_t = 7)]
        rows: usize,
    },
    /// Run every check on a single term.
    Verify {
        /// 1-based term index.
        #[arg(short = 'n', long)]
        count: u64,
    },
    /// Residues of the sequence modulo m and their period.
    Period {
        #[arg(short = 'm', long, value_parser = clap::value_parser!(u64).range(2..))]
        modulus: u64,
    },
    /// Compare brute-force scans with the generated sequence.
    Oracle {
        #[arg(long, default_value_t = 10_000)]
        max_y: u64,
        #[arg(long, default_value_t = 2_000)]
        max_x: u64,
    },
    /// Summarise membership, gap runs and monotonicity.
    Classify {
        #[arg(short = 'n', long, default_value_t = 300)]
        count: usize,
    },
}

fn run(cmd: Command) -> Result<Report, CliError> {
    let ok = |text: String| Report { text, passed: true };
    match cmd {
        Command::Gen {
            count,
            format,
            no_cap,
        } => {
            check_count(count, no_cap)?;
            render_gen(count, format).map(ok)
        }
        Command::Figure { rows } => render_figure(rows).map(ok),
        Command::Verify { count } => verify_term(count),
        Command::Period { modulus } => render_period(modulus).map(ok),
        Command::Oracle { max_y, max_x } => oracle_report(max_y, max_x),
        Command::Classify { count } => {
            check_count(count, false)?;
            classify_summary(count)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
