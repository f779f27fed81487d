use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k4links_cli::constants::{compute, ConstantsFamily};
use k4links_cli::series::{render, SeriesFamily};
use k4links_cli::verify::{run, to_json, Limits, Scope};
use k4links_cli::Format;

#[derive(Parser)]
#[command(
    name = "k4links",
    version,
    about = "Counting series and asymptotics of K4-minor-free links and diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a counting series.
    Series {
        family: SeriesFamily,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Singularity and growth constants of a family.
    Constants {
        family: ConstantsFamily,
        /// Significant digits printed.
        #[arg(long, default_value_t = 10)]
        digits: usize,
        /// Working precision in decimal digits.
        #[arg(long, default_value_t = 60)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites; exits with 1 if any check fails.
    Verify {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long, default_value_t = Limits::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = Limits::default().max_size)]
        max_size: usize,
        /// Order for the partition identity.
        #[arg(long, default_value_t = Limits::default().partition_order)]
        order: usize,
        /// Order for the elimination identities.
        #[arg(long, default_value_t = Limits::default().poly_order)]
        poly_order: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    if out
        .write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Series {
            family,
            order,
            format,
        } => match family.report(order).and_then(|r| render(&r, format)) {
            Ok(text) => emit(&text),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Command::Constants {
            family,
            digits,
            precision,
            format,
        } => {
            if digits + 10 > precision {
                return usage(&format!(
                    "--digits {digits} needs --precision of at least {}",
                    digits + 10
                ));
            }
            match compute(family, digits, precision) {
                Ok(r) => emit(&match format {
                    Format::Text => r.to_text(),
                    Format::Json => r.to_json() + "\n",
                    Format::Csv => r.to_csv(),
                }),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Verify {
            scope,
            max_vertices,
            max_size,
            order,
            poly_order,
            json,
        } => {
            if !(1..=6).contains(&max_vertices) {
                return usage("--max-vertices must lie in 1..=6");
            }
            if !(2..=14).contains(&max_size) {
                return usage("--max-size must lie in 2..=14");
            }
            let limits = Limits {
                poly_order,
                partition_order: order,
                max_vertices,
                max_size,
            };
            let checks = run(scope, limits);
            let text = if json {
                to_json(&checks)
            } else {
                let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
                let failed = checks.iter().filter(|c| !c.passed).count();
                s += &format!("{} checks, {} failed\n", checks.len(), failed);
                s
            };
            let code = emit(&text);
            if checks.iter().all(|c| c.passed) {
                code
            } else {
                ExitCode::from(1)
            }
        }
    }
}
