use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use symcheck::lie::table::{self, Table};
use symcheck::lie::{extract_structure_constants, find_basis_map, StructureConstants};
use symcheck::realizations::{export_json, family_by_name, FAMILY_NAMES};
use symcheck::suites::{run_suite, SuiteOptions, SUITES};
use symcheck::{Error, Result};

/// Exact verification of Lie-algebra realizations.
#[derive(Parser)]
#[command(name = "symcheck", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print one line per check.
    Run {
        /// Suite name, or `all`.
        suite: String,
        /// Fock-space cutoff N.
        #[arg(long, default_value_t = 6)]
        cutoff: usize,
        /// Tolerance for floating-point checks.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Directory with replacement structure-constant tables.
        #[arg(long)]
        tables: Option<PathBuf>,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a family's generator matrices as JSON.
    Export {
        family: String,
        #[arg(long)]
        json: PathBuf,
        #[arg(long, default_value_t = 6)]
        cutoff: usize,
    },
    /// Search for a signed-permutation map between two structure tensors.
    Map {
        /// A family name or a bundled table (sp2, yurke-triple, su2, so32).
        src: String,
        dst: String,
        #[arg(long, default_value_t = 6)]
        cutoff: usize,
        #[arg(long)]
        tables: Option<PathBuf>,
    },
}

fn tensor(name: &str, cutoff: usize, tables: Option<&std::path::Path>) -> Result<StructureConstants> {
    let table = match name {
        "sp2" => Some(Table::Sp2),
        "yurke-triple" => Some(Table::YurkeTriple),
        "su2" => Some(Table::Su2),
        "so32" => Some(Table::So32),
        _ => None,
    };
    match table {
        Some(t) => table::load(t, tables),
        None => extract_structure_constants(family_by_name(name, cutoff)?.realization()),
    }
}

fn execute(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Run { suite, cutoff, tol, tables, json } => {
            let report = run_suite(&suite, &SuiteOptions { cutoff, tol, tables })?;
            print!("{}", report.to_text());
            if let Some(path) = json {
                std::fs::write(path, report.to_json())?;
            }
            Ok(report.exit_code() as u8)
        }
        Command::Export { family, json, cutoff } => {
            let fam = family_by_name(&family, cutoff)?;
            let text = serde_json::to_string_pretty(&export_json(&fam))?;
            std::fs::write(&json, text + "\n")?;
            println!("wrote {} generators of {family} to {}", fam.realization().labels().len(), json.display());
            Ok(0)
        }
        Command::Map { src, dst, cutoff, tables } => {
            let (a, b) = (tensor(&src, cutoff, tables.as_deref())?, tensor(&dst, cutoff, tables.as_deref())?);
            match find_basis_map(&a, &b)? {
                Some(map) => {
                    println!("{map}");
                    Ok(0)
                }
                None => {
                    println!("none");
                    Ok(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Unknown { .. }) {
                eprintln!("suites: {}", SUITES.join(", "));
                eprintln!("families: {}", FAMILY_NAMES.join(", "));
            }
            ExitCode::from(2)
        }
    }
}
