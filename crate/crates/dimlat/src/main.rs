use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dimlat::cli::{parse, run};
use dimlat::selftest;

/// Exact dimension arithmetic for von Neumann algebras with finite atomic
/// center.
#[derive(Parser)]
#[command(name = "dimlat", version, about)]
struct Cli {
    /// Largest representable aleph level.
    #[arg(long, global = true, default_value_t = dimlat::DEFAULT_MAX_ALEPH)]
    max_aleph: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and execute a script, one report line per query.
    Run { file: PathBuf },
    /// Parse and validate a script without executing it.
    Check { file: PathBuf },
    /// Run the built-in verification grid.
    Selftest,
}

fn read(file: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(file).map_err(|e| {
        eprintln!("{}: {}", file.display(), e);
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    dimlat::set_max_aleph(cli.max_aleph);
    match cli.command {
        Command::Run { file } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(code) => return code,
            };
            match parse(&text) {
                Err(diag) => {
                    eprintln!("{}:{}", file.display(), diag);
                    ExitCode::FAILURE
                }
                Ok(script) => {
                    let outcome = run(&script);
                    print!("{}", outcome.report);
                    match outcome.error {
                        Some(err) => {
                            eprintln!("{}: error: {}", file.display(), err);
                            ExitCode::FAILURE
                        }
                        None => ExitCode::SUCCESS,
                    }
                }
            }
        }
        Command::Check { file } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(code) => return code,
            };
            match parse(&text) {
                Err(diag) => {
                    eprintln!("{}:{}", file.display(), diag);
                    ExitCode::FAILURE
                }
                Ok(_) => {
                    println!("OK");
                    ExitCode::SUCCESS
                }
            }
        }
        Command::Selftest => {
            if dimlat::max_aleph() < 3 {
                eprintln!("selftest needs --max-aleph of at least 3");
                return ExitCode::from(2);
            }
            let results = selftest::run_all();
            let mut ok = true;
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!(
                    "criterion {} ({}): {} — {} [{} ms]",
                    r.index, r.name, status, r.detail, r.millis
                );
                ok &= r.passed;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
