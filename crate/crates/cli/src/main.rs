mod args;
mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, CliResult, Outcome};

/// Caps the worker pool at `WEDGE_THREADS` when set.
fn init_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("WEDGE_THREADS") else {
        return Ok(());
    };
    let n: usize = match v.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => {
            return Err(CliError::Usage(format!(
                "WEDGE_THREADS must be a positive integer, got {v:?}"
            )))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Numeric(e.to_string()))
}

fn run(cli: &Cli, argv: &[String]) -> CliResult<Outcome> {
    init_threads()?;
    match &cli.command {
        Command::Energy(a) => commands::energy(a, argv),
        Command::Sweep(a) => commands::sweep(a, argv),
        Command::String(a) => commands::string(a, argv),
        Command::Modes(a) => commands::modes(a, argv),
        Command::Zeromode(a) => commands::zeromode(a, argv),
        Command::Verify(a) => commands::verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, &argv) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error for a report writer
            let _ = stdout.write_all(out.stdout.as_bytes());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
