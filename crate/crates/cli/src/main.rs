use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use prelie_cli::args::Cli;
use prelie_cli::{execute, exit_code};
use prelie_core::Limits;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let outcome = execute(&cli, &limits);
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(outcome.stdout.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::FAILURE;
    }
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code)
}
