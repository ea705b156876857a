mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::Cli;
use crate::commands::{run, EXIT_USAGE, EXIT_VIOLATION};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if !cli.global.tol.is_finite() {
        eprintln!("error: --tol must be finite");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(&cli.command, &cli.global) {
        Ok(outcome) => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = output::emit(
                &mut lock,
                cli.global.format,
                &outcome.envelope,
                outcome.table,
            ) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            let _ = lock.flush();
            match outcome.violation {
                Some(msg) => {
                    eprintln!("property violation:\n{msg}");
                    ExitCode::from(EXIT_VIOLATION)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
