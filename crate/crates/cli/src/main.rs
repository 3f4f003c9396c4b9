mod args;
mod commands;
mod error;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::{CliError, Exit};
use crate::output::{emit, Report};

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Spectrum(a) => commands::spectrum_cmd(a),
        Command::Token(a) => commands::token_cmd(a),
        Command::Verify(a) => verify::verify_cmd(a),
        Command::Scan(a) => commands::scan_cmd(a),
    }
}

fn output_args(cli: &Cli) -> &args::OutputArgs {
    match &cli.command {
        Command::Spectrum(a) => &a.output,
        Command::Token(a) => &a.output,
        Command::Verify(a) => &a.output,
        Command::Scan(a) => &a.output,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Exit::Input as u8
            } else {
                Exit::Ok as u8
            });
        }
    };
    let result = run(&cli).and_then(|report| emit(&report, output_args(&cli)).map(|_| report.exit));
    match result {
        Ok(exit) => {
            match exit {
                Exit::Theorem => eprintln!("tokspec: a theorem-grade check failed"),
                Exit::Guard => eprintln!("tokspec: token graph size guard exceeded"),
                _ => {}
            }
            ExitCode::from(exit as u8)
        }
        Err(e) => {
            eprintln!("tokspec: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}
