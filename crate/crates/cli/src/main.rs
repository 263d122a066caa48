mod args;
mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::error::exit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::SUCCESS });
        }
    };
    if !cli.quiet {
        eprintln!("galileo {}", env!("CARGO_PKG_VERSION"));
    }
    match commands::run(&cli) {
        Ok(out) => {
            // a closed pipe downstream is not our failure
            let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
            for note in &out.notes {
                eprintln!("{note}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
