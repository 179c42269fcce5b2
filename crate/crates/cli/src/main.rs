mod args;
mod commands;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;
use fpga_repair::RepairError;

use args::{Cli, Command, RepairCommand};

/// Bad invocation or unusable input.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub enum Outcome {
    Success,
    Infeasible,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_CAPACITY: u8 = 4;

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<RepairError>() {
        Some(RepairError::Capacity { .. }) => EXIT_CAPACITY,
        Some(RepairError::Parse { .. } | RepairError::InvalidArgument(_)) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Repair(RepairCommand::Lines(a)) => commands::repair_lines(a),
        Command::Repair(RepairCommand::Tiles(a)) => commands::repair_tiles(a),
        Command::Experiment(a) => commands::experiment(a),
        Command::Render(a) => commands::render(a),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Infeasible) => ExitCode::from(EXIT_INFEASIBLE),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
