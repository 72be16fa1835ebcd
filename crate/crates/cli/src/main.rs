mod args;
mod commands;
mod input;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Failure classes, mapped to process exit codes.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Engine(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Engine(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Engine(m) => m,
        }
    }
}

impl From<zmult_core::Error> for CliError {
    fn from(e: zmult_core::Error) -> Self {
        if e.is_engine_diagnostic() {
            CliError::Engine(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<zmult_core::ParseError> for CliError {
    fn from(e: zmult_core::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            println!("{}", render::render(&outcome.report, cli.format));
            match outcome.failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("error: {}", e.message());
                    ExitCode::from(e.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
