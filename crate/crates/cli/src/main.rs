mod args;
mod commands;
mod config;
mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use crate::args::{Cli, Format};
use crate::commands::Failure;
use crate::config::Config;
use crate::output::{OutputRecord, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.config.as_deref().map(Config::load).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(Status::UsageError.exit_code());
        }
    };
    let format = cli.format.or(config.format).unwrap_or(Format::Text);
    match commands::run(&cli.command, &config) {
        Ok(outcome) => {
            print!("{}", outcome.render(format));
            if format == Format::Csv {
                for note in &outcome.record.notes {
                    eprintln!("{note}");
                }
            }
            ExitCode::from(outcome.status().exit_code())
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            if format == Format::Json {
                let record = OutputRecord {
                    command: commands::name(&cli.command).to_string(),
                    parameters: BTreeMap::new(),
                    status: Status::UsageError,
                    payload: Value::String(message),
                    notes: Vec::new(),
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&record).expect("records serialize")
                );
            }
            ExitCode::from(Status::UsageError.exit_code())
        }
        Err(Failure::Internal(message)) => {
            eprintln!("internal error: {message}");
            ExitCode::from(1)
        }
    }
}
