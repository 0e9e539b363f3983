mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use commands::{run, Cli};
use report::{exit_code_for, Report, ReportBody};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().collect();

    match run(&cli.command) {
        Ok(outcome) => {
            let mut body = ReportBody::new(argv, outcome.result, outcome.pass);
            body.inputs = outcome.inputs;
            let pass = body.pass;
            let report = Report { body, wall_clock_ms: start.elapsed().as_millis() };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text + "\n") {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(5);
                    }
                }
                None => println!("{text}"),
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
