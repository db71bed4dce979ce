use std::process::ExitCode;

use clap::Parser;
use wlim_cli::commands::{run, Cli};
use wlim_cli::doc::to_json;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", to_json(&outcome.report));
            ExitCode::from(if outcome.found { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(wlim_cli::error_code(&e) as u8)
        }
    }
}
