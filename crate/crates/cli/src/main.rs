use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use pathdual_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let message: Vec<&str> =
                rendered.lines().take_while(|l| !l.starts_with("Usage:")).map(str::trim).filter(|l| !l.is_empty()).collect();
            let err = CliError::Usage(message.join(" ").trim_start_matches("error: ").to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(err.exit_code());
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(output) => {
            let _ = stdout.write_all(output.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::Mismatch { output, .. } = &err {
                let _ = stdout.write_all(output.as_bytes());
            }
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit_code())
        }
    }
}
