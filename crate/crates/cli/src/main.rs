mod commands;
mod output;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;

use crate::commands::Cli;
use crate::output::Format;

/// Exit codes.
const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_FAIL: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// An error with a stable code for the JSON error document.
#[derive(Debug)]
pub struct Coded {
    pub code: &'static str,
    pub message: String,
}

impl fmt::Display for Coded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for Coded {}

fn classify(err: &anyhow::Error) -> (u8, &'static str) {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<hyperspectra::Error>() {
            return (if e.is_guard() { EXIT_GUARD } else { EXIT_ERROR }, e.code());
        }
        if let Some(c) = cause.downcast_ref::<Coded>() {
            return (EXIT_ERROR, c.code);
        }
    }
    (EXIT_ERROR, "Error")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match commands::run(cli) {
        Ok((out, failed)) => {
            print!("{}", out.render(format));
            ExitCode::from(if failed { EXIT_FAIL } else { EXIT_OK })
        }
        Err(err) => {
            let (code, name) = classify(&err);
            let message = format!("{err:#}");
            match format {
                Format::Json => {
                    let doc = serde_json::json!({ "error": name, "message": message });
                    eprintln!("{}", serde_json::to_string_pretty(&doc).expect("values serialise"));
                }
                Format::Table => eprintln!("error[{name}]: {message}"),
            }
            ExitCode::from(code)
        }
    }
}
