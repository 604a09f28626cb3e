//! Command-line front end: argument parsing, file formats, artifact
//! envelopes, and process exit codes (0 ok, 2 bad input, 3 budget
//! exhausted, 4 internal inconsistency).

pub mod artifact;
pub mod commands;
pub mod error;
pub mod formats;

use clap::Parser;

/// Parses and runs one invocation, returning the process exit code.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match commands::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            // clap writes help to stdout and errors to stderr on its own
            let _ = e.print();
            return code;
        }
    };
    match commands::execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
