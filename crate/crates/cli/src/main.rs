use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;
use susypt_cli::args::Cli;
use susypt_cli::{commands, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = commands::run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // output piped into `head` and the like
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("susypt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
