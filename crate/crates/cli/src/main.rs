use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use trivol_cli::args::Cli;
use trivol_cli::{deliver, run, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let mode = std::env::var("TRIVOL_MODE").ok();
    let out = deliver(&cli, run(&cli, mode.as_deref()));
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
