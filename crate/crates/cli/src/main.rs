use std::io;
use std::process::ExitCode;

use clap::Parser;

use gkdim_cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let stderr = io::stderr().lock();
    ExitCode::from(run(&cli, stdout, stderr))
}
