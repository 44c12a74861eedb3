use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    thetalie::cli::run(thetalie::cli::Cli::parse())
}
