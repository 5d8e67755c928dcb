use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = densitylab::cli::Cli::parse();
    match densitylab::cli::run(&cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
