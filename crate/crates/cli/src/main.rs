use std::process::ExitCode;

use clap::Parser;
use hyperlab_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(e) = out.elapsed {
                eprintln!("elapsed: {e:.3?}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
