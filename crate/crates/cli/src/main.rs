use std::process::ExitCode;

use clap::Parser;
use radmom_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(&cli, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("radmom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
