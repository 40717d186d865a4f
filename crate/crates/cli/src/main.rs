use clap::error::ErrorKind;
use clap::Parser;

use smartmap_cli::config::{Cli, RunConfig};
use smartmap_cli::execute::{execute, EXIT_INPUT_ERROR, EXIT_POSITIVE};

fn main() {
    // Every path must exit with 0..=3; clap's default usage-error code (2)
    // would collide with the "unknown" verdict.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{err}");
            std::process::exit(EXIT_POSITIVE);
        }
        Err(err) => {
            eprint!("{err}");
            std::process::exit(EXIT_INPUT_ERROR);
        }
    };
    let cfg = match RunConfig::from_cli(cli) {
        Ok(cfg) => cfg,
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(EXIT_INPUT_ERROR);
        }
    };
    std::process::exit(execute(&cfg));
}
