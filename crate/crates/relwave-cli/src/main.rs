//! Command-line front end. Exit codes: 0 success, 1 contract failure
//! (outputs written but invariants violated), 2 usage or IO error.

mod commands;
mod manifest;
mod numfmt;

use clap::Parser;

use commands::{Cli, Outcome};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Clap exits 2 on usage errors and 0 for --help/--version.
        Err(err) => err.exit(),
    };
    match commands::dispatch(cli) {
        Ok(Outcome::Pass) => {}
        Ok(Outcome::ContractFailure(message)) => {
            eprintln!("contract failure: {message}");
            std::process::exit(1);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
