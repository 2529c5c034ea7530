//! `tqm` — estimates, propagation, Green's-function tables, scattering
//! chains, and the validation suite, over one deterministic pipeline.

mod args;
mod commands;
mod render;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::render::CliError;

fn main() {
    configure_threads();
    let cli = Cli::parse();
    let status = match run(cli) {
        Ok(()) => 0,
        Err(e) => e.report(),
    };
    std::process::exit(status);
}

/// TQM_DISP_THREADS caps the worker count for parallel sweeps. Output
/// ordering never depends on it.
fn configure_threads() {
    if let Ok(v) = std::env::var("TQM_DISP_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Constants(a) => commands::constants::run(a),
        Command::Estimate(a) => commands::estimate::run(a),
        Command::Propagate(a) => commands::propagate::run(a),
        Command::PhotonGreens(a) => commands::photon::run(a),
        Command::Scatter(a) => commands::scatter::run(a),
        Command::Validate(a) => commands::validate::run(a),
    }
}
