//! `fvpg`: mesh generation, Poisson solves and convergence studies for the
//! cotangent finite volume scheme.
//!
//! Exit codes: 0 ok, 1 check failed, 2 input error, 3 solver failure,
//! 4 convergence gate failed.

mod args;
mod convergence;
mod failure;
mod mesh_cmd;
mod output;
mod solve;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, MeshCommand};
use failure::Failure;

fn init_threads() -> Result<(), Failure> {
    let threads = match std::env::var("FVPG_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::input(format!("FVPG_THREADS must be a positive integer, got {v:?}")))?,
        Err(_) => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::input(format!("cannot start worker pool: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    init_threads()?;
    match cli.command {
        Command::Mesh { command } => match command {
            MeshCommand::Gen(a) => mesh_cmd::gen(a),
            MeshCommand::Info(a) => mesh_cmd::info(a),
            MeshCommand::Refine(a) => mesh_cmd::refine(a),
            MeshCommand::Check(a) => mesh_cmd::check(a),
        },
        Command::Solve(a) => solve::run(a),
        Command::Convergence(a) => convergence::run(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code as u8)
        }
    }
}
