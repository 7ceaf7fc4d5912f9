use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fvpg::analysis::MAX_LEVEL;
use fvpg::mesh::Domain;

#[derive(Parser, Debug)]
#[command(
    name = "fvpg",
    version,
    about = "Cotangent finite volume solver for the Poisson problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate, inspect, refine or check meshes.
    Mesh {
        #[command(subcommand)]
        command: MeshCommand,
    },
    /// Solve -Δu = f with u = 0 on the boundary and write u, p and a summary.
    Solve(SolveArgs),
    /// Run a mesh-refinement study and gate the observed rates.
    Convergence(ConvergenceArgs),
}

#[derive(Subcommand, Debug)]
pub enum MeshCommand {
    /// Write a uniformly refined mesh of a built-in domain.
    Gen(GenArgs),
    /// Print counts and sizes.
    Info(InfoArgs),
    /// Refine a mesh file uniformly.
    Refine(RefineArgs),
    /// Check angles, coefficients and VF4 admissibility.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// `n` or `a..b` (inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Levels {
    pub min: usize,
    pub max: usize,
}

impl Levels {
    pub fn single(self) -> Option<usize> {
        (self.min == self.max).then_some(self.min)
    }
}

impl FromStr for Levels {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid level {t:?}, expected an integer"))
        };
        let (min, max) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if min > max || max > MAX_LEVEL {
            return Err(format!("levels {min}..{max} must satisfy min <= max <= {MAX_LEVEL}"));
        }
        Ok(Self { min, max })
    }
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse::<Domain>().map_err(|e| e.to_string())
}

/// Exactly one of `--mesh` or `--domain`.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct MeshSource {
    /// Mesh file.
    #[arg(long)]
    pub mesh: Option<PathBuf>,
    /// Built-in domain (equilateral, square).
    #[arg(long, value_parser = parse_domain)]
    pub domain: Option<Domain>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_domain)]
    pub domain: Domain,
    /// Number of uniform refinements.
    #[arg(long, default_value = "0")]
    pub levels: Levels,
    /// Output file; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InfoArgs {
    #[command(flatten)]
    pub source: MeshSource,
    /// Refinement level of a generated mesh.
    #[arg(long, default_value = "0")]
    pub levels: Levels,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct RefineArgs {
    #[arg(long)]
    pub mesh: PathBuf,
    /// Number of uniform refinements.
    #[arg(long, default_value = "1")]
    pub levels: Levels,
    /// Output file; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: MeshSource,
    #[arg(long, default_value = "0")]
    pub levels: Levels,
    /// Lower bound on every angle, in degrees.
    #[arg(long, default_value_t = 0.0)]
    pub min_angle: f64,
    /// Upper bound on every angle, in degrees.
    #[arg(long, default_value_t = 90.0)]
    pub max_angle: f64,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: MeshSource,
    #[arg(long, default_value = "0")]
    pub levels: Levels,
    /// Manufactured problem.
    #[arg(long)]
    pub problem: String,
    /// Relative residual tolerance of the linear solver.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Output directory for cells.csv, edges.csv and summary.json.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct ConvergenceArgs {
    /// Manufactured problem.
    #[arg(long)]
    pub problem: String,
    #[arg(long, default_value = "2..6")]
    pub levels: Levels,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Output file; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
