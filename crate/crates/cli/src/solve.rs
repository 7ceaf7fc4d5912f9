use std::fmt::Write as _;
use std::fs;

use fvpg::analysis::{error_norms, problem_by_name, ManufacturedProblem, KNOWN_PROBLEMS};
use fvpg::scheme::solve_poisson;
use fvpg::solver::CgOptions;
use serde_json::json;

use crate::args::SolveArgs;
use crate::failure::Failure;
use crate::output::{load, sci, write_file};

pub fn problem(name: &str) -> Result<ManufacturedProblem<f64>, Failure> {
    problem_by_name(name).ok_or_else(|| {
        Failure::input(format!(
            "unknown problem {name:?}; known problems: {}",
            KNOWN_PROBLEMS.join(", ")
        ))
    })
}

pub fn options(tol: f64) -> Result<CgOptions, Failure> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Failure::input(format!("--tol must be positive, got {tol}")));
    }
    Ok(CgOptions { tol, max_iter: None })
}

pub fn run(a: SolveArgs) -> Result<(), Failure> {
    let pb = problem(&a.problem)?;
    let opts = options(a.tol)?;
    let (name, mesh) = load(&a.source, a.levels)?;
    let sol = solve_poisson(&mesh, pb.f, opts).map_err(Failure::solver)?;
    let errors = error_norms(&mesh, &sol, &pb).map_err(Failure::solver)?;

    fs::create_dir_all(&a.out).map_err(|e| Failure::io(&a.out, e))?;

    let mut cells = String::from("cell_id,u\n");
    for (k, u) in sol.u.values.iter().enumerate() {
        let _ = writeln!(cells, "{k},{}", sci(*u));
    }
    let mut edges = String::from("edge_id,flux\n");
    for (e, p) in sol.p.fluxes.iter().enumerate() {
        let _ = writeln!(edges, "{e},{}", sci(*p));
    }
    let summary = json!({
        "mesh": name,
        "problem": pb.name,
        "triangles": mesh.n_triangles(),
        "edges": mesh.n_edges(),
        "h": mesh.mesh_size(),
        "tol": a.tol,
        "iterations": sol.iterations,
        "residual": sol.residual,
        "structural_defect": sol.structural_defect,
        "errors": errors,
    });

    write_file(&a.out.join("cells.csv"), &cells)?;
    write_file(&a.out.join("edges.csv"), &edges)?;
    write_file(
        &a.out.join("summary.json"),
        &format!("{}\n", serde_json::to_string_pretty(&summary).expect("json serializes")),
    )
}
