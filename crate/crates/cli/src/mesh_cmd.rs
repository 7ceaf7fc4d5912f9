use std::fmt::Write as _;

use fvpg::mesh::{check_angles, refine_uniform, write_mesh, Triangulation};
use fvpg::scheme::{edge_coefficients, vf4_transmissivity_check};
use fvpg::Error;
use serde_json::json;

use crate::args::{CheckArgs, Format, GenArgs, InfoArgs, RefineArgs};
use crate::failure::{Code, Failure};
use crate::output::{emit, load, read_mesh_file};

/// Relative VF4 discrepancy accepted by `mesh check`.
const VF4_TOL: f64 = 1e-10;

pub fn gen(a: GenArgs) -> Result<(), Failure> {
    let level = a
        .levels
        .single()
        .ok_or_else(|| Failure::input("mesh gen takes a single level"))?;
    let mesh: Triangulation<f64> = a.domain.generate(level);
    emit(a.out.as_deref(), &write_mesh(&mesh))
}

pub fn refine(a: RefineArgs) -> Result<(), Failure> {
    let times = a
        .levels
        .single()
        .ok_or_else(|| Failure::input("mesh refine takes a single refinement count"))?;
    let mut mesh = read_mesh_file(&a.mesh)?;
    for _ in 0..times {
        mesh = refine_uniform(&mesh);
    }
    emit(a.out.as_deref(), &write_mesh(&mesh))
}

pub fn info(a: InfoArgs) -> Result<(), Failure> {
    let (name, mesh) = load(&a.source, a.levels)?;
    let angles = check_angles(&mesh, 0.0, std::f64::consts::FRAC_PI_2);
    let text = match a.format {
        Format::Json => {
            let v = json!({
                "mesh": name,
                "vertices": mesh.n_vertices(),
                "triangles": mesh.n_triangles(),
                "edges": mesh.n_edges(),
                "boundary_edges": mesh.n_boundary_edges(),
                "h": mesh.mesh_size(),
                "area": mesh.total_area(),
                "min_angle_deg": angles.min.to_degrees(),
                "max_angle_deg": angles.max.to_degrees(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json serializes"))
        }
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "mesh,{name}");
            let _ = writeln!(s, "vertices,{}", mesh.n_vertices());
            let _ = writeln!(s, "triangles,{}", mesh.n_triangles());
            let _ = writeln!(s, "edges,{}", mesh.n_edges());
            let _ = writeln!(s, "boundary_edges,{}", mesh.n_boundary_edges());
            let _ = writeln!(s, "h,{:.16e}", mesh.mesh_size());
            let _ = writeln!(s, "area,{:.16e}", mesh.total_area());
            let _ = writeln!(s, "min_angle_deg,{:.16e}", angles.min.to_degrees());
            let _ = writeln!(s, "max_angle_deg,{:.16e}", angles.max.to_degrees());
            s
        }
    };
    emit(None, &text)
}

pub fn check(a: CheckArgs) -> Result<(), Failure> {
    let (name, mesh) = load(&a.source, a.levels)?;
    let angles = check_angles(&mesh, a.min_angle.to_radians(), a.max_angle.to_radians());
    let mut ok = true;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "mesh: {name} ({} triangles, {} edges)",
        mesh.n_triangles(),
        mesh.n_edges()
    );
    let _ = writeln!(
        out,
        "angles: min {:.6} deg, max {:.6} deg, bounds [{}, {}] deg: {}",
        angles.min.to_degrees(),
        angles.max.to_degrees(),
        a.min_angle,
        a.max_angle,
        verdict(angles.within_bounds)
    );
    ok &= angles.within_bounds;
    let _ = writeln!(out, "acute: {}", if angles.acute { "yes" } else { "no" });
    ok &= angles.acute;

    match edge_coefficients(&mesh) {
        Ok(c) => {
            let _ = writeln!(out, "min c_a: {:.16e}", c.min());
        }
        Err(Error::NonPositiveCoefficient { edge, s, n, value, .. }) => {
            ok = false;
            let _ = writeln!(out, "min c_a: {value:.16e} on degenerate edge {edge} ({s}, {n})");
        }
        Err(e) => return Err(Failure::solver(e)),
    }

    match vf4_transmissivity_check(&mesh) {
        Ok(r) => {
            let pass = r.max_relative_discrepancy <= VF4_TOL;
            ok &= pass;
            let _ = writeln!(
                out,
                "vf4 admissible: {} (max discrepancy {:.3e} on edge {})",
                if pass { "yes" } else { "no" },
                r.max_relative_discrepancy,
                r.worst_edge
            );
        }
        Err(e) => {
            ok = false;
            let _ = writeln!(out, "vf4 admissible: no ({e})");
        }
    }
    let _ = writeln!(out, "result: {}", verdict(ok));
    emit(None, &out)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::new(Code::Check, ""))
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}
