use serde::Serialize;

use super::{assemble_system, edge_coefficients, load_vector, EdgeCoefficients};
use crate::error::Result;
use crate::geometry::Vec2;
use crate::mesh::{Coboundary, Triangulation};
use crate::scalar::Real;
use crate::solver::{cg_solve, CgOptions};
use crate::spaces::{divergence, interp_p0, P0Field, RTField};

/// Discrete gradient of a cell field: `(u_L - u_K)/c_a` on `a = K|L`, and
/// `-u_K/c_a` on boundary edges (zero exterior value).
pub fn discrete_gradient<T: Real>(
    mesh: &Triangulation<T>,
    u: &P0Field<T>,
    coeffs: &EdgeCoefficients<T>,
) -> Result<RTField<T>> {
    u.check(mesh)?;
    coeffs.validate(mesh)?;
    let fluxes = mesh
        .edges()
        .iter()
        .zip(&coeffs.values)
        .map(|(e, &c)| match e.coboundary {
            Coboundary::Interior(k, l) => (u.values[l] - u.values[k]) / c,
            Coboundary::Boundary(k) => -u.values[k] / c,
        })
        .collect();
    Ok(RTField::new(fluxes))
}

/// `f_K = (1/|K|) int_K f dx`.
pub fn project_rhs<T, F>(mesh: &Triangulation<T>, f: F) -> P0Field<T>
where
    T: Real,
    F: Fn(Vec2<T>) -> T + Sync,
{
    interp_p0(mesh, f)
}

#[derive(Clone, Debug, Serialize)]
pub struct PoissonSolution<T> {
    /// Cell values `u_T`.
    pub u: P0Field<T>,
    /// Edge fluxes `p_T = ∇_T u_T`.
    pub p: RTField<T>,
    /// The projected source `f_T`.
    pub f_t: P0Field<T>,
    pub coefficients: EdgeCoefficients<T>,
    pub iterations: usize,
    /// Relative residual `||b - A u|| / ||b||` reported by the solver.
    pub residual: f64,
    /// `||div p_T + f_T||_0 / ||f_T||_0` (zero when `f_T = 0`).
    pub structural_defect: f64,
}

/// Solves the cell system for a given projected source `f_T`.
pub fn solve_with_rhs<T: Real>(
    mesh: &Triangulation<T>,
    coeffs: &EdgeCoefficients<T>,
    f_t: P0Field<T>,
    opts: CgOptions,
) -> Result<PoissonSolution<T>> {
    let system = assemble_system(mesh, coeffs)?;
    let b = load_vector(mesh, &f_t)?;
    let out = cg_solve(&system.matrix, &b, opts)?;
    let u = P0Field::new(out.x);
    let p = discrete_gradient(mesh, &u, coeffs)?;

    let div = divergence(mesh, &p)?;
    let defect = P0Field::new(div.values.iter().zip(&f_t.values).map(|(&d, &f)| d + f).collect());
    let f_norm = f_t.l2_norm(mesh);
    let structural_defect = if f_norm.is_zero() {
        defect.l2_norm(mesh)
    } else {
        defect.l2_norm(mesh) / f_norm
    };

    Ok(PoissonSolution {
        u,
        p,
        f_t,
        coefficients: coeffs.clone(),
        iterations: out.iterations,
        residual: out.residual,
        structural_defect: structural_defect.to_f64().unwrap_or(f64::NAN),
    })
}

/// `-Δu = f` in the domain, `u = 0` on its boundary.
pub fn solve_poisson<T, F>(mesh: &Triangulation<T>, f: F, opts: CgOptions) -> Result<PoissonSolution<T>>
where
    T: Real,
    F: Fn(Vec2<T>) -> T + Sync,
{
    let coeffs = edge_coefficients(mesh)?;
    solve_with_rhs(mesh, &coeffs, project_rhs(mesh, f), opts)
}
