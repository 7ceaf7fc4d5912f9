use rayon::prelude::*;
use serde::Serialize;

use super::ManufacturedProblem;
use crate::error::Result;
use crate::geometry::Vec2;
use crate::mesh::Triangulation;
use crate::scalar::Real;
use crate::scheme::PoissonSolution;
use crate::spaces::{divergence, interp_p0, interp_rt, rt_eval, TriangleQuadrature};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ErrorNorms<T> {
    /// `||u - u_T||_0`.
    pub e_u: T,
    /// `||∇u - p_T||_0`.
    pub e_p: T,
    /// `||div(∇u - p_T)||_0`, taken as `||f - f_T||_0`.
    pub e_div: T,
    /// Same quantity from the computed divergence, `||f + div p_T||_0`.
    pub e_div_direct: T,
}

/// `(Σ_K int_K g_K(x) dx)^(1/2)`, summed in cell order.
fn cellwise_norm<T, G>(mesh: &Triangulation<T>, g: G) -> T
where
    T: Real,
    G: Fn(usize, Vec2<T>) -> T + Sync,
{
    let q = TriangleQuadrature::degree4();
    let per_cell: Vec<T> = (0..mesh.n_triangles())
        .into_par_iter()
        .map(|k| q.integrate(mesh, k, |x| g(k, x)))
        .collect();
    per_cell.into_iter().sum::<T>().sqrt()
}

pub fn l2_norm_of<T, F>(mesh: &Triangulation<T>, f: F) -> T
where
    T: Real,
    F: Fn(Vec2<T>) -> T + Sync,
{
    cellwise_norm(mesh, |_, x| {
        let v = f(x);
        v * v
    })
}

pub fn error_norms<T: Real>(
    mesh: &Triangulation<T>,
    sol: &PoissonSolution<T>,
    problem: &ManufacturedProblem<T>,
) -> Result<ErrorNorms<T>> {
    sol.u.check(mesh)?;
    sol.p.check(mesh)?;
    let div = divergence(mesh, &sol.p)?;
    let e_u = cellwise_norm(mesh, |k, x| {
        let d = (problem.u)(x) - sol.u.values[k];
        d * d
    });
    let e_p = cellwise_norm(mesh, |k, x| {
        ((problem.grad_u)(x) - rt_eval(mesh, &sol.p, k, x)).norm_squared()
    });
    let e_div = cellwise_norm(mesh, |k, x| {
        let d = (problem.f)(x) - sol.f_t.values[k];
        d * d
    });
    let e_div_direct = cellwise_norm(mesh, |k, x| {
        let d = (problem.f)(x) + div.values[k];
        d * d
    });
    Ok(ErrorNorms {
        e_u,
        e_p,
        e_div,
        e_div_direct,
    })
}

/// `(||u - Π₀u||_0, ||∇u - Π_RT ∇u||_0)`.
pub fn interpolation_errors<T: Real>(mesh: &Triangulation<T>, problem: &ManufacturedProblem<T>) -> (T, T) {
    let u0 = interp_p0(mesh, problem.u);
    let prt = interp_rt(mesh, problem.grad_u);
    let eu = cellwise_norm(mesh, |k, x| {
        let d = (problem.u)(x) - u0.values[k];
        d * d
    });
    let ep = cellwise_norm(mesh, |k, x| {
        ((problem.grad_u)(x) - rt_eval(mesh, &prt, k, x)).norm_squared()
    });
    (eu, ep)
}
