//! Checks of the scheme's structural identities: coincidence with the VF4
//! transmissivities, discrete adjointness of gradient and divergence, and
//! the comparison with a row-sum lumped RT mass matrix.

use std::fmt::Write as _;

use serde::Serialize;

use super::{discrete_gradient, EdgeCoefficients};
use crate::error::{Error, Result};
use crate::mesh::{Coboundary, Triangulation};
use crate::scalar::Real;
use crate::spaces::{divergence, rt_mass_matrix, P0Field, RTField};

/// Below this (relative to `|a|`), circumcenters sit on the edge line.
const DEGENERATE_DISTANCE: f64 = 1e-14;

#[derive(Clone, Debug, Serialize)]
pub struct Vf4Report<T> {
    /// `max_a |τ_a c_a - 1|`, the relative gap between the VF4
    /// transmissivity `τ_a` and `1/c_a`.
    pub max_relative_discrepancy: T,
    pub worst_edge: usize,
}

/// Compares `τ_a = |a| / (d_K + d_L)` (or `|a| / d_K` on the boundary), with
/// `d` the signed distance from a circumcenter to the line of `a`, against
/// `1/c_a` from the cotangent formula.
pub fn vf4_transmissivity_check<T: Real>(mesh: &Triangulation<T>) -> Result<Vf4Report<T>> {
    let coeffs = EdgeCoefficients::from_geometry(mesh);
    let mut worst = (T::zero(), 0);
    for (e, edge) in mesh.edges().iter().enumerate() {
        let d = match edge.coboundary {
            Coboundary::Interior(k, l) => mesh.circumcenter_distance(k, e) + mesh.circumcenter_distance(l, e),
            Coboundary::Boundary(k) => mesh.circumcenter_distance(k, e),
        };
        if d <= T::lit(DEGENERATE_DISTANCE) * edge.length {
            return Err(Error::DegenerateTransmissivity {
                edge: e,
                distance: d.to_f64().unwrap_or(f64::NAN),
            });
        }
        let tau = edge.length / d;
        let rel = (tau * coeffs.values[e] - T::one()).abs();
        if rel > worst.0 || rel.is_nan() {
            worst = (rel, e);
        }
    }
    Ok(Vf4Report {
        max_relative_discrepancy: worst.0,
        worst_edge: worst.1,
    })
}

/// Relative residual of `Σ_K |K| u_K (div p)_K + Σ_a c_a (∇_T u)_a p_a = 0`,
/// the weighted form of `(u, div q)_0 = -(∇_T u, q)_0`. The scale is the sum
/// of the absolute values of all terms.
pub fn discrete_green_check<T: Real>(
    mesh: &Triangulation<T>,
    coeffs: &EdgeCoefficients<T>,
    u: &P0Field<T>,
    p: &RTField<T>,
) -> Result<T> {
    let div = divergence(mesh, p)?;
    let grad = discrete_gradient(mesh, u, coeffs)?;

    let mut sum = T::zero();
    let mut scale = T::zero();
    for ((&uk, &dk), cell) in u.values.iter().zip(&div.values).zip(mesh.cells()) {
        let t = cell.area * uk * dk;
        sum += t;
        scale += t.abs();
    }
    for ((&c, &g), &pa) in coeffs.values.iter().zip(&grad.fluxes).zip(&p.fluxes) {
        let t = c * g * pa;
        sum += t;
        scale += t.abs();
    }
    Ok(if scale.is_zero() { T::zero() } else { sum.abs() / scale })
}

#[derive(Clone, Debug, Serialize)]
pub struct LumpedMassRow<T> {
    pub edge: usize,
    pub coefficient: T,
    pub row_sum: T,
    /// `|row_sum - c_a| / |c_a|`.
    pub relative_difference: T,
}

/// Row sums of the RT mass matrix against `c_a`, edge by edge.
pub fn lumped_mass_check<T: Real>(mesh: &Triangulation<T>) -> Vec<LumpedMassRow<T>> {
    let coeffs = EdgeCoefficients::from_geometry(mesh);
    let sums = rt_mass_matrix(mesh).row_sums();
    sums.into_iter()
        .zip(coeffs.values)
        .enumerate()
        .map(|(edge, (row_sum, coefficient))| LumpedMassRow {
            edge,
            coefficient,
            row_sum,
            relative_difference: (row_sum - coefficient).abs() / coefficient.abs(),
        })
        .collect()
}

pub fn lumped_mass_csv<T: Real>(rows: &[LumpedMassRow<T>]) -> String {
    let mut out = String::from("edge_id,c_a,row_sum,relative_difference\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{:.16e},{:.16e},{:.16e}",
            r.edge, r.coefficient, r.row_sum, r.relative_difference
        );
    }
    out
}
