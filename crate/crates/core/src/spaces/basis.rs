use super::{P0Field, RTField};
use crate::error::{Error, Result};
use crate::geometry::Vec2;
use crate::mesh::Triangulation;
use crate::scalar::Real;

const CONTAINMENT_SLACK: f64 = 1e-12;

/// `phi_{K,i}(x) = (x - W_{K,i}) / (2|K|)`, evaluated without a containment
/// check.
#[inline]
pub fn local_basis<T: Real>(mesh: &Triangulation<T>, k: usize, i: usize, x: Vec2<T>) -> Vec2<T> {
    let w = mesh.vertices()[mesh.triangles()[k][i]];
    (x - w) / (T::lit(2.0) * mesh.cells()[k].area)
}

/// Local basis function with support handling: outside `K` it is zero, or
/// `PointOutsideCell` when `strict` is set.
pub fn eval_local_basis<T: Real>(
    mesh: &Triangulation<T>,
    k: usize,
    i: usize,
    x: Vec2<T>,
    strict: bool,
) -> Result<Vec2<T>> {
    assert!(i < 3, "local index out of range");
    outside_check(mesh, k, x, strict).map(|inside| {
        if inside {
            local_basis(mesh, k, i, x)
        } else {
            Vec2::zero()
        }
    })
}

fn outside_check<T: Real>(mesh: &Triangulation<T>, k: usize, x: Vec2<T>, strict: bool) -> Result<bool> {
    let inside = mesh.contains(k, x, T::lit(CONTAINMENT_SLACK));
    if !inside && strict {
        return Err(Error::PointOutsideCell {
            triangle: k,
            x: x.x.to_f64().unwrap_or(f64::NAN),
            y: x.y.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(inside)
}

/// Value of an RT0 field at `x` in cell `k`; no containment check.
#[inline]
pub fn rt_eval<T: Real>(mesh: &Triangulation<T>, p: &RTField<T>, k: usize, x: Vec2<T>) -> Vec2<T> {
    let coeffs = p.local_coefficients(mesh, k);
    let mut v = Vec2::zero();
    for (i, c) in coeffs.into_iter().enumerate() {
        v += local_basis(mesh, k, i, x) * c;
    }
    v
}

/// `rt_eval` honoring the support of cell `k` like [`eval_local_basis`].
pub fn rt_eval_checked<T: Real>(
    mesh: &Triangulation<T>,
    p: &RTField<T>,
    k: usize,
    x: Vec2<T>,
    strict: bool,
) -> Result<Vec2<T>> {
    p.check(mesh)?;
    outside_check(mesh, k, x, strict).map(|inside| if inside { rt_eval(mesh, p, k, x) } else { Vec2::zero() })
}

/// `(div p)_K = (1/|K|) sum_i p_{K,i}`.
pub fn divergence<T: Real>(mesh: &Triangulation<T>, p: &RTField<T>) -> Result<P0Field<T>> {
    p.check(mesh)?;
    Ok(P0Field::new(
        (0..mesh.n_triangles())
            .map(|k| {
                let [a, b, c] = p.local_coefficients(mesh, k);
                (a + b + c) / mesh.cells()[k].area
            })
            .collect(),
    ))
}
