use rayon::prelude::*;

use super::quadrature::{integrate_segment, TriangleQuadrature};
use super::{P0Field, RTField};
use crate::geometry::Vec2;
use crate::mesh::Triangulation;
use crate::scalar::Real;

/// Cell averages `(1/|K|) int_K u dx`, with the degree-4 rule.
pub fn interp_p0<T, F>(mesh: &Triangulation<T>, u: F) -> P0Field<T>
where
    T: Real,
    F: Fn(Vec2<T>) -> T + Sync,
{
    let q = TriangleQuadrature::degree4();
    let values = (0..mesh.n_triangles())
        .into_par_iter()
        .map(|k| q.integrate(mesh, k, &u) / mesh.cells()[k].area)
        .collect();
    P0Field::new(values)
}

/// Edge fluxes `int_a p . n_a ds`, with two-point Gauss on each edge.
pub fn interp_rt<T, F>(mesh: &Triangulation<T>, p: F) -> RTField<T>
where
    T: Real,
    F: Fn(Vec2<T>) -> Vec2<T> + Sync,
{
    let fluxes = mesh
        .edges()
        .par_iter()
        .map(|e| {
            let [s, n] = e.endpoints;
            integrate_segment(mesh.vertices()[s], mesh.vertices()[n], |x| p(x).dot(e.normal))
        })
        .collect();
    RTField::new(fluxes)
}
