use super::local_basis;
use super::quadrature::TriangleQuadrature;
use crate::mesh::Triangulation;
use crate::scalar::Real;
use crate::solver::CsrMatrix;

/// Gram matrix `M_ab = (phi_a, phi_b)_0` of the global RT0 basis.
///
/// Local blocks are integrated with the edge-midpoint rule, which is exact
/// for the quadratic integrands.
pub fn rt_mass_matrix<T: Real>(mesh: &Triangulation<T>) -> CsrMatrix<T> {
    let q = TriangleQuadrature::edge_midpoints();
    let mut triplets = Vec::with_capacity(9 * mesh.n_triangles());
    for (k, cell) in mesh.cells().iter().enumerate() {
        let pts: Vec<_> = q.cell_points(mesh, k).collect();
        for i in 0..3 {
            for j in 0..3 {
                let local: T = pts
                    .iter()
                    .map(|&(x, w)| w * local_basis(mesh, k, i, x).dot(local_basis(mesh, k, j, x)))
                    .sum::<T>()
                    * cell.area;
                let sign = T::from_i8(cell.edge_signs[i] * cell.edge_signs[j]).unwrap();
                triplets.push((cell.edges[i], cell.edges[j], sign * local));
            }
        }
    }
    CsrMatrix::from_triplets(mesh.n_edges(), &triplets).expect("edge indices in range")
}
