use super::EdgeCoefficients;
use crate::error::Result;
use crate::mesh::{Coboundary, Triangulation};
use crate::scalar::Real;
use crate::solver::CsrMatrix;
use crate::spaces::P0Field;

/// The cell system `A u = b` and the cell measures that scale `b`.
#[derive(Clone, Debug)]
pub struct FvSystem<T> {
    pub matrix: CsrMatrix<T>,
    pub areas: Vec<T>,
}

/// `A_KK = Σ_{a ⊂ ∂K} 1/c_a`, `A_KL = -1/c_a` for `a = K|L`.
pub fn assemble_system<T: Real>(mesh: &Triangulation<T>, coeffs: &EdgeCoefficients<T>) -> Result<FvSystem<T>> {
    coeffs.validate(mesh)?;
    let mut triplets = Vec::with_capacity(4 * mesh.n_edges());
    for (edge, &c) in mesh.edges().iter().zip(&coeffs.values) {
        let w = c.recip();
        match edge.coboundary {
            Coboundary::Interior(k, l) => {
                triplets.push((k, k, w));
                triplets.push((l, l, w));
                triplets.push((k, l, -w));
                triplets.push((l, k, -w));
            }
            Coboundary::Boundary(k) => triplets.push((k, k, w)),
        }
    }
    Ok(FvSystem {
        matrix: CsrMatrix::from_triplets(mesh.n_triangles(), &triplets)?,
        areas: mesh.cells().iter().map(|c| c.area).collect(),
    })
}

/// `b_K = |K| f_K`.
pub fn load_vector<T: Real>(mesh: &Triangulation<T>, f: &P0Field<T>) -> Result<Vec<T>> {
    f.check(mesh)?;
    Ok(f.values.iter().zip(mesh.cells()).map(|(&v, c)| v * c.area).collect())
}
