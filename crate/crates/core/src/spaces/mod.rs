//! Piecewise constant (P0) and lowest order Raviart-Thomas (RT0) fields.
//!
//! An RT0 field is stored as one flux per edge, `p_a = int_a p . n_a ds`.
//! On a cell `K` it is expanded in the local basis
//! `phi_{K,i}(x) = (x - W_{K,i}) / (2|K|)`, with coefficients
//! `p_{K,i} = (n_a . n_{K,i}) p_a`. Each `phi_{K,i}` carries unit outward
//! flux through the edge opposite `W_{K,i}`, zero flux through the other two,
//! and has divergence `1/|K|`.

mod basis;
mod interp;
mod mass;
pub mod quadrature;

pub use basis::{divergence, eval_local_basis, local_basis, rt_eval, rt_eval_checked};
pub use interp::{interp_p0, interp_rt};
pub use mass::rt_mass_matrix;
pub use quadrature::TriangleQuadrature;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mesh::Triangulation;
use crate::scalar::Real;

/// One value per triangle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct P0Field<T> {
    pub values: Vec<T>,
}

/// One flux per edge.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RTField<T> {
    pub fluxes: Vec<T>,
}

impl<T: Real> P0Field<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn zeros(mesh: &Triangulation<T>) -> Self {
        Self::new(vec![T::zero(); mesh.n_triangles()])
    }

    pub fn check(&self, mesh: &Triangulation<T>) -> Result<()> {
        check_len(mesh.n_triangles(), self.values.len())
    }

    /// `||u||_0`.
    pub fn l2_norm(&self, mesh: &Triangulation<T>) -> T {
        self.values
            .iter()
            .zip(mesh.cells())
            .map(|(&v, c)| v * v * c.area)
            .sum::<T>()
            .sqrt()
    }
}

impl<T: Real> RTField<T> {
    pub fn new(fluxes: Vec<T>) -> Self {
        Self { fluxes }
    }

    pub fn zeros(mesh: &Triangulation<T>) -> Self {
        Self::new(vec![T::zero(); mesh.n_edges()])
    }

    pub fn check(&self, mesh: &Triangulation<T>) -> Result<()> {
        check_len(mesh.n_edges(), self.fluxes.len())
    }

    /// `p_{K,i}` for the three local edges of cell `k`.
    #[inline]
    pub fn local_coefficients(&self, mesh: &Triangulation<T>, k: usize) -> [T; 3] {
        let c = &mesh.cells()[k];
        [0, 1, 2].map(|i| self.fluxes[c.edges[i]] * T::from_i8(c.edge_signs[i]).unwrap())
    }

    /// `||p||_0`, exact up to rounding (the integrand is quadratic).
    pub fn l2_norm(&self, mesh: &Triangulation<T>) -> T {
        let q = TriangleQuadrature::edge_midpoints();
        (0..mesh.n_triangles())
            .map(|k| q.integrate(mesh, k, |x| rt_eval(mesh, self, k, x).norm_squared()))
            .sum::<T>()
            .sqrt()
    }

    /// `||p||_{H(div)} = (||p||_0^2 + ||div p||_0^2)^(1/2)`.
    pub fn hdiv_norm(&self, mesh: &Triangulation<T>) -> Result<T> {
        let l2 = self.l2_norm(mesh);
        let div = divergence(mesh, self)?.l2_norm(mesh);
        Ok((l2 * l2 + div * div).sqrt())
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
