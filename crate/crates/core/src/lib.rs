//! Poisson solver on conforming triangulations using lowest order
//! Raviart-Thomas fluxes with a local (Petrov-Galerkin) discrete gradient.
//!
//! With a dual basis that is orthogonal to the RT0 basis and supported on the
//! same pair of cells, the mixed problem collapses onto a cell-centred finite
//! volume scheme whose only ingredient is one coefficient per edge,
//! `c_a = (cot θ_{a,K} + cot θ_{a,L}) / 2`. On meshes with acute angles this
//! is the VF4 two-point flux scheme.
//!
//! The numerical code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix it to `f64`.
//!
//! ```
//! use fvpg::{mesh, scheme, solver::CgOptions};
//!
//! let mesh: fvpg::Mesh = mesh::gen_equilateral(3);
//! let sol = scheme::solve_poisson(&mesh, |_| 1.0, CgOptions::default()).unwrap();
//! assert!(sol.u.values.iter().all(|&u| u > 0.0));
//! ```

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod mesh;
pub mod scalar;
pub mod scheme;
pub mod solver;
pub mod spaces;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Point = geometry::Vec2<f64>;
pub type Mesh = mesh::Triangulation<f64>;
pub type Mesh32 = mesh::Triangulation<f32>;
pub type CellField = spaces::P0Field<f64>;
pub type FluxField = spaces::RTField<f64>;
pub type Coefficients = scheme::EdgeCoefficients<f64>;
pub type Solution = scheme::PoissonSolution<f64>;
pub type Problem = analysis::ManufacturedProblem<f64>;
pub type SparseMatrix = solver::CsrMatrix<f64>;
