//! The Raviart-Thomas Petrov-Galerkin discretization of `-Δu = f`, `u = 0`
//! on the boundary, in its finite volume form.
//!
//! Every edge carries one scalar `c_a = (φ_a, φ*_a)_0`, which only depends
//! on the angles opposite the edge:
//!
//! ```text
//! interior a = K|L : c_a = (cot θ_{a,K} + cot θ_{a,L}) / 2
//! boundary a ⊂ ∂K  : c_a =  cot θ_{a,K} / 2
//! ```
//!
//! The discrete gradient of a cell field is local, `(∇_T u)_a = (u_L - u_K)/c_a`
//! (with `u_L = 0` outside the domain), and the mixed problem reduces to the
//! SPD cell system `A u = b` with `A_KK = Σ 1/c_a`, `A_KL = -1/c_a`,
//! `b_K = |K| f_K`. This is the VF4 two-point flux scheme: `1/c_a` equals
//! the transmissivity `|a| / d_KL` between circumcenters.

mod assemble;
mod coefficients;
mod diagnostics;
mod solve;

pub use assemble::{assemble_system, load_vector, FvSystem};
pub use coefficients::{edge_coefficients, EdgeCoefficients, MIN_COEFFICIENT};
pub use diagnostics::{
    discrete_green_check, lumped_mass_check, lumped_mass_csv, vf4_transmissivity_check, LumpedMassRow, Vf4Report,
};
pub use solve::{discrete_gradient, project_rhs, solve_poisson, solve_with_rhs, PoissonSolution};
