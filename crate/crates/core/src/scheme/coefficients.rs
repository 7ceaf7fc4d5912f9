use serde::Serialize;

use crate::error::{Error, Result};
use crate::mesh::Triangulation;
use crate::scalar::Real;

/// Coefficients at or below this value make the two-point flux blow up.
pub const MIN_COEFFICIENT: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeCoefficients<T> {
    pub values: Vec<T>,
}

#[inline]
fn cot<T: Real>(theta: T) -> T {
    theta.cos() / theta.sin()
}

impl<T: Real> EdgeCoefficients<T> {
    /// Cotangent formula applied to the stored opposite angles, without the
    /// positivity check.
    pub fn from_geometry(mesh: &Triangulation<T>) -> Self {
        let half = T::lit(0.5);
        let values = mesh
            .edges()
            .iter()
            .map(|e| {
                let s = cot(e.opposite_angle_k) + e.opposite_angle_l.map_or(T::zero(), cot);
                s * half
            })
            .collect();
        Self { values }
    }

    /// First edge whose coefficient is at or below [`MIN_COEFFICIENT`].
    pub fn validate(&self, mesh: &Triangulation<T>) -> Result<()> {
        let eps = T::lit(MIN_COEFFICIENT);
        match self.values.iter().position(|&c| c <= eps || c.is_nan()) {
            None => Ok(()),
            Some(e) => {
                let edge = &mesh.edges()[e];
                Err(Error::NonPositiveCoefficient {
                    edge: e,
                    s: edge.endpoints[0],
                    n: edge.endpoints[1],
                    value: self.values[e].to_f64().unwrap_or(f64::NAN),
                    angles: edge
                        .opposite_angles()
                        .iter()
                        .map(|a| a.to_f64().unwrap_or(f64::NAN))
                        .collect(),
                })
            }
        }
    }

    pub fn min(&self) -> T {
        self.values.iter().copied().fold(T::infinity(), T::min)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Validated coefficients; fails with `NonPositiveCoefficient` on the first
/// offending edge.
pub fn edge_coefficients<T: Real>(mesh: &Triangulation<T>) -> Result<EdgeCoefficients<T>> {
    let c = EdgeCoefficients::from_geometry(mesh);
    c.validate(mesh)?;
    Ok(c)
}
