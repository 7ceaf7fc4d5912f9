use serde::Serialize;

use super::Triangulation;
use crate::scalar::Real;

/// Extreme interior angles of a mesh, tested against `[lo, hi]`.
#[derive(Clone, Debug, Serialize)]
pub struct AngleReport<T> {
    pub min: T,
    pub max: T,
    pub lo: T,
    pub hi: T,
    /// `lo <= min` and `max <= hi`.
    pub within_bounds: bool,
    /// Every angle strictly below `pi/2`.
    pub acute: bool,
}

pub fn check_angles<T: Real>(mesh: &Triangulation<T>, lo: T, hi: T) -> AngleReport<T> {
    let (min, max) = mesh
        .cells()
        .iter()
        .flat_map(|c| c.angles)
        .fold((T::infinity(), T::neg_infinity()), |(a, b), t| (a.min(t), b.max(t)));
    AngleReport {
        min,
        max,
        lo,
        hi,
        within_bounds: lo <= min && max <= hi,
        acute: max < T::FRAC_PI_2(),
    }
}
