//! Symmetric quadrature rules on triangles and Gauss rules on segments.

use crate::geometry::Vec2;
use crate::mesh::Triangulation;
use crate::scalar::Real;

/// A rule on the reference triangle in barycentric coordinates, with weights
/// normalized to sum to one. Integrals over a cell are `|K| * sum w f(x)`.
#[derive(Clone, Debug)]
pub struct TriangleQuadrature<T> {
    pub points: Vec<[T; 3]>,
    pub weights: Vec<T>,
    pub degree: usize,
}

fn orbit3<T: Real>(a: f64) -> [[T; 3]; 3] {
    let (a, b) = (T::lit(a), T::lit(1.0 - 2.0 * a));
    [[b, a, a], [a, b, a], [a, a, b]]
}

impl<T: Real> TriangleQuadrature<T> {
    /// One point, degree 1.
    pub fn centroid() -> Self {
        let t = T::lit(1.0 / 3.0);
        Self {
            points: vec![[t, t, t]],
            weights: vec![T::one()],
            degree: 1,
        }
    }

    /// Edge midpoints, degree 2.
    pub fn edge_midpoints() -> Self {
        let (h, o) = (T::lit(0.5), T::zero());
        let w = T::lit(1.0 / 3.0);
        Self {
            points: vec![[o, h, h], [h, o, h], [h, h, o]],
            weights: vec![w; 3],
            degree: 2,
        }
    }

    /// Six points on two symmetric orbits, degree 4.
    #[allow(clippy::excessive_precision)]
    pub fn degree4() -> Self {
        const A1: f64 = 0.445_948_490_915_964_886_318_329_253_883;
        const W1: f64 = 0.223_381_589_678_011_465_695_007_008_433;
        const A2: f64 = 0.091_576_213_509_770_743_459_571_463_402;
        const W2: f64 = 0.109_951_743_655_321_867_638_326_324_900;
        let mut points = Vec::with_capacity(6);
        points.extend(orbit3::<T>(A1));
        points.extend(orbit3::<T>(A2));
        let weights = [W1, W1, W1, W2, W2, W2].map(T::lit).to_vec();
        Self {
            points,
            weights,
            degree: 4,
        }
    }

    /// Physical quadrature points of cell `k`, paired with weights.
    pub fn cell_points<'a>(&'a self, mesh: &Triangulation<T>, k: usize) -> impl Iterator<Item = (Vec2<T>, T)> + 'a {
        let [a, b, c] = mesh.corners(k);
        self.points
            .iter()
            .zip(&self.weights)
            .map(move |(l, &w)| (a * l[0] + b * l[1] + c * l[2], w))
    }

    /// `int_K f dx`.
    pub fn integrate<F: Fn(Vec2<T>) -> T>(&self, mesh: &Triangulation<T>, k: usize, f: F) -> T {
        let s: T = self.cell_points(mesh, k).map(|(x, w)| w * f(x)).sum();
        s * mesh.cells()[k].area
    }
}

/// Two-point Gauss-Legendre on `[0, 1]`: `(parameter, weight)` pairs, exact
/// to degree 3.
pub fn gauss2_segment<T: Real>() -> [(T, T); 2] {
    let d = T::lit(0.5 / 3f64.sqrt());
    let h = T::lit(0.5);
    [(h - d, h), (h + d, h)]
}

/// `int_{[p, q]} f ds` with two-point Gauss.
pub fn integrate_segment<T: Real, F: Fn(Vec2<T>) -> T>(p: Vec2<T>, q: Vec2<T>, f: F) -> T {
    let len = (q - p).norm();
    gauss2_segment::<T>()
        .iter()
        .map(|&(s, w)| w * f(p + (q - p) * s))
        .sum::<T>()
        * len
}
