#![allow(dead_code)]

use fvpg::geometry::Vec2;
use fvpg::mesh::{check_angles, gen_equilateral, read_mesh, Triangulation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ACUTE_FIXTURE: &str = include_str!("../fixtures/acute_perturbed.mesh");

pub fn acute_fixture() -> Triangulation<f64> {
    read_mesh(ACUTE_FIXTURE).expect("fixture parses")
}

/// Gaussian elimination with partial pivoting on a dense copy.
pub fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        a.swap(c, piv);
        b.swap(c, piv);
        let (top, rest) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        let bc = b[c];
        for (row, br) in rest.iter_mut().zip(&mut b[c + 1..]) {
            let f = row[c] / pivot[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= f * y;
            }
            *br -= f * bc;
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| a[r][k] * x[k]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    x
}

pub fn rel_l2(a: &[f64], b: &[f64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    let den: f64 = b.iter().map(|y| y * y).sum::<f64>().sqrt();
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

/// Equilateral mesh with interior vertices moved by up to `amplitude * h`,
/// redrawn until every angle is acute.
pub fn perturbed_equilateral(level: usize, amplitude: f64, seed: u64) -> Triangulation<f64> {
    let base = gen_equilateral::<f64>(level);
    let on_boundary: Vec<bool> = {
        let mut b = vec![false; base.n_vertices()];
        for e in base.edges().iter().filter(|e| e.is_boundary()) {
            b[e.endpoints[0]] = true;
            b[e.endpoints[1]] = true;
        }
        b
    };
    let h = base.mesh_size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let vertices: Vec<Vec2<f64>> = base
            .vertices()
            .iter()
            .zip(&on_boundary)
            .map(|(&v, &b)| {
                if b {
                    v
                } else {
                    v + Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * (amplitude * h)
                }
            })
            .collect();
        if let Ok(m) = Triangulation::build(vertices, base.triangles().to_vec()) {
            if check_angles(&m, 0.0, std::f64::consts::FRAC_PI_2).acute {
                return m;
            }
        }
    }
}
