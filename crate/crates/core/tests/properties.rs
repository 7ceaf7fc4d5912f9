mod common;

use fvpg::geometry::Vec2;
use fvpg::mesh::{gen_equilateral, refine_uniform, Coboundary, Triangulation};
use fvpg::scheme::{discrete_green_check, edge_coefficients, solve_poisson, solve_with_rhs};
use fvpg::solver::CgOptions;
use fvpg::spaces::{divergence, interp_rt, rt_eval, P0Field, RTField};
use proptest::prelude::*;

const TIGHT: CgOptions = CgOptions {
    tol: 1e-13,
    max_iter: None,
};

fn mesh_strategy() -> impl Strategy<Value = Triangulation<f64>> {
    (1usize..=3, any::<u64>(), prop_oneof![Just(0.0), 0.02f64..0.12])
        .prop_map(|(level, seed, amp)| common::perturbed_equilateral(level, amp, seed))
}

fn random_point_in(mesh: &Triangulation<f64>, k: usize, a: f64, b: f64) -> Vec2<f64> {
    let [p, q, r] = mesh.corners(k);
    let (a, b) = if a + b > 1.0 { (1.0 - a, 1.0 - b) } else { (a, b) };
    p + (q - p) * a + (r - p) * b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjointness_holds_for_random_fields(
        mesh in mesh_strategy(),
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = edge_coefficients(&mesh).unwrap();
        let u = P0Field::new((0..mesh.n_triangles()).map(|_| rng.gen_range(-1.0..1.0)).collect());
        let p = RTField::new((0..mesh.n_edges()).map(|_| rng.gen_range(-1.0..1.0)).collect());
        prop_assert!(discrete_green_check(&mesh, &c, &u, &p).unwrap() <= 1e-12);
    }

    #[test]
    fn solution_scales_quadratically_with_domain(mesh in mesh_strategy(), s in 0.1f64..10.0) {
        let scaled = Triangulation::build(
            mesh.vertices().iter().map(|&v| v * s).collect(),
            mesh.triangles().to_vec(),
        ).unwrap();
        let u = solve_poisson(&mesh, |_| 1.0, TIGHT).unwrap().u;
        let us = solve_poisson(&scaled, |_| 1.0, TIGHT).unwrap().u;
        let expected: Vec<f64> = u.values.iter().map(|x| x * s * s).collect();
        prop_assert!(common::rel_l2(&us.values, &expected) <= 1e-9);
    }

    #[test]
    fn nonnegative_source_gives_nonnegative_solution(
        mesh in mesh_strategy(),
        a in 0.0f64..2.0,
        b in 0.0f64..2.0,
    ) {
        let u = solve_poisson(&mesh, |x| a * x.x * x.x + b * (1.0 - x.y), TIGHT).unwrap().u;
        let scale = u.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        prop_assert!(u.values.iter().all(|&v| v >= -1e-10 * scale.max(1e-300)));
    }

    #[test]
    fn boundary_flux_balances_source(mesh in mesh_strategy(), a in -2.0f64..2.0) {
        let sol = solve_poisson(&mesh, |x| 1.0 + a * x.y, TIGHT).unwrap();
        let source: f64 = mesh.cells().iter().zip(&sol.f_t.values).map(|(c, f)| c.area * f).sum();
        let outflow: f64 = mesh
            .edges()
            .iter()
            .zip(&sol.p.fluxes)
            .filter(|(e, _)| e.is_boundary())
            .map(|(_, p)| p)
            .sum();
        prop_assert!((outflow + source).abs() <= 1e-9 * source.abs().max(1.0));
    }

    #[test]
    fn lowest_order_rt_reproduces_constants(
        mesh in mesh_strategy(),
        cx in -3.0f64..3.0,
        cy in -3.0f64..3.0,
        a in 0.0f64..1.0,
        b in 0.0f64..1.0,
    ) {
        let c = Vec2::new(cx, cy);
        let p = interp_rt(&mesh, |_| c);
        let div = divergence(&mesh, &p).unwrap();
        prop_assert!(div.values.iter().all(|d| d.abs() <= 1e-12 * (1.0 + c.norm()) / mesh.mesh_size()));
        for k in 0..mesh.n_triangles() {
            let v = rt_eval(&mesh, &p, k, random_point_in(&mesh, k, a, b));
            prop_assert!((v - c).norm() <= 1e-12 * (1.0 + c.norm()));
        }
    }

    #[test]
    fn edge_signs_are_consistent(mesh in mesh_strategy()) {
        for (k, cell) in mesh.cells().iter().enumerate() {
            let centroid = {
                let [p, q, r] = mesh.corners(k);
                (p + q + r) * (1.0 / 3.0)
            };
            for (&e, &sign) in cell.edges.iter().zip(&cell.edge_signs) {
                let edge = &mesh.edges()[e];
                let mid = mesh.vertices()[edge.endpoints[0]].midpoint(mesh.vertices()[edge.endpoints[1]]);
                let outward = edge.normal * f64::from(sign);
                prop_assert!(outward.dot(mid - centroid) > 0.0);
                let expected = match edge.coboundary {
                    Coboundary::Interior(kk, l) if k == kk => { prop_assert!(l != k); 1 }
                    Coboundary::Interior(_, l) => { prop_assert_eq!(l, k); -1 }
                    Coboundary::Boundary(kk) => { prop_assert_eq!(kk, k); 1 }
                };
                prop_assert_eq!(i32::from(sign), expected);
            }
        }
    }

    #[test]
    fn structural_identity_for_random_sources(mesh in mesh_strategy(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = edge_coefficients(&mesh).unwrap();
        let f = P0Field::new((0..mesh.n_triangles()).map(|_| rng.gen_range(-1.0..1.0)).collect());
        let sol = solve_with_rhs(&mesh, &c, f, CgOptions::default()).unwrap();
        prop_assert!(sol.structural_defect <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn refinement_preserves_mesh_invariants(mesh in mesh_strategy()) {
        let fine = refine_uniform(&mesh);
        let (v, e, t) = (fine.n_vertices() as i64, fine.n_edges() as i64, fine.n_triangles() as i64);
        prop_assert_eq!(v - e + t, 1);
        prop_assert_eq!(fine.n_triangles(), 4 * mesh.n_triangles());
        prop_assert_eq!(fine.n_edges(), 2 * mesh.n_edges() + 3 * mesh.n_triangles());
        prop_assert_eq!(fine.n_boundary_edges(), 2 * mesh.n_boundary_edges());
        prop_assert!((fine.total_area() - mesh.total_area()).abs() <= 1e-13);
        prop_assert!((fine.mesh_size() - mesh.mesh_size() / 2.0).abs() <= 1e-12);
        for (k, cell) in fine.cells().iter().enumerate() {
            prop_assert!(cell.area > 0.0);
            let angle_sum: f64 = cell.angles.iter().sum();
            prop_assert!((angle_sum - std::f64::consts::PI).abs() <= 1e-12);
            for &e in &cell.edges {
                let edge = &fine.edges()[e];
                prop_assert!(edge.coboundary.first() == k || matches!(edge.coboundary, Coboundary::Interior(_, l) if l == k));
            }
        }
        prop_assert!((min_angle(&fine) - min_angle(&mesh)).abs() <= 1e-12);
    }
}

fn min_angle(m: &Triangulation<f64>) -> f64 {
    fvpg::mesh::check_angles(m, 0.0, std::f64::consts::FRAC_PI_2).min
}

#[test]
fn equilateral_family_counts() {
    for level in 0..=5 {
        let m = gen_equilateral::<f64>(level);
        let n = 1usize << level;
        assert_eq!(m.n_triangles(), n * n);
        assert_eq!(m.n_vertices(), (n + 1) * (n + 2) / 2);
        assert_eq!(m.n_boundary_edges(), 3 * n);
    }
}
