//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.
//!
//! `cargo test -p fvpg-core --test acceptance`

mod common;

use std::time::{Duration, Instant};

use fvpg::analysis::{
    bubble_on_equilateral, convergence_study, weighted_bubble_on_equilateral, ConvergenceReport, LevelRecord, RATE_MAX,
    RATE_MIN, STABILITY_FACTOR,
};
use fvpg::geometry::Vec2;
use fvpg::mesh::{gen_equilateral, gen_square_diagonal, Coboundary, Triangulation};
use fvpg::scheme::{
    assemble_system, discrete_gradient, discrete_green_check, edge_coefficients, load_vector, project_rhs,
    solve_poisson, vf4_transmissivity_check,
};
use fvpg::solver::{cg_solve, CgOptions};
use fvpg::spaces::{P0Field, RTField};
use fvpg::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SOLVER_TOL: f64 = 1e-10;
const STUDY_LEVELS: (usize, usize) = (2, 6);
const STUDY_TIME_LIMIT: Duration = Duration::from_secs(10);
const COEFFICIENT_TOL: f64 = 1e-12;
const VF4_TOL: f64 = 1e-10;
const GREEN_TOL: f64 = 1e-12;
const GREEN_TRIALS: usize = 100;
const AFFINE_TOL: f64 = 1e-12;
const AFFINE_TRIALS: usize = 20;
const STRUCTURAL_FACTOR: f64 = 10.0;
const INTERP_RATE_MIN: f64 = 0.9;
const DENSE_TOL: f64 = 1e-10;
const DENSE_MAX_CELLS: usize = 64;

struct Outcome {
    id: &'static str,
    passed: bool,
    detail: String,
}

fn outcome(id: &'static str, passed: bool, detail: String) -> Outcome {
    Outcome { id, passed, detail }
}

fn in_band(v: f64) -> bool {
    (RATE_MIN..=RATE_MAX).contains(&v)
}

struct Studies {
    bubble: ConvergenceReport,
    weighted: ConvergenceReport,
    elapsed: Duration,
}

fn run_studies() -> Studies {
    let opts = CgOptions {
        tol: SOLVER_TOL,
        max_iter: None,
    };
    let t = Instant::now();
    let bubble = convergence_study(&bubble_on_equilateral::<f64>(), STUDY_LEVELS.0, STUDY_LEVELS.1, opts)
        .expect("bubble study runs");
    let elapsed = t.elapsed();
    let weighted = convergence_study(
        &weighted_bubble_on_equilateral::<f64>(),
        STUDY_LEVELS.0,
        STUDY_LEVELS.1,
        opts,
    )
    .expect("weighted bubble study runs");
    Studies {
        bubble,
        weighted,
        elapsed,
    }
}

fn final_rates(r: &ConvergenceReport) -> [f64; 3] {
    let cols: [fn(&LevelRecord) -> f64; 3] = [|r| r.e_u, |r| r.e_p, |r| r.e_div];
    cols.map(|c| r.final_rate(c).unwrap_or(f64::NAN))
}

fn criterion_1(s: &Studies) -> Vec<Outcome> {
    let [ru, rp, rd] = final_rates(&s.bubble);
    let e_div_max = s.bubble.records.iter().map(|r| r.e_div).fold(0.0, f64::max);
    let main = outcome(
        "1  convergence rates (bubble, levels 2->6)",
        in_band(ru) && in_band(rp) && in_band(rd) && s.elapsed <= STUDY_TIME_LIMIT,
        format!(
            "rate(e_u)={ru:.4} rate(e_p)={rp:.4} rate(e_div)={rd:.4} band=[{RATE_MIN},{RATE_MAX}] \
             max e_div={e_div_max:.2e} time={:.2?}",
            s.elapsed
        ),
    );
    let [wu, wp, wd] = final_rates(&s.weighted);
    let supplementary = outcome(
        "1+ convergence rates (weighted-bubble, levels 2->6)",
        in_band(wu) && in_band(wp) && in_band(wd),
        format!("rate(e_u)={wu:.4} rate(e_p)={wp:.4} rate(e_div)={wd:.4}"),
    );
    vec![main, supplementary]
}

fn criterion_2(s: &Studies) -> Outcome {
    let s0 = s.bubble.records[0].stability;
    let ratios: Vec<f64> = s.bubble.records.iter().map(|r| r.stability / s0).collect();
    let passed = ratios
        .iter()
        .all(|&q| (1.0 / STABILITY_FACTOR..=STABILITY_FACTOR).contains(&q));
    outcome(
        "2  stability ratio within 2x of level 2",
        passed,
        format!(
            "level-2 ratio={s0:.6}, relative: {}",
            ratios.iter().map(|q| format!("{q:.4}")).collect::<Vec<_>>().join(" ")
        ),
    )
}

fn criterion_3() -> Outcome {
    let interior = 3f64.powf(-0.5);
    let boundary = interior / 2.0;
    let mut worst: f64 = 0.0;
    for level in 0..=5 {
        let m = gen_equilateral::<f64>(level);
        let c = edge_coefficients(&m).expect("equilateral is admissible");
        for (e, edge) in m.edges().iter().enumerate() {
            let exact = if edge.is_boundary() { boundary } else { interior };
            worst = worst.max((c.values[e] - exact).abs());
        }
    }
    outcome(
        "3  cotangent coefficients on equilateral meshes",
        worst <= COEFFICIENT_TOL,
        format!("max |c_a - exact| = {worst:.2e} (tol {COEFFICIENT_TOL:e}), levels 0-5"),
    )
}

fn criterion_4() -> Outcome {
    let mut meshes: Vec<(String, Triangulation<f64>)> = (1..=5)
        .map(|l| (format!("equilateral L{l}"), gen_equilateral(l)))
        .collect();
    meshes.push(("acute fixture".into(), common::acute_fixture()));
    for seed in 0..3 {
        meshes.push((
            format!("perturbed L4 seed {seed}"),
            common::perturbed_equilateral(4, 0.12, seed),
        ));
    }
    let mut worst = (0.0_f64, String::new());
    let mut failure = None;
    for (name, m) in &meshes {
        match vf4_transmissivity_check(m) {
            Ok(r) if r.max_relative_discrepancy > worst.0 => worst = (r.max_relative_discrepancy, name.clone()),
            Ok(_) => {}
            Err(e) => failure = Some(format!("{name}: {e}")),
        }
    }
    outcome(
        "4  VF4 transmissivity equivalence",
        failure.is_none() && worst.0 <= VF4_TOL,
        failure.unwrap_or_else(|| {
            format!(
                "max discrepancy {:.2e} on {} ({} meshes, tol {VF4_TOL:e})",
                worst.0,
                worst.1,
                meshes.len()
            )
        }),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    let mut trials = 0;
    for level in 1..=4 {
        let m = gen_equilateral::<f64>(level);
        let c = edge_coefficients(&m).unwrap();
        for _ in 0..GREEN_TRIALS {
            let u = P0Field::new((0..m.n_triangles()).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let p = RTField::new((0..m.n_edges()).map(|_| rng.gen_range(-1.0..1.0)).collect());
            worst = worst.max(discrete_green_check(&m, &c, &u, &p).unwrap());
            trials += 1;
        }
    }
    outcome(
        "5  discrete adjointness (u, div q) = -(grad_T u, q)",
        worst <= GREEN_TOL,
        format!("max relative residual {worst:.2e} over {trials} random pairs, levels 1-4"),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut meshes: Vec<Triangulation<f64>> = (1..=4).map(gen_equilateral).collect();
    meshes.push(common::acute_fixture());
    let mut worst: f64 = 0.0;
    for _ in 0..AFFINE_TRIALS {
        let g = Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let c0 = rng.gen_range(-1.0..1.0);
        let affine = |x: Vec2<f64>| c0 + g.dot(x);
        for m in &meshes {
            let coeffs = edge_coefficients(m).unwrap();
            let u = P0Field::new(m.cells().iter().map(|c| affine(c.circumcenter)).collect());
            let p = discrete_gradient(m, &u, &coeffs).unwrap();
            for (e, edge) in m.edges().iter().enumerate() {
                if let Coboundary::Interior(..) = edge.coboundary {
                    let exact = edge.length * g.dot(edge.normal);
                    let scale = edge.length * g.norm();
                    worst = worst.max((p.fluxes[e] - exact).abs() / scale);
                }
            }
        }
    }
    outcome(
        "6  affine flux consistency at circumcenters",
        worst <= AFFINE_TOL,
        format!(
            "max relative flux error {worst:.2e} over {AFFINE_TRIALS} affine fields x {} meshes",
            meshes.len()
        ),
    )
}

fn criterion_7(s: &Studies) -> Outcome {
    let mut defects: Vec<(String, f64)> = s
        .bubble
        .records
        .iter()
        .chain(&s.weighted.records)
        .map(|r| (format!("study L{}", r.level), r.structural_defect))
        .collect();
    let fixture = common::acute_fixture();
    let sol = solve_poisson(&fixture, |x| 1.0 + x.x - x.y * x.y, CgOptions::default()).unwrap();
    defects.push(("acute fixture".into(), sol.structural_defect));
    let worst = defects
        .iter()
        .cloned()
        .fold((String::new(), 0.0), |a, b| if b.1 > a.1 { b } else { a });
    let limit = STRUCTURAL_FACTOR * SOLVER_TOL;
    outcome(
        "7  structural identity div p_T = -f_T",
        defects.iter().all(|d| d.1 <= limit),
        format!(
            "max ||div p_T + f_T||/||f_T|| = {:.2e} ({}) over {} solves, limit {limit:e}",
            worst.1,
            worst.0,
            defects.len()
        ),
    )
}

fn criterion_8(s: &Studies) -> Outcome {
    let mut lines = Vec::new();
    let mut passed = true;
    for r in [&s.bubble, &s.weighted] {
        let ru = r.final_rate(|x| x.interp_u).unwrap_or(f64::NAN);
        let rp = r.final_rate(|x| x.interp_p).unwrap_or(f64::NAN);
        passed &= ru >= INTERP_RATE_MIN && rp >= INTERP_RATE_MIN;
        lines.push(format!("{}: rate(u-P0 u)={ru:.4} rate(p-RT p)={rp:.4}", r.problem));
    }
    outcome("8  interpolation estimates", passed, lines.join("; "))
}

fn criterion_9() -> Outcome {
    let m = gen_square_diagonal::<f64>(0);
    let diagonal = m
        .edges()
        .iter()
        .position(|e| !e.is_boundary())
        .expect("one interior edge");
    match edge_coefficients(&m) {
        Err(Error::NonPositiveCoefficient { edge, s, n, value, .. }) => outcome(
            "9  degeneracy detection on square diagonal",
            edge == diagonal && [s.min(n), s.max(n)] == [0, 2],
            format!("NonPositiveCoefficient on edge {edge} ({s}, {n}), c_a = {value:e}"),
        ),
        other => outcome(
            "9  degeneracy detection on square diagonal",
            false,
            format!("got {other:?}"),
        ),
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut meshes: Vec<(String, Triangulation<f64>)> = (0..=3)
        .map(|l| (format!("equilateral L{l}"), gen_equilateral(l)))
        .collect();
    meshes.push(("acute fixture".into(), common::acute_fixture()));
    meshes.push(("perturbed L2".into(), common::perturbed_equilateral(2, 0.12, 99)));
    let opts = CgOptions {
        tol: 1e-13,
        max_iter: None,
    };
    let mut worst: f64 = 0.0;
    let mut solves = 0;
    for (_, m) in meshes.iter().filter(|(_, m)| m.n_triangles() <= DENSE_MAX_CELLS) {
        let c = edge_coefficients(m).unwrap();
        let sys = assemble_system(m, &c).unwrap();
        let mut rhs = vec![load_vector(m, &project_rhs(m, |x| 1.0 + x.x * x.y)).unwrap()];
        rhs.extend((0..3).map(|_| (0..m.n_triangles()).map(|_| rng.gen_range(-1.0..1.0)).collect()));
        for b in rhs {
            let x = cg_solve(&sys.matrix, &b, opts).unwrap().x;
            let oracle = common::dense_solve(sys.matrix.to_dense(), b);
            worst = worst.max(common::rel_l2(&x, &oracle));
            solves += 1;
        }
    }
    outcome(
        "10 CG against dense elimination",
        worst <= DENSE_TOL,
        format!("max relative difference {worst:.2e} over {solves} solves on meshes with <= {DENSE_MAX_CELLS} cells"),
    )
}

fn main() {
    let studies = run_studies();
    let mut outcomes = criterion_1(&studies);
    outcomes.extend([
        criterion_2(&studies),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(&studies),
        criterion_8(&studies),
        criterion_9(),
        criterion_10(),
    ]);

    println!("\nacceptance criteria");
    for o in &outcomes {
        println!("[{}] {:<52} {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("\n{} passed, {failed} failed\n", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
