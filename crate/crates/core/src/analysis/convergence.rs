use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::{error_norms, interpolation_errors, l2_norm_of, ManufacturedProblem};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::scheme::solve_poisson;
use crate::solver::CgOptions;

/// Largest refinement level of a study (4^8 triangles).
pub const MAX_LEVEL: usize = 8;
/// Accepted band for observed first-order rates.
pub const RATE_MIN: f64 = 0.9;
pub const RATE_MAX: f64 = 1.5;
/// The stability ratio must stay within this factor of its coarsest value.
pub const STABILITY_FACTOR: f64 = 2.0;
/// Fewer levels than this leave the gates unevaluated.
pub const MIN_GATED_LEVELS: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct LevelRecord {
    pub level: usize,
    pub n_cells: usize,
    pub h: f64,
    pub e_u: f64,
    pub e_p: f64,
    pub e_div: f64,
    pub e_div_direct: f64,
    /// `||u - Π₀u||_0`
    pub interp_u: f64,
    /// `||∇u - Π_RT ∇u||_0`
    pub interp_p: f64,
    /// `(||u_T||_0 + ||p_T||_H(div)) / ||f||_0`
    pub stability: f64,
    pub iterations: usize,
    pub residual: f64,
    pub structural_defect: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub problem: String,
    pub records: Vec<LevelRecord>,
}

/// `log2(coarse / fine)`.
#[inline]
pub fn observed_rate(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}

fn to_f64<T: Real>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Solves `problem` on its domain refined `level_min..=level_max` times.
pub fn convergence_study<T: Real>(
    problem: &ManufacturedProblem<T>,
    level_min: usize,
    level_max: usize,
    opts: CgOptions,
) -> Result<ConvergenceReport> {
    if level_min > level_max || level_max > MAX_LEVEL {
        return Err(Error::InvalidLevels {
            min: level_min,
            max: level_max,
            limit: MAX_LEVEL,
        });
    }
    let mut mesh = problem.domain.generate::<T>(level_min);
    let mut records = Vec::with_capacity(level_max - level_min + 1);
    for level in level_min..=level_max {
        if level > level_min {
            mesh = crate::mesh::refine_uniform(&mesh);
        }
        let sol = solve_poisson(&mesh, problem.f, opts)?;
        let errors = error_norms(&mesh, &sol, problem)?;
        let (interp_u, interp_p) = interpolation_errors(&mesh, problem);
        let f_norm = l2_norm_of(&mesh, problem.f);
        let size = sol.u.l2_norm(&mesh) + sol.p.hdiv_norm(&mesh)?;
        let stability = if f_norm.is_zero() { T::zero() } else { size / f_norm };

        records.push(LevelRecord {
            level,
            n_cells: mesh.n_triangles(),
            h: to_f64(mesh.mesh_size()),
            e_u: to_f64(errors.e_u),
            e_p: to_f64(errors.e_p),
            e_div: to_f64(errors.e_div),
            e_div_direct: to_f64(errors.e_div_direct),
            interp_u: to_f64(interp_u),
            interp_p: to_f64(interp_p),
            stability: to_f64(stability),
            iterations: sol.iterations,
            residual: sol.residual,
            structural_defect: sol.structural_defect,
        });
    }
    Ok(ConvergenceReport {
        problem: problem.name.to_string(),
        records,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GateCheck {
    pub name: String,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub passed: bool,
}

impl GateCheck {
    fn new(name: impl Into<String>, value: f64, lo: f64, hi: f64) -> Self {
        Self {
            name: name.into(),
            value,
            lo,
            hi,
            // NaN fails
            passed: lo <= value && value <= hi,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GateReport {
    /// Fewer than [`MIN_GATED_LEVELS`] levels.
    pub skipped: bool,
    pub checks: Vec<GateCheck>,
}

impl GateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Column = fn(&LevelRecord) -> f64;

const RATE_COLUMNS: [(&str, Column); 3] = [("rate_u", |r| r.e_u), ("rate_p", |r| r.e_p), ("rate_div", |r| r.e_div)];

impl ConvergenceReport {
    /// Rates between consecutive levels; `None` for the first level.
    pub fn rates(&self, column: impl Fn(&LevelRecord) -> f64) -> Vec<Option<f64>> {
        std::iter::once(None)
            .chain(
                self.records
                    .windows(2)
                    .map(|w| Some(observed_rate(column(&w[0]), column(&w[1])))),
            )
            .take(self.records.len())
            .collect()
    }

    /// Rate between the last two levels.
    pub fn final_rate(&self, column: impl Fn(&LevelRecord) -> f64) -> Option<f64> {
        self.rates(column).last().copied().flatten()
    }

    /// Final-pair rates of `e_u`, `e_p`, `e_div` in `[RATE_MIN, RATE_MAX]`
    /// and every stability ratio within `STABILITY_FACTOR` of the first.
    pub fn gates(&self) -> GateReport {
        if self.records.len() < MIN_GATED_LEVELS {
            return GateReport {
                skipped: true,
                checks: Vec::new(),
            };
        }
        let mut checks: Vec<GateCheck> = RATE_COLUMNS
            .iter()
            .map(|&(name, col)| GateCheck::new(name, self.final_rate(col).unwrap_or(f64::NAN), RATE_MIN, RATE_MAX))
            .collect();
        let s0 = self.records[0].stability;
        for r in &self.records[1..] {
            checks.push(GateCheck::new(
                format!(
                    "stability[level {}]/stability[level {}]",
                    r.level, self.records[0].level
                ),
                r.stability / s0,
                1.0 / STABILITY_FACTOR,
                STABILITY_FACTOR,
            ));
        }
        GateReport { skipped: false, checks }
    }

    /// Columns `level,h,e_u,rate_u,e_p,rate_p,e_div,rate_div,stability,iters`,
    /// 17 significant digits, empty rate on the first row.
    pub fn to_csv(&self) -> String {
        let rates: Vec<Vec<Option<f64>>> = RATE_COLUMNS.iter().map(|&(_, c)| self.rates(c)).collect();
        let mut out = String::from("level,h,e_u,rate_u,e_p,rate_p,e_div,rate_div,stability,iters\n");
        let fmt_rate = |r: Option<f64>| r.map(|v| format!("{v:.16e}")).unwrap_or_default();
        for (i, r) in self.records.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{:.16e},{:.16e},{},{:.16e},{},{:.16e},{},{:.16e},{}",
                r.level,
                r.h,
                r.e_u,
                fmt_rate(rates[0][i]),
                r.e_p,
                fmt_rate(rates[1][i]),
                r.e_div,
                fmt_rate(rates[2][i]),
                r.stability,
                r.iterations
            );
        }
        out
    }

    /// Column-oriented JSON object with the CSV keys; missing or non-finite
    /// values become `null`.
    pub fn to_json(&self) -> Value {
        let col =
            |f: fn(&LevelRecord) -> f64| -> Value { self.records.iter().map(|r| finite_or_null(Some(f(r)))).collect() };
        let rate = |i: usize| -> Value { self.rates(RATE_COLUMNS[i].1).into_iter().map(finite_or_null).collect() };
        json!({
            "level": self.records.iter().map(|r| r.level).collect::<Vec<_>>(),
            "h": col(|r| r.h),
            "e_u": col(|r| r.e_u),
            "rate_u": rate(0),
            "e_p": col(|r| r.e_p),
            "rate_p": rate(1),
            "e_div": col(|r| r.e_div),
            "rate_div": rate(2),
            "stability": col(|r| r.stability),
            "iters": self.records.iter().map(|r| r.iterations).collect::<Vec<_>>(),
        })
    }
}

fn finite_or_null(v: Option<f64>) -> Value {
    match v {
        Some(x) if x.is_finite() => json!(x),
        _ => Value::Null,
    }
}
