use fvpg::analysis::{convergence_study, MIN_GATED_LEVELS};

use crate::args::{ConvergenceArgs, Format};
use crate::failure::{Code, Failure};
use crate::output::emit;
use crate::solve::{options, problem};

pub fn run(a: ConvergenceArgs) -> Result<(), Failure> {
    let pb = problem(&a.problem)?;
    let opts = options(a.tol)?;
    let report = convergence_study(&pb, a.levels.min, a.levels.max, opts).map_err(Failure::solver)?;

    let text = match a.format {
        Format::Csv => report.to_csv(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&report.to_json()).expect("json serializes")
        ),
    };
    emit(a.out.as_deref(), &text)?;

    let gates = report.gates();
    if gates.skipped {
        eprintln!(
            "warning: {} level(s) run, rate gates need at least {MIN_GATED_LEVELS}; gates skipped",
            report.records.len()
        );
        return Ok(());
    }
    for g in &gates.checks {
        eprintln!(
            "{} {} = {:.4} (allowed [{}, {}])",
            if g.passed { "ok  " } else { "FAIL" },
            g.name,
            g.value,
            g.lo,
            g.hi
        );
    }
    if gates.passed() {
        Ok(())
    } else {
        Err(Failure::new(Code::Gate, "convergence gates failed"))
    }
}
