use std::fmt::Write;

use qfock::algebra::{defining_rep_failures, super_antisymmetry_failures, super_jacobi_failures, verify_q_statistics_with, Fault, RelationViolation};
use serde::Serialize;

use crate::{Outcome, UsageError};

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Largest accepted n.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Corrupt one relation to confirm that violations are reported.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Serialize)]
pub struct Report {
    n: usize,
    antisymmetry_failures: Vec<String>,
    jacobi_checked: bool,
    jacobi_failures: Vec<String>,
    defining_rep_failures: Vec<String>,
    q_statistics_instances: usize,
    violations: Vec<RelationViolation>,
}

pub fn run(a: &Args) -> Result<Report, UsageError> {
    if a.n == 0 || a.n > a.max_n {
        return Err(UsageError(format!("--n must lie in 1..={} (raise --max-n to go further)", a.max_n)));
    }
    let pair = |(x, y): (_, _)| format!("[{x}, {y}]");
    let fault = if a.inject_fault { Fault::FlipCreationTripleSign } else { Fault::None };
    let q = verify_q_statistics_with(a.n, fault);
    let jacobi_checked = a.n <= 2;
    Ok(Report {
        n: a.n,
        antisymmetry_failures: super_antisymmetry_failures(a.n).into_iter().map(pair).collect(),
        jacobi_checked,
        jacobi_failures: if jacobi_checked {
            super_jacobi_failures(a.n).into_iter().map(|(x, y, z)| format!("[{x}, {y}, {z}]")).collect()
        } else {
            Vec::new()
        },
        defining_rep_failures: defining_rep_failures(a.n).into_iter().map(pair).collect(),
        q_statistics_instances: q.instances,
        violations: q.violations,
    })
}

fn verdict(failures: usize) -> String {
    if failures == 0 {
        "ok".into()
    } else {
        format!("{failures} failures")
    }
}

impl Outcome for Report {
    fn passed(&self) -> bool {
        self.antisymmetry_failures.is_empty()
            && self.jacobi_failures.is_empty()
            && self.defining_rep_failures.is_empty()
            && self.violations.is_empty()
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q({}) algebra checks", self.n + 1);
        let _ = writeln!(s, "  super-antisymmetry: {}", verdict(self.antisymmetry_failures.len()));
        if self.jacobi_checked {
            let _ = writeln!(s, "  super Jacobi: {}", verdict(self.jacobi_failures.len()));
        } else {
            let _ = writeln!(s, "  super Jacobi: skipped above n = 2");
        }
        let _ = writeln!(s, "  defining representation: {}", verdict(self.defining_rep_failures.len()));
        let _ = writeln!(s, "  Q-statistics: {} instances, {}", self.q_statistics_instances, verdict(self.violations.len()));
        for f in self.antisymmetry_failures.iter().chain(&self.jacobi_failures).chain(&self.defining_rep_failures).take(1) {
            let _ = writeln!(s, "  first counterexample: {f}");
        }
        if let Some(v) = self.violations.first() {
            let _ = writeln!(
                s,
                "  first violation: {} indices {:?} parities {:?}: lhs {} != rhs {}",
                v.relation, v.indices, v.parities, v.lhs, v.rhs
            );
        }
        let _ = writeln!(s, "{}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
