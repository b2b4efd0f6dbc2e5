use std::fmt::Write;

use qfock::qtwo::*;
use qfock::QuadScalar;
use serde::Serialize;

use crate::{Outcome, UsageError};

const TOLERANCE: f64 = 1e-10;

#[derive(clap::Args)]
pub struct Args {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 6)]
    max_p: u64,
}

#[derive(Serialize)]
struct Row {
    k: u32,
    vv: QuadScalar,
    ww: Option<QuadScalar>,
    vw: Option<QuadScalar>,
    phi: Option<OrthoVec>,
    psi: Option<OrthoVec>,
}

#[derive(Serialize)]
struct Residuals {
    orthonormality: f64,
    action_formulas: f64,
    matrix_tables: f64,
    adjointness: f64,
}

#[derive(Serialize)]
pub struct Report {
    p: u64,
    dim: usize,
    decomposition: Vec<(i64, i64)>,
    rows: Vec<Row>,
    primitive: String,
    primitive_killed: bool,
    primitive_solution_counts: Vec<(u32, usize)>,
    residuals: Residuals,
    tolerance: f64,
    tables: Vec<MatrixTable>,
}

pub fn run(a: &Args) -> Result<Report, UsageError> {
    let p = a.p;
    if p == 0 || p > a.max_p {
        return Err(UsageError(format!("--p must lie in 1..={} (raise --max-p to go further)", a.max_p)));
    }
    let basis = q2_ortho_basis(p);
    let find = |kind: OrthoKind, k: u32| basis.iter().find(|o| o.kind == kind && o.k == k).copied();
    let rows = (0..=p as u32)
        .map(|k| Row {
            k,
            vv: q2_inner(Q2Label::V(k), Q2Label::V(k), p),
            ww: (k > 0).then(|| q2_inner(Q2Label::W(k), Q2Label::W(k), p)),
            vw: (k > 0).then(|| q2_inner(Q2Label::V(k), Q2Label::W(k), p)),
            phi: find(OrthoKind::Phi, k),
            psi: find(OrthoKind::Psi, k),
        })
        .collect();
    let primitive = q2_primitive(p);
    let tables: Vec<MatrixTable> = Q2Op::ALL.iter().map(|&op| q2_matrix_elements(op, p)).collect();
    let matrix_tables = tables
        .iter()
        .map(|t| table_distance(t, &formula_table(t.op, p)))
        .fold(0.0, f64::max);
    Ok(Report {
        p,
        dim: basis.len(),
        decomposition: q2_dispin(p),
        rows,
        primitive_killed: q2_act(Q2Op::BMinus, &primitive).is_zero() && q2_act(Q2Op::FMinus, &primitive).is_zero(),
        primitive: primitive.to_string(),
        primitive_solution_counts: q2_primitive_solutions(p, p as u32).into_iter().map(|(k, s)| (k, s.len())).collect(),
        residuals: Residuals {
            orthonormality: ortho_residual(p),
            action_formulas: formula_residual(p),
            matrix_tables,
            adjointness: adjoint_residual(p),
        },
        tolerance: TOLERANCE,
        tables,
    })
}

impl Report {
    fn unique_primitive(&self) -> bool {
        self.primitive_solution_counts.iter().all(|&(k, c)| c == usize::from(k as u64 == self.p))
    }
}

fn coeffs(o: &Option<OrthoVec>) -> String {
    match o {
        Some(o) => format!("{:.12} v + {:.12} w", o.coeff_v, o.coeff_w),
        None => "-".into(),
    }
}

impl Outcome for Report {
    fn passed(&self) -> bool {
        let r = &self.residuals;
        self.primitive_killed
            && self.unique_primitive()
            && [r.orthonormality, r.action_formulas, r.matrix_tables, r.adjointness].iter().all(|&x| x < self.tolerance)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q(2) module V_p, p = {}", self.p);
        let parts: Vec<String> = self.decomposition.iter().map(|(a, b)| format!("({a},{b})")).collect();
        let _ = writeln!(s, "  dim V_p = {}, gl(2) decomposition: {}", self.dim, parts.join(" + "));
        let _ = writeln!(s, "  primitive vector: {} (killed: {})", self.primitive, if self.primitive_killed { "yes" } else { "NO" });
        let _ = writeln!(s, "  unique primitive vector at levels 1..p: {}", if self.unique_primitive() { "yes" } else { "NO" });
        for row in &self.rows {
            let opt = |x: &Option<QuadScalar>| x.as_ref().map_or("-".to_string(), |q| q.to_string());
            let _ = writeln!(s, "  k = {}: <v|v> = {}, <w|w> = {}, <v|w> = {}", row.k, row.vv, opt(&row.ww), opt(&row.vw));
            let _ = writeln!(s, "         phi = {}", coeffs(&row.phi));
            let _ = writeln!(s, "         psi = {}", coeffs(&row.psi));
        }
        let r = &self.residuals;
        let _ = writeln!(s, "  residuals (tolerance {:.0e}):", self.tolerance);
        let _ = writeln!(s, "    orthonormality      {:.3e}", r.orthonormality);
        let _ = writeln!(s, "    action formulas     {:.3e}", r.action_formulas);
        let _ = writeln!(s, "    matrix tables       {:.3e}", r.matrix_tables);
        let _ = writeln!(s, "    adjointness         {:.3e}", r.adjointness);
        let _ = writeln!(s, "{}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
