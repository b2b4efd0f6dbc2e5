use std::fmt::Write;

use qfock::fock::{occupations_at_level, Weight};
use qfock::structure::{dim_vp, gl_decomposition, gram, is_positive_definite, mp_basis, mult_bar, singular_vector, surviving_annihilators, vp_mult, weyl_dim};
use qfock::symfun::{at_ones, char_formula, char_from_weights, char_hook_sum};
use qfock::QuadScalar;
use serde::Serialize;

use crate::{Outcome, UsageError};

#[derive(clap::Args)]
pub struct Args {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u64,
    /// Highest level reported (default p+2).
    #[arg(long)]
    level_cap: Option<u32>,
    /// Restrict the per-weight table to one weight, e.g. `1,1,0`.
    #[arg(long)]
    weight: Option<Weight>,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 6)]
    max_p: u64,
}

#[derive(Serialize)]
struct WeightRow {
    weight: Weight,
    level: i64,
    dim_bar: u64,
    dim_vp: u64,
    mp_dim: usize,
    gram_minors: Option<Vec<QuadScalar>>,
    positive_definite: Option<bool>,
}

#[derive(Serialize)]
struct Character {
    from_weights: String,
    formula: String,
    hook_sum: String,
    agree: bool,
    value_at_ones: String,
}

#[derive(Serialize)]
pub struct Report {
    n: usize,
    p: u64,
    level_cap: u32,
    dim_vp: u64,
    dim_by_weights: u64,
    dim_by_weyl: u64,
    decomposition: Vec<Vec<i64>>,
    character: Character,
    singular_vector_killed: bool,
    weights: Vec<WeightRow>,
}

pub fn run(a: &Args) -> Result<Report, UsageError> {
    let (n, p) = (a.n, a.p);
    if n == 0 || n > a.max_n {
        return Err(UsageError(format!("--n must lie in 1..={} (raise --max-n to go further)", a.max_n)));
    }
    if p == 0 || p > a.max_p {
        return Err(UsageError(format!("--p must lie in 1..={} (raise --max-p to go further)", a.max_p)));
    }
    let cap = a.level_cap.unwrap_or(p as u32 + 2);
    if (cap as u64) < p {
        return Err(UsageError(format!("--level-cap {cap} is below p = {p}")));
    }
    let weights: Vec<Weight> = match &a.weight {
        Some(w) => {
            let ok = w.n() == n && w.occupation(p).is_some_and(|_| w.level() <= cap as i64);
            if !ok {
                return Err(UsageError(format!("{w} is not a weight of the module with n = {n}, p = {p} up to level {cap}")));
            }
            vec![w.clone()]
        }
        None => (0..=cap).flat_map(|lvl| occupations_at_level(n, lvl)).map(|m| Weight::from_occupation(&m, p)).collect(),
    };
    let rows = weights
        .into_iter()
        .map(|w| {
            let level = w.level();
            let mp_dim = mp_basis(&w, n, p, cap).expect("weight within cap").len();
            let cert = (level <= p as i64).then(|| is_positive_definite(&gram(&w, n, p).expect("level ≤ p")));
            WeightRow {
                dim_bar: mult_bar(&w, n, p),
                dim_vp: vp_mult(&w, n, p),
                level,
                mp_dim,
                positive_definite: cert.as_ref().map(|c| c.positive_definite),
                gram_minors: cert.map(|c| c.minors),
                weight: w,
            }
        })
        .collect();
    let (from_weights, formula, hook_sum) = (char_from_weights(n, p), char_formula(n, p), char_hook_sum(n, p));
    let decomposition = gl_decomposition(n, p);
    Ok(Report {
        n,
        p,
        level_cap: cap,
        dim_vp: dim_vp(n, p),
        dim_by_weights: (0..=p as u32)
            .flat_map(|lvl| occupations_at_level(n, lvl))
            .map(|m| vp_mult(&Weight::from_occupation(&m, p), n, p))
            .sum(),
        dim_by_weyl: decomposition.iter().map(|l| weyl_dim(l)).sum(),
        decomposition,
        character: Character {
            agree: from_weights == formula && from_weights == hook_sum,
            value_at_ones: at_ones(&from_weights).to_string(),
            from_weights: from_weights.to_string(),
            formula: formula.to_string(),
            hook_sum: hook_sum.to_string(),
        },
        singular_vector_killed: surviving_annihilators(&singular_vector(n, p)).is_empty(),
        weights: rows,
    })
}

fn tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

impl Outcome for Report {
    fn passed(&self) -> bool {
        self.dim_vp == self.dim_by_weights
            && self.dim_vp == self.dim_by_weyl
            && self.character.agree
            && self.singular_vector_killed
            && self.weights.iter().all(|w| w.positive_definite != Some(false))
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "V_p for q({}), p = {}", self.n + 1, self.p);
        let _ = writeln!(s, "  dim V_p = {} (weights: {}, Weyl: {})", self.dim_vp, self.dim_by_weights, self.dim_by_weyl);
        let parts: Vec<String> = self.decomposition.iter().map(|l| tuple(l)).collect();
        let _ = writeln!(s, "  gl({}) decomposition: {}", self.n + 1, parts.join(" + "));
        let _ = writeln!(s, "  character: {}", self.character.from_weights);
        let _ = writeln!(
            s,
            "  character paths agree: {} (value at ones {})",
            if self.character.agree { "yes" } else { "NO" },
            self.character.value_at_ones
        );
        let _ = writeln!(s, "  singular vector killed by all annihilators: {}", if self.singular_vector_killed { "yes" } else { "NO" });
        let pd = self.weights.iter().filter(|w| w.positive_definite == Some(true)).count();
        let graded = self.weights.iter().filter(|w| w.positive_definite.is_some()).count();
        let _ = writeln!(s, "  positive definite Grams: {pd} of {graded}");
        let _ = writeln!(s, "  {:<16} {:>5} {:>7} {:>6} {:>6}  gram", "weight", "level", "dim_bar", "dim_vp", "M_p");
        for w in &self.weights {
            let verdict = match w.positive_definite {
                Some(true) => "positive definite",
                Some(false) => "NOT positive definite",
                None => "-",
            };
            let _ = writeln!(s, "  {:<16} {:>5} {:>7} {:>6} {:>6}  {verdict}", w.weight.to_string(), w.level, w.dim_bar, w.dim_vp, w.mp_dim);
        }
        let _ = writeln!(s, "{}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
