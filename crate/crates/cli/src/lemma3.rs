use std::fmt::Write;

use qfock::lemma::{check_inverse_identity, det_a_at, det_a_expected, det_a_expected_at, det_a_symbolic, lemma_ctx, rank_a, sample_det_check, SampleReport};
use qfock::poly::MPoly;
use qfock::quad::parse_rational;
use qfock::Rational;
use serde::Serialize;

use crate::{Outcome, UsageError};

#[derive(clap::Args)]
pub struct Args {
    #[arg(long)]
    r: usize,
    /// Rational value for s; requires --t.
    #[arg(long, requires = "t")]
    s: Option<String>,
    /// Comma separated rational values t1,…,tr; requires --s.
    #[arg(long, requires = "s")]
    t: Option<String>,
    /// Random points for the determinant check when r = 4.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Serialize)]
struct Symbolic {
    det: String,
    expected: String,
    det_matches: bool,
    inverse_identity: bool,
}

#[derive(Serialize)]
struct Point {
    s: String,
    t: Vec<String>,
    det: String,
    expected: String,
    rank: usize,
    on_quadric: bool,
    rank_expected: Option<usize>,
    inverse_identity: bool,
}

#[derive(Serialize)]
pub struct Report {
    r: usize,
    symbolic: Option<Symbolic>,
    sampling: Option<SampleReport>,
    point: Option<Point>,
}

fn parse(s: &str) -> Result<Rational, UsageError> {
    parse_rational(s).map_err(|e| UsageError(format!("`{s}`: {e}")))
}

pub fn run(a: &Args) -> Result<Report, UsageError> {
    if a.r == 0 || a.r > 4 {
        return Err(UsageError("--r must lie in 1..=4".into()));
    }
    let r = a.r;
    let symbolic = (r <= 3).then(|| {
        let ctx = lemma_ctx(r);
        let t: Vec<MPoly<Rational>> = (1..=r).map(|i| MPoly::var(i, &ctx)).collect();
        let (det, expected) = (det_a_symbolic(r), det_a_expected(r));
        Symbolic {
            det_matches: det == expected,
            det: det.to_string(),
            expected: expected.to_string(),
            inverse_identity: check_inverse_identity(&MPoly::var(0, &ctx), &t),
        }
    });
    let sampling = (r == 4).then(|| sample_det_check(r, a.samples, a.seed));
    let point = match (&a.s, &a.t) {
        (Some(s), Some(t)) => {
            let s = parse(s)?;
            let t: Vec<Rational> = t.split(',').map(parse).collect::<Result<_, _>>()?;
            if t.len() != r {
                return Err(UsageError(format!("--t has {} values but r = {r}", t.len())));
            }
            let on_quadric = &s * &s == t.iter().sum::<Rational>();
            let positive = t.iter().all(|x| *x > Rational::from_integer(0.into()));
            Some(Point {
                det: det_a_at(&s, &t).to_string(),
                expected: det_a_expected_at(&s, &t).to_string(),
                rank: rank_a(&s, &t),
                rank_expected: (on_quadric && positive).then_some(1 << (r - 1)),
                on_quadric,
                inverse_identity: check_inverse_identity(&s, &t),
                s: s.to_string(),
                t: t.iter().map(|x| x.to_string()).collect(),
            })
        }
        _ => None,
    };
    Ok(Report { r, symbolic, sampling, point })
}

impl Outcome for Report {
    fn passed(&self) -> bool {
        self.symbolic.as_ref().is_none_or(|s| s.det_matches && s.inverse_identity)
            && self.sampling.as_ref().is_none_or(|s| s.passed())
            && self.point.as_ref().is_none_or(|p| {
                p.det == p.expected && p.inverse_identity && p.rank_expected.is_none_or(|e| e == p.rank)
            })
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "A(s; t1..t{}) of order {}", self.r, 1 << self.r);
        if let Some(sym) = &self.symbolic {
            let _ = writeln!(s, "  det = {}", sym.det);
            let _ = writeln!(s, "  det equals (s^2 - sum t)^{}: {}", 1 << (self.r - 1), if sym.det_matches { "yes" } else { "NO" });
            let _ = writeln!(s, "  A(s;t) A(-s;t) = (sum t - s^2) I: {}", if sym.inverse_identity { "yes" } else { "NO" });
        }
        if let Some(smp) = &self.sampling {
            let _ = writeln!(
                s,
                "  det identity at {} random points (seed {}): {} mismatches",
                smp.samples,
                smp.seed,
                smp.mismatches.len()
            );
            if smp.passed() {
                let _ = writeln!(s, "  identity confirmed at all samples");
            }
        }
        if let Some(p) = &self.point {
            let _ = writeln!(s, "  at s = {}, t = ({})", p.s, p.t.join(", "));
            let _ = writeln!(s, "    det = {} (expected {})", p.det, p.expected);
            let _ = writeln!(s, "    rank = {}", p.rank);
            if let Some(e) = p.rank_expected {
                let _ = writeln!(s, "    sum t = s^2, expected rank {e}");
            }
            let _ = writeln!(s, "    inverse identity: {}", if p.inverse_identity { "yes" } else { "NO" });
        }
        let _ = writeln!(s, "{}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
