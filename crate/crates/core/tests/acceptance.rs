//! One line per acceptance criterion; the test fails if any line reads FAIL.

use std::time::{Duration, Instant};

use qfock::algebra::{all_caos, cao_embed, verify_q_statistics};
use qfock::fock::*;
use qfock::lemma::*;
use qfock::qtwo::*;
use qfock::quad::rat;
use qfock::structure::*;
use qfock::symfun::*;
use qfock::QuadScalar;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            o.ok = false;
            o.detail = format!("{} (over the {limit:?} limit)", o.detail);
        }
    }
    println!("{} {name}: {} [{elapsed:.2?}]", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    o.ok
}

fn q_statistics() -> Outcome {
    let mut instances = 0;
    for n in 1..=4 {
        let r = verify_q_statistics(n);
        instances += r.instances;
        if !r.passed() {
            return outcome(false, format!("n={n}: {:?}", r.violations[0]));
        }
    }
    outcome(true, format!("{instances} relation instances, n = 1..4"))
}

fn representation() -> Outcome {
    for n in 1..=3 {
        for p in [2u64, 3] {
            let fails = representation_failures(n, p, p as u32 + 2);
            if let Some(f) = fails.first() {
                return outcome(false, format!("n={n} p={p}: {f:?}"));
            }
        }
    }
    outcome(true, "n ≤ 3, p ∈ {2,3}, level ≤ p+2")
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for p in [2u64, 3] {
            let oracle = FockOracle::new(n, p);
            for c in all_caos(n).into_iter().filter(|c| !c.is_creation()) {
                for k in keys_up_to(n, 4) {
                    let v = FockState::basis(k.clone(), p);
                    checked += 1;
                    if apply_annihilate(c, &v) != oracle.apply(cao_embed(c), &v) {
                        return outcome(false, format!("{c} on {k}, n={n} p={p}"));
                    }
                }
            }
        }
    }
    outcome(true, format!("{checked} key/operator pairs, zero discrepancies"))
}

fn x_vector_laws() -> Outcome {
    for n in 1..=3 {
        for p in 1..=3u64 {
            for k in keys_up_to(n, p as u32 + 1) {
                let x = x_vector(&k, p);
                for c in all_caos(n) {
                    let image = apply_cao(c, &x);
                    if image != x_vector_image(c, &k, p) {
                        return outcome(false, format!("{c} X({k}) n={n} p={p}"));
                    }
                    if k.level() == p as u32 && !c.is_creation() && !image.is_zero() {
                        return outcome(false, format!("{c} does not kill X({k}) n={n} p={p}"));
                    }
                }
            }
        }
    }
    outcome(true, "n ≤ 3, p ≤ 3, level ≤ p+1; level-p X-vectors killed")
}

fn lemma3() -> Outcome {
    for r in 2..=3 {
        if det_a_symbolic(r) != det_a_expected(r) {
            return outcome(false, format!("symbolic det, r={r}"));
        }
    }
    let samples = sample_det_check(4, 50, 7);
    if !samples.passed() {
        return outcome(false, format!("r=4 sample {:?}", samples.mismatches[0]));
    }
    for r in 1..=4 {
        let (s, t) = rank_probe(r);
        if rank_a(&s, &t) != 1 << (r - 1) {
            return outcome(false, format!("rank at r={r}"));
        }
    }
    for r in 1..=3 {
        let ctx = lemma_ctx(r);
        let t: Vec<_> = (1..=r).map(|i| qfock::poly::MPoly::<qfock::Rational>::var(i, &ctx)).collect();
        if !check_inverse_identity(&qfock::poly::MPoly::<qfock::Rational>::var(0, &ctx), &t) {
            return outcome(false, format!("inverse identity r={r}"));
        }
    }
    outcome(true, "det r=2,3 symbolic; 50 samples r=4 (seed 7); rank 2^(r-1) r ≤ 4; inverse r ≤ 3")
}

fn dimensions() -> Outcome {
    for p in 1..=6 {
        if dim_vp(1, p) != 2 * p {
            return outcome(false, format!("dim_vp(1,{p})"));
        }
    }
    for n in 1..=3 {
        for p in 1..=5u64 {
            let enumerated: u64 = vp_weights(n, p).iter().map(|w| vp_mult(w, n, p)).sum();
            let weyl: u64 = gl_decomposition(n, p).iter().map(|l| weyl_dim(l)).sum();
            if enumerated != dim_vp(n, p) || weyl != dim_vp(n, p) {
                return outcome(false, format!("n={n} p={p}: formula {} enum {enumerated} weyl {weyl}", dim_vp(n, p)));
            }
        }
    }
    outcome(true, "2p for p ≤ 6; enumeration and Weyl sums for n ≤ 3, p ≤ 5")
}

fn characters() -> Outcome {
    for n in 1..=3 {
        for p in n as u64..=5 {
            let w = char_from_weights(n, p);
            if w != char_formula(n, p) || w != char_hook_sum(n, p) || at_ones(&w) != rat(dim_vp(n, p) as i64) {
                return outcome(false, format!("n={n} p={p}"));
            }
        }
    }
    outcome(true, "three paths agree, n ≤ 3, n ≤ p ≤ 5")
}

fn positivity() -> Outcome {
    let mut grams = 0;
    for n in 1..=3 {
        for p in 1..=4u64 {
            for w in vp_weights(n, p) {
                grams += 1;
                let g = gram(&w, n, p).expect("representatives");
                if !is_positive_definite(&g).positive_definite {
                    return outcome(false, format!("n={n} p={p} weight {w}"));
                }
                let Some(m) = w.occupation(p) else { continue };
                if w.level() != p as i64 {
                    continue;
                }
                let bar = gram_bar(&w, n, p).expect("occupation");
                if 2 * bar.entries.rank() != bar.order() {
                    return outcome(false, format!("rank at n={n} p={p} weight {w}"));
                }
                for v in mp_basis(&w, n, p, p as u32 + 2).expect("level p") {
                    for k in keys_with_occupation(&m) {
                        if !inner_product(&v, &FockState::basis(k, p)).is_zero() {
                            return outcome(false, format!("M_p not null at n={n} p={p} weight {w}"));
                        }
                    }
                }
            }
        }
    }
    outcome(true, format!("{grams} weight-space Grams positive definite; level-p ranks d_m/2; M_p null"))
}

fn q2_suite() -> Outcome {
    for p in 1..=4u64 {
        for k in 0..=6u32 {
            let labels = std::iter::once(Q2Label::V(k)).chain((k > 0).then_some(Q2Label::W(k)));
            for l in labels {
                let s = Q2State::basis(l, p);
                for op in Q2Op::ALL {
                    if q2_act(op, &s) != Q2State::from_fock(&apply_cao(op.cao(), &s.to_fock())) {
                        return outcome(false, format!("{op} {l} p={p}"));
                    }
                }
                for m in 0..=6u32 {
                    for other in [Q2Label::V(m), Q2Label::W(m.max(1))] {
                        let direct = inner_product(&s.to_fock(), &Q2State::basis(other, p).to_fock());
                        if q2_inner(l, other, p) != direct {
                            return outcome(false, format!("<{l}|{other}> p={p}"));
                        }
                    }
                }
            }
        }
        for (k, sols) in q2_primitive_solutions(p, p as u32) {
            let expected = if k as u64 == p { 1 } else { 0 };
            if sols.len() != expected {
                return outcome(false, format!("primitive solutions p={p} k={k}"));
            }
            if k as u64 == p && sols[0][1].clone() / sols[0][0].clone() != -QuadScalar::sqrt_p(p) {
                return outcome(false, format!("primitive vector p={p}"));
            }
        }
    }
    let mut worst: f64 = 0.0;
    for p in 1..=6u64 {
        worst = worst.max(ortho_residual(p)).max(formula_residual(p)).max(adjoint_residual(p));
        for op in Q2Op::ALL {
            worst = worst.max(table_distance(&q2_matrix_elements(op, p), &formula_table(op, p)));
        }
    }
    outcome(worst < 1e-10, format!("exact laws k ≤ 6, p ≤ 4; unique primitive; numeric residual {worst:.1e} for p ≤ 6"))
}

fn singular_vector_check() -> Outcome {
    for n in 1..=3 {
        for p in 1..=3u64 {
            let s = surviving_annihilators(&singular_vector(n, p));
            if !s.is_empty() {
                return outcome(false, format!("n={n} p={p}: {:?}", s));
            }
        }
    }
    let report = cao_closure_check(2, 2, 4);
    outcome(report.passed(), format!("killed for n, p ≤ 3; n=2, p=2 closure matches M_p at {} weights", report.weights.len()))
}

#[test]
fn acceptance() {
    let results = [
        run("Q-statistics", Some(Duration::from_secs(10)), q_statistics),
        run("Representation property", Some(Duration::from_secs(60)), representation),
        run("Oracle equivalence", None, oracle_equivalence),
        run("X-vector laws", None, x_vector_laws),
        run("Matrix A identities", None, lemma3),
        run("Dimensions", None, dimensions),
        run("Characters", None, characters),
        run("Positivity", None, positivity),
        run("q(2) suite", None, q2_suite),
        run("Singular vector", None, singular_vector_check),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
