//! The `2^r × 2^r` matrix `A(s; t₁, …, t_r)` and its determinant, rank and
//! inverse identities.
//!
//! Rows and columns are labelled by binary sequences `(l₁, …, l_r)` in
//! reverse binary order, so the label of index `x` has `l_i` equal to bit
//! `i−1` of `x`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linalg::Matrix;
use crate::poly::{MPoly, PolyCtx};
use crate::quad::{rat, Rational};
use crate::scalar::Ring;

/// Binary label `(l₁, …, l_r)` of row/column `index`.
pub fn label(index: usize, r: usize) -> Vec<u8> {
    (0..r).map(|i| ((index >> i) & 1) as u8).collect()
}

/// Row/column of the label `(l₁, …, l_r)`.
pub fn index_of(l: &[u8]) -> usize {
    l.iter().enumerate().map(|(i, &b)| (b as usize) << i).sum()
}

/// Diagonal `s`. When the labels differ only at position `i`: `−(−1)^(l_{i+1}+⋯+l_r) t_i`
/// if `l_i = 0`, and `(−1)^(l_i+⋯+l_r)` if `l_i = 1`. Zero otherwise.
pub fn build_a<R: Ring>(s: &R, t: &[R]) -> Matrix<R> {
    let r = t.len();
    assert!(r >= 1, "A needs at least one t");
    let ctx = s.ctx();
    let size = 1usize << r;
    Matrix::from_fn(size, size, &ctx, |row, col| {
        if row == col {
            return s.clone();
        }
        let diff = row ^ col;
        if !diff.is_power_of_two() {
            return R::zero(&ctx);
        }
        let i = diff.trailing_zeros() as usize;
        let odd_from = |from: usize| (row >> from).count_ones() % 2 == 1;
        if row & diff == 0 {
            if odd_from(i + 1) {
                t[i].clone()
            } else {
                -t[i].clone()
            }
        } else if odd_from(i) {
            R::from_i64(-1, &ctx)
        } else {
            R::one(&ctx)
        }
    })
}

/// Polynomial context with variables `s, t1, …, tr`.
pub fn lemma_ctx(r: usize) -> PolyCtx<()> {
    let mut names = vec!["s".to_string()];
    names.extend((1..=r).map(|i| format!("t{i}")));
    PolyCtx::new(&names, ())
}

pub fn symbolic_a(r: usize) -> Matrix<MPoly<Rational>> {
    let ctx = lemma_ctx(r);
    let t: Vec<_> = (1..=r).map(|i| MPoly::var(i, &ctx)).collect();
    build_a(&MPoly::var(0, &ctx), &t)
}

/// Division-free symbolic determinant; the matrix has order `2^r`, so this
/// is only practical for `r ≤ 3`.
pub fn det_a_symbolic(r: usize) -> MPoly<Rational> {
    assert!(r <= 3, "symbolic determinant is limited to r ≤ 3");
    symbolic_a(r).det_expansion()
}

/// `(s² − Σt_i)^(2^(r−1))`
pub fn det_a_expected(r: usize) -> MPoly<Rational> {
    let ctx = lemma_ctx(r);
    let s = MPoly::var(0, &ctx);
    let base = (1..=r).fold(s.clone() * s, |acc, i| acc - MPoly::var(i, &ctx));
    base.pow(1 << (r - 1))
}

pub fn det_a_at(s: &Rational, t: &[Rational]) -> Rational {
    build_a(s, t).det()
}

pub fn det_a_expected_at(s: &Rational, t: &[Rational]) -> Rational {
    let base = s * s - t.iter().sum::<Rational>();
    Ring::pow(&base, 1 << (t.len() - 1))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplePoint {
    pub s: String,
    pub t: Vec<String>,
    pub det: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub r: usize,
    pub seed: u64,
    pub samples: usize,
    pub mismatches: Vec<SamplePoint>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=12).into())
}

/// Compares the numeric determinant with the closed form at seeded random
/// rational points.
pub fn sample_det_check(r: usize, samples: usize, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let s = random_rational(&mut rng);
        let t: Vec<Rational> = (0..r).map(|_| random_rational(&mut rng)).collect();
        let det = det_a_at(&s, &t);
        let expected = det_a_expected_at(&s, &t);
        if det != expected {
            mismatches.push(SamplePoint {
                s: s.to_string(),
                t: t.iter().map(|x| x.to_string()).collect(),
                det: det.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    SampleReport { r, seed, samples, mismatches }
}

pub fn rank_a(s: &Rational, t: &[Rational]) -> usize {
    build_a(s, t).rank()
}

/// `A(s;t)·A(−s;t) = (Σt_i − s²)·I`
pub fn check_inverse_identity<R: Ring>(s: &R, t: &[R]) -> bool {
    let ctx = s.ctx();
    let product = &build_a(s, t) * &build_a(&-s.clone(), t);
    let sum_t = t.iter().cloned().fold(R::zero(&ctx), |a, b| a + b);
    let factor = sum_t - s.clone() * s.clone();
    product == Matrix::identity(1 << t.len(), &ctx).scale(&factor)
}

/// `(s, t)` with all `t_i > 0` and `Σt = s²`, used to probe the rank drop.
pub fn rank_probe(r: usize) -> (Rational, Vec<Rational>) {
    match r {
        2 => (rat(2), vec![rat(1), rat(3)]),
        3 => (rat(2), vec![rat(1), rat(1), rat(2)]),
        _ => {
            let s = (1..).map(rat).find(|s| s * s >= rat(r as i64)).expect("square bound");
            let t = Rational::new((&s * &s).to_integer(), (r as i64).into());
            (s, vec![t; r])
        }
    }
}
