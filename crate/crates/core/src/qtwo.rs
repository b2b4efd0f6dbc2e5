//! The q(2) case: V̄_p spanned by `v_k = (b⁺)^k v₀` and
//! `w_k = (b⁺)^(k−1) f⁺ v₀`, and the orthonormal φ/ψ basis of V_p.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::CaoId;
use crate::error::{Error, Result};
use crate::fock::{BasisKey, FockState};
use crate::linalg::Matrix;
use crate::quad::QuadScalar;
use crate::FloatMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Q2Label {
    V(u32),
    W(u32),
}

impl Q2Label {
    /// `w_0` does not exist.
    pub fn w(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("w_0 does not exist; w-indices start at 1".into()));
        }
        Ok(Q2Label::W(k))
    }

    pub fn level(&self) -> u32 {
        match *self {
            Q2Label::V(k) | Q2Label::W(k) => k,
        }
    }

    /// The matching basis key of the n = 1 module.
    pub fn key(&self) -> BasisKey {
        match *self {
            Q2Label::V(k) => BasisKey::new(vec![k], vec![0]),
            Q2Label::W(k) => BasisKey::new(vec![k - 1], vec![1]),
        }
        .expect("valid key")
    }

    pub fn from_key(key: &BasisKey) -> Self {
        assert_eq!(key.n(), 1, "q(2) keys have one mode");
        match key.l()[0] {
            0 => Q2Label::V(key.k()[0]),
            _ => Q2Label::W(key.k()[0] + 1),
        }
    }
}

impl fmt::Display for Q2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q2Label::V(k) => write!(f, "v{k}"),
            Q2Label::W(k) => write!(f, "w{k}"),
        }
    }
}

impl Serialize for Q2Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Q2Op {
    BPlus,
    BMinus,
    FPlus,
    FMinus,
}

impl Q2Op {
    pub const ALL: [Q2Op; 4] = [Q2Op::BPlus, Q2Op::FPlus, Q2Op::BMinus, Q2Op::FMinus];

    pub fn cao(self) -> CaoId {
        match self {
            Q2Op::BPlus => CaoId::b_plus(1),
            Q2Op::BMinus => CaoId::b_minus(1),
            Q2Op::FPlus => CaoId::f_plus(1),
            Q2Op::FMinus => CaoId::f_minus(1),
        }
    }

    pub fn adjoint(self) -> Self {
        match self {
            Q2Op::BPlus => Q2Op::BMinus,
            Q2Op::BMinus => Q2Op::BPlus,
            Q2Op::FPlus => Q2Op::FMinus,
            Q2Op::FMinus => Q2Op::FPlus,
        }
    }
}

impl fmt::Display for Q2Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Q2Op::BPlus => "b+",
            Q2Op::BMinus => "b-",
            Q2Op::FPlus => "f+",
            Q2Op::FMinus => "f-",
        })
    }
}

/// Exact vector of V̄_p in the `{v_k, w_k}` basis.
#[derive(Clone, PartialEq)]
pub struct Q2State {
    p: u64,
    terms: BTreeMap<Q2Label, QuadScalar>,
}

impl Q2State {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 1, "p must be positive");
        Q2State { p, terms: BTreeMap::new() }
    }

    pub fn basis(label: Q2Label, p: u64) -> Self {
        let mut s = Self::zero(p);
        s.add_term(label, QuadScalar::one_in(p));
        s
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add_term(&mut self, label: Q2Label, c: QuadScalar) {
        assert!(label != Q2Label::W(0), "w_0 does not exist");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&label) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(label, sum);
        }
    }

    pub fn coefficient(&self, label: Q2Label) -> QuadScalar {
        self.terms.get(&label).cloned().unwrap_or_else(|| QuadScalar::zero_in(self.p))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Q2Label, &QuadScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(*l, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &QuadScalar) -> Self {
        let mut out = Self::zero(self.p);
        for (l, c) in &self.terms {
            out.add_term(*l, c * k);
        }
        out
    }

    pub fn to_fock(&self) -> FockState {
        let mut out = FockState::zero(1, self.p);
        for (l, c) in &self.terms {
            out.add_term(l.key(), c.clone());
        }
        out
    }

    pub fn from_fock(v: &FockState) -> Self {
        let mut out = Self::zero(v.p());
        for (k, c) in v.terms() {
            out.add_term(Q2Label::from_key(k), c.clone());
        }
        out
    }
}

impl fmt::Display for Q2State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c})*{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Q2State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn act_label(op: Q2Op, label: Q2Label, p: u64) -> Q2State {
    let mut out = Q2State::zero(p);
    let int = |x: i64| QuadScalar::from_int(x, p);
    let sqrt_p = QuadScalar::sqrt_p(p);
    let pi = p as i64;
    match (op, label) {
        (Q2Op::BPlus, Q2Label::V(k)) => out.add_term(Q2Label::V(k + 1), int(1)),
        (Q2Op::BPlus, Q2Label::W(k)) => out.add_term(Q2Label::W(k + 1), int(1)),
        (Q2Op::FPlus, Q2Label::V(k)) => out.add_term(Q2Label::W(k + 1), int(1)),
        (Q2Op::FPlus, Q2Label::W(_)) => {}
        (_, Q2Label::V(0)) => {}
        (Q2Op::BMinus, Q2Label::V(k)) => {
            let k = k as i64;
            out.add_term(Q2Label::V(k as u32 - 1), int(k * (pi - k + 1)));
        }
        (Q2Op::FMinus, Q2Label::V(k)) => {
            let ki = k as i64;
            out.add_term(Q2Label::V(k - 1), sqrt_p.scale_int(ki));
            if k >= 2 {
                out.add_term(Q2Label::W(k - 1), int(-ki * (ki - 1)));
            }
        }
        (Q2Op::BMinus, Q2Label::W(k)) => {
            let ki = k as i64;
            out.add_term(Q2Label::V(k - 1), sqrt_p);
            if k >= 2 {
                out.add_term(Q2Label::W(k - 1), int((ki - 1) * (pi - ki)));
            }
        }
        (Q2Op::FMinus, Q2Label::W(k)) => {
            let ki = k as i64;
            out.add_term(Q2Label::V(k - 1), int(pi));
            if k >= 2 {
                out.add_term(Q2Label::W(k - 1), sqrt_p.scale_int(-(ki - 1)));
            }
        }
    }
    out
}

/// Closed-form action on V̄_p.
pub fn q2_act(op: Q2Op, state: &Q2State) -> Q2State {
    let mut out = Q2State::zero(state.p);
    for (l, c) in &state.terms {
        out = out.plus(&act_label(op, *l, state.p).scale(c));
    }
    out
}

/// `p(p−1)⋯(p−k+1)`
fn falling(p: u64, k: u32) -> i64 {
    (0..k as i64).map(|i| p as i64 - i).product()
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// Closed-form inner products of the `{v_k, w_k}` basis.
pub fn q2_inner(x: Q2Label, y: Q2Label, p: u64) -> QuadScalar {
    if x.level() != y.level() {
        return QuadScalar::zero_in(p);
    }
    let k = x.level();
    let fall = falling(p, k);
    match (x, y) {
        (Q2Label::V(_), Q2Label::V(_)) => QuadScalar::from_int(factorial(k) * fall, p),
        (Q2Label::W(_), Q2Label::W(_)) => QuadScalar::from_int(factorial(k - 1) * fall, p),
        _ => QuadScalar::from_int(factorial(k) * fall, p) / QuadScalar::sqrt_p(p),
    }
}

/// `v_p − √p·w_p`
pub fn q2_primitive(p: u64) -> Q2State {
    let mut s = Q2State::basis(Q2Label::V(p as u32), p);
    s.add_term(Q2Label::W(p as u32), -QuadScalar::sqrt_p(p));
    s
}

/// For each level `1 ≤ k ≤ max_level`, the space of `(α, β)` with
/// `α v_k + β w_k` killed by `b⁻` and `f⁻`, as a basis of exact solutions.
pub fn q2_primitive_solutions(p: u64, max_level: u32) -> Vec<(u32, Vec<Vec<QuadScalar>>)> {
    (1..=max_level)
        .map(|k| {
            let cols = [Q2Label::V(k), Q2Label::W(k)];
            let mut rows = Vec::new();
            for op in [Q2Op::BMinus, Q2Op::FMinus] {
                let images: Vec<Q2State> = cols.iter().map(|&c| q2_act(op, &Q2State::basis(c, p))).collect();
                let mut targets = vec![Q2Label::V(k - 1)];
                if k >= 2 {
                    targets.push(Q2Label::W(k - 1));
                }
                for t in targets {
                    rows.push(images.iter().map(|img| img.coefficient(t)).collect());
                }
            }
            (k, Matrix::from_rows(rows, &p).nullspace())
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrthoKind {
    Phi,
    Psi,
}

/// `coeff_v · v_k + coeff_w · w_k`
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthoVec {
    pub kind: OrthoKind,
    pub k: u32,
    pub coeff_v: f64,
    pub coeff_w: f64,
}

impl fmt::Display for OrthoVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrthoKind::Phi => write!(f, "phi{}", self.k),
            OrthoKind::Psi => write!(f, "psi{}", self.k),
        }
    }
}

/// The vectors exactly as normalised by
/// `((p−k)!/(2k!p!(1 ± √(k/p))))^(1/2) (v_k ± √k w_k)`. At `k = 0` both
/// signs give `v₀/√2`, which has norm 1/2.
pub fn formula_vector(kind: OrthoKind, k: u32, p: u64) -> OrthoVec {
    let (pf, kf) = (p as f64, k as f64);
    let sign = match kind {
        OrthoKind::Phi => 1.0,
        OrthoKind::Psi => -1.0,
    };
    let fact = |m: u32| (1..=m).map(|i| i as f64).product::<f64>();
    let norm = (fact(p as u32 - k) / (2.0 * fact(k) * fact(p as u32) * (1.0 + sign * (kf / pf).sqrt()))).sqrt();
    OrthoVec { kind, k, coeff_v: norm, coeff_w: sign * norm * kf.sqrt() }
}

/// Orthonormal basis of V_p ordered by level: ψ₀, φ₁, ψ₁, …, ψ_{p−1}, φ_p.
/// ψ₀ is `v₀` itself.
pub fn q2_ortho_basis(p: u64) -> Vec<OrthoVec> {
    assert!(p >= 1, "p must be positive");
    let mut out = vec![OrthoVec { kind: OrthoKind::Psi, k: 0, coeff_v: 1.0, coeff_w: 0.0 }];
    for k in 1..p as u32 {
        out.push(formula_vector(OrthoKind::Phi, k, p));
        out.push(formula_vector(OrthoKind::Psi, k, p));
    }
    out.push(formula_vector(OrthoKind::Phi, p as u32, p));
    out
}

/// Numeric vector of V_p: per level, coefficients on `(v_k, w_k)` with the
/// level-p part reduced by `v_p ≡ √p w_p` and levels above p dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct NumVec {
    p: u64,
    levels: Vec<(f64, f64)>,
}

impl NumVec {
    pub fn zero(p: u64) -> Self {
        NumVec { p, levels: vec![(0.0, 0.0); p as usize + 1] }
    }

    pub fn from_ortho(o: &OrthoVec, p: u64) -> Self {
        let mut out = Self::zero(p);
        out.add(Q2Label::V(o.k), o.coeff_v);
        if o.k > 0 {
            out.add(Q2Label::W(o.k), o.coeff_w);
        }
        out
    }

    pub fn add(&mut self, label: Q2Label, c: f64) {
        let p = self.p as u32;
        match label {
            Q2Label::V(k) if k == p => self.levels[k as usize].1 += c * (self.p as f64).sqrt(),
            Q2Label::V(k) if k < p => self.levels[k as usize].0 += c,
            Q2Label::W(k) if k <= p => self.levels[k as usize].1 += c,
            _ => {}
        }
    }

    pub fn axpy(&mut self, a: f64, other: &NumVec) {
        for (x, y) in self.levels.iter_mut().zip(&other.levels) {
            x.0 += a * y.0;
            x.1 += a * y.1;
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.levels.iter().map(|(a, b)| a.abs().max(b.abs())).fold(0.0, f64::max)
    }

    fn labels(&self) -> impl Iterator<Item = (Q2Label, f64)> + '_ {
        self.levels.iter().enumerate().flat_map(|(k, &(a, b))| {
            let v = (Q2Label::V(k as u32), a);
            let w = (k > 0).then_some((Q2Label::W(k as u32), b));
            std::iter::once(v).chain(w)
        })
    }

    pub fn act(&self, op: Q2Op) -> NumVec {
        let mut out = NumVec::zero(self.p);
        for (label, c) in self.labels() {
            if c == 0.0 {
                continue;
            }
            for (l, q) in act_label(op, label, self.p).terms() {
                out.add(*l, c * q.to_f64());
            }
        }
        out
    }

    pub fn inner(&self, other: &NumVec) -> f64 {
        let p = self.p;
        let g = |a: Q2Label, b: Q2Label| q2_inner(a, b, p).to_f64();
        self.labels()
            .flat_map(|(a, x)| other.labels().map(move |(b, y)| (a, x, b, y)))
            .filter(|&(a, x, b, y)| x != 0.0 && y != 0.0 && a.level() == b.level())
            .map(|(a, x, b, y)| x * y * g(a, b))
            .sum()
    }
}

/// Gram matrix of a family of numeric vectors.
pub fn gram_numeric(vs: &[NumVec]) -> FloatMatrix {
    Matrix::from_fn(vs.len(), vs.len(), &(), |i, j| vs[i].inner(&vs[j]))
}

/// `max |G − I|` over the orthonormal basis.
pub fn ortho_residual(p: u64) -> f64 {
    let vs: Vec<NumVec> = q2_ortho_basis(p).iter().map(|o| NumVec::from_ortho(o, p)).collect();
    let g = gram_numeric(&vs);
    let mut worst: f64 = 0.0;
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g[(i, j)] - target).abs());
        }
    }
    worst
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixTable {
    pub op: Q2Op,
    pub p: u64,
    pub basis: Vec<String>,
    /// `entries[i][j] = ⟨e_i | op e_j⟩`
    pub entries: Vec<Vec<f64>>,
}

/// Matrix of `op` in the orthonormal basis, obtained by acting with the
/// closed forms and projecting with the inner product.
pub fn q2_matrix_elements(op: Q2Op, p: u64) -> MatrixTable {
    let basis = q2_ortho_basis(p);
    let vs: Vec<NumVec> = basis.iter().map(|o| NumVec::from_ortho(o, p)).collect();
    let images: Vec<NumVec> = vs.iter().map(|v| v.act(op)).collect();
    let entries = vs.iter().map(|e| images.iter().map(|img| e.inner(img)).collect()).collect();
    MatrixTable { op, p, basis: basis.iter().map(|o| o.to_string()).collect(), entries }
}

fn half_root(x: f64, y: f64) -> f64 {
    0.5 * (x * y).max(0.0).sqrt()
}

/// Coefficients `(on φ_{k+1}, on ψ_{k+1})` of `op` applied to the closed-form
/// `φ_k` or `ψ_k`, for `op` ∈ {f⁺, b⁺}.
pub fn raising_coefficients(op: Q2Op, kind: OrthoKind, k: u32, p: u64) -> (f64, f64) {
    let (sp, sk, sk1) = ((p as f64).sqrt(), (k as f64).sqrt(), (k as f64 + 1.0).sqrt());
    let a = half_root(sp - sk, sp + sk1);
    let b = half_root(sp - sk, sp - sk1);
    let c = half_root(sp + sk, sp + sk1);
    let d = half_root(sp + sk, sp - sk1);
    match (op, kind) {
        (Q2Op::FPlus, OrthoKind::Phi) => (a, -b),
        (Q2Op::FPlus, OrthoKind::Psi) => (c, -d),
        (Q2Op::BPlus, OrthoKind::Phi) => ((sk1 + sk) * a, (sk1 - sk) * b),
        (Q2Op::BPlus, OrthoKind::Psi) => ((sk1 - sk) * c, (sk1 + sk) * d),
        _ => panic!("{op} is not a raising operator"),
    }
}

/// Coefficients `(on φ_{k−1}, on ψ_{k−1})` of `f⁻ φ_k`.
pub fn f_minus_phi_coefficients(k: u32, p: u64) -> (f64, f64) {
    let (sp, sk0, sk) = ((p as f64).sqrt(), (k as f64 - 1.0).sqrt(), (k as f64).sqrt());
    (half_root(sp - sk0, sp + sk), half_root(sp + sk0, sp + sk))
}

/// Largest violation of the closed-form action on φ/ψ, checked as vector
/// identities in V_p using [`formula_vector`] throughout.
pub fn formula_residual(p: u64) -> f64 {
    let vec_of = |kind, k: u32| NumVec::from_ortho(&formula_vector(kind, k, p), p);
    let mut worst: f64 = 0.0;
    let mut compare = |lhs: NumVec, terms: &[(f64, OrthoKind, u32)]| {
        let mut diff = lhs;
        for &(c, kind, k) in terms {
            // ψ_p is undefined; its coefficient must vanish
            if kind == OrthoKind::Psi && k as u64 == p {
                worst = worst.max(c.abs());
                continue;
            }
            if k as u64 > p {
                worst = worst.max(c.abs());
                continue;
            }
            diff.axpy(-c, &vec_of(kind, k));
        }
        worst = worst.max(diff.max_abs());
    };
    for op in [Q2Op::FPlus, Q2Op::BPlus] {
        for k in 0..=p as u32 {
            for kind in [OrthoKind::Phi, OrthoKind::Psi] {
                if (kind == OrthoKind::Phi && k == 0) || (kind == OrthoKind::Psi && k as u64 == p) {
                    continue;
                }
                let (cphi, cpsi) = raising_coefficients(op, kind, k, p);
                compare(vec_of(kind, k).act(op), &[(cphi, OrthoKind::Phi, k + 1), (cpsi, OrthoKind::Psi, k + 1)]);
            }
        }
    }
    for k in 1..=p as u32 {
        let (cphi, cpsi) = f_minus_phi_coefficients(k, p);
        compare(vec_of(OrthoKind::Phi, k).act(Q2Op::FMinus), &[(cphi, OrthoKind::Phi, k - 1), (cpsi, OrthoKind::Psi, k - 1)]);
    }
    worst
}

/// The table predicted by the closed-form coefficients, written in the
/// orthonormal basis (where ψ₀ = √2 × the formula ψ₀).
pub fn formula_table(op: Q2Op, p: u64) -> MatrixTable {
    let basis = q2_ortho_basis(p);
    let index = |kind: OrthoKind, k: u32| basis.iter().position(|o| o.kind == kind && o.k == k);
    let size = basis.len();
    let mut entries = vec![vec![0.0; size]; size];
    let raising = match op {
        Q2Op::FPlus | Q2Op::BPlus => op,
        Q2Op::FMinus | Q2Op::BMinus => op.adjoint(),
    };
    for (j, src) in basis.iter().enumerate() {
        let (cphi, cpsi) = raising_coefficients(raising, src.kind, src.k, p);
        let scale = if src.k == 0 { std::f64::consts::SQRT_2 } else { 1.0 };
        for (c, kind) in [(cphi, OrthoKind::Phi), (cpsi, OrthoKind::Psi)] {
            if let Some(i) = index(kind, src.k + 1) {
                entries[i][j] = scale * c;
            }
        }
    }
    if raising != op {
        entries = (0..size).map(|i| (0..size).map(|j| entries[j][i]).collect()).collect();
    }
    MatrixTable { op, p, basis: basis.iter().map(|o| o.to_string()).collect(), entries }
}

pub fn table_distance(a: &MatrixTable, b: &MatrixTable) -> f64 {
    a.entries
        .iter()
        .flatten()
        .zip(b.entries.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `max |M(op⁻) − M(op⁺)ᵀ|` in the orthonormal basis.
pub fn adjoint_residual(p: u64) -> f64 {
    [Q2Op::BPlus, Q2Op::FPlus]
        .iter()
        .map(|&op| {
            let up = q2_matrix_elements(op, p);
            let down = q2_matrix_elements(op.adjoint(), p);
            let n = up.entries.len();
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| (down.entries[i][j] - up.entries[j][i]).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

/// Weights `(p−k, k)` of V_p with multiplicities.
pub fn q2_weights(p: u64) -> Vec<((i64, i64), u64)> {
    (0..=p as i64).map(|k| ((p as i64 - k, k), if k == 0 || k == p as i64 { 1 } else { 2 })).collect()
}

/// gl(2) irreducible constituents of V_p.
pub fn q2_dispin(p: u64) -> Vec<(i64, i64)> {
    if p == 1 {
        vec![(1, 0)]
    } else {
        vec![(p as i64, 0), (p as i64 - 1, 1)]
    }
}

/// Determinant of the `{v_k, w_k}` Gram at level k:
/// `k!(k−1)!·[p⋯(p−k+1)]²·(1 − k/p)`.
pub fn q2_level_gram_det(k: u32, p: u64) -> QuadScalar {
    let fall = falling(p, k);
    let base = QuadScalar::from_int(factorial(k) * factorial(k - 1) * fall * fall, p);
    let ratio = QuadScalar::from_rational(crate::quad::ratio(p as i64 - k as i64, p as i64), p);
    base * ratio
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = 3;
        let b = q2_act(Q2Op::BMinus, &Q2State::basis(Q2Label::V(1), p));
        assert_eq!(b, Q2State::basis(Q2Label::V(0), p).scale(&QuadScalar::from_int(3, p)));
        let f = q2_act(Q2Op::FMinus, &Q2State::basis(Q2Label::W(2), p));
        let mut expected = Q2State::basis(Q2Label::V(1), p).scale(&QuadScalar::from_int(3, p));
        expected.add_term(Q2Label::W(1), -QuadScalar::sqrt_p(p));
        assert_eq!(f, expected);
        assert_eq!(q2_inner(Q2Label::V(2), Q2Label::V(2), 3), QuadScalar::from_int(12, 3));
        assert_eq!(q2_inner(Q2Label::V(1), Q2Label::W(1), 3), QuadScalar::sqrt_p(3));
        assert!(q2_inner(Q2Label::V(4), Q2Label::V(4), 3).is_zero());
        assert!(Q2Label::w(0).is_err());
    }

    #[test]
    fn primitive_vectors() {
        let prim = q2_primitive(4);
        assert_eq!(prim.coefficient(Q2Label::W(4)), QuadScalar::from_int(-2, 4));
        for p in 1..=4 {
            let v = q2_primitive(p);
            assert!(q2_act(Q2Op::BMinus, &v).is_zero());
            assert!(q2_act(Q2Op::FMinus, &v).is_zero());
        }
    }

    #[test]
    fn formula_psi0_is_not_normalised() {
        let p = 3;
        let v = NumVec::from_ortho(&formula_vector(OrthoKind::Psi, 0, p), p);
        assert!((v.inner(&v) - 0.5).abs() < 1e-12);
    }
}
