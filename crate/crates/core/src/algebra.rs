//! The Lie superalgebra q(n+1) given by structure constants.
//!
//! Basis: `e[i,j]^σ` for `0 ≤ i, j ≤ n` and `σ ∈ {0, 1}`, with the bracket
//!
//! ```text
//! [[e_ij^σ, e_kl^θ]] = δ_jk e_il^(σ+θ) − (−1)^(σθ) δ_il e_kj^(σ+θ)
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quad::{rat, Rational};
use crate::scalar::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const ALL: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(−1)^(σθ)`
    pub fn sign_with(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

/// Basis element `e_ij^σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    pub i: usize,
    pub j: usize,
    pub parity: Parity,
}

impl GeneratorId {
    pub fn new(i: usize, j: usize, parity: Parity) -> Self {
        GeneratorId { i, j, parity }
    }

    pub fn even(i: usize, j: usize) -> Self {
        Self::new(i, j, Parity::Even)
    }

    pub fn odd(i: usize, j: usize) -> Self {
        Self::new(i, j, Parity::Odd)
    }

    pub fn fits(&self, n: usize) -> bool {
        self.i <= n && self.j <= n
    }

    /// `b_i^+` or `f_i^+` (for `i ≥ 1`).
    pub fn is_creation(&self) -> bool {
        self.j == 0 && self.i >= 1
    }

    pub fn is_annihilation(&self) -> bool {
        self.i == 0 && self.j >= 1
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]^{}", self.i, self.j, self.parity.bit())
    }
}

impl FromStr for GeneratorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `e[i,j]^s`, got `{s}`"));
        let rest = s.trim().strip_prefix("e[").ok_or_else(bad)?;
        let (idx, par) = rest.split_once("]^").ok_or_else(bad)?;
        let (i, j) = idx.split_once(',').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let j = j.trim().parse().map_err(|_| bad())?;
        let parity = match par.trim() {
            "0" => Parity::Even,
            "1" => Parity::Odd,
            _ => return Err(bad()),
        };
        Ok(GeneratorId { i, j, parity })
    }
}

impl Serialize for GeneratorId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn all_generators(n: usize) -> Vec<GeneratorId> {
    let mut out = Vec::with_capacity(2 * (n + 1) * (n + 1));
    for parity in Parity::ALL {
        for i in 0..=n {
            for j in 0..=n {
                out.push(GeneratorId { i, j, parity });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeclaredParity {
    Even,
    Odd,
    Mixed,
}

/// Finite linear combination of generators. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<R: Ring> {
    ctx: R::Ctx,
    terms: BTreeMap<GeneratorId, R>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(ctx: &R::Ctx) -> Self {
        AlgebraElement { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn generator(g: GeneratorId, ctx: &R::Ctx) -> Self {
        Self::term(g, R::one(ctx))
    }

    pub fn term(g: GeneratorId, c: R) -> Self {
        let mut e = Self::zero(&c.ctx());
        e.add_term(g, c);
        e
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn add_term(&mut self, g: GeneratorId, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.terms.insert(g, sum);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn coefficient(&self, g: &GeneratorId) -> R {
        self.terms.get(g).cloned().unwrap_or_else(|| R::zero(&self.ctx))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorId, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The zero element counts as even.
    pub fn parity(&self) -> DeclaredParity {
        let mut parities = self.terms.keys().map(|g| g.parity);
        match parities.next() {
            None => DeclaredParity::Even,
            Some(first) if parities.all(|p| p == first) => match first {
                Parity::Even => DeclaredParity::Even,
                Parity::Odd => DeclaredParity::Odd,
            },
            Some(_) => DeclaredParity::Mixed,
        }
    }

    pub fn homogeneous_parity(&self) -> Option<Parity> {
        match self.parity() {
            DeclaredParity::Even => Some(Parity::Even),
            DeclaredParity::Odd => Some(Parity::Odd),
            DeclaredParity::Mixed => None,
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (g, c) in &self.terms {
            out.add_term(*g, c.clone() * k.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, -c.clone());
        }
        out
    }
}

impl<R: Ring + fmt::Display> fmt::Display for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("({c})*{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Superbracket of two basis elements.
pub fn bracket<R: Ring>(x: GeneratorId, y: GeneratorId, ctx: &R::Ctx) -> AlgebraElement<R> {
    let parity = x.parity + y.parity;
    let mut out = AlgebraElement::zero(ctx);
    if x.j == y.i {
        out.add_term(GeneratorId::new(x.i, y.j, parity), R::one(ctx));
    }
    if x.i == y.j {
        out.add_term(GeneratorId::new(y.i, x.j, parity), R::from_i64(-x.parity.sign_with(y.parity), ctx));
    }
    out
}

/// Bilinear extension of [`bracket`]. Both arguments must be parity-homogeneous.
pub fn bracket_elements<R: Ring>(x: &AlgebraElement<R>, y: &AlgebraElement<R>) -> Result<AlgebraElement<R>> {
    if x.homogeneous_parity().is_none() || y.homogeneous_parity().is_none() {
        return Err(Error::MixedParity);
    }
    let mut out = AlgebraElement::zero(&x.ctx);
    for (gx, cx) in &x.terms {
        for (gy, cy) in &y.terms {
            let c = cx.clone() * cy.clone();
            for (g, b) in bracket::<R>(*gx, *gy, &x.ctx).terms {
                out.add_term(g, c.clone() * b);
            }
        }
    }
    Ok(out)
}

/// Image of a generator in the defining representation, a matrix of order 2(n+1).
pub fn defining_rep(x: GeneratorId, n: usize) -> Matrix<Rational> {
    assert!(x.fits(n), "{x} is not a generator of q({})", n + 1);
    let m = n + 1;
    let mut out = Matrix::zeros(2 * m, 2 * m, &());
    match x.parity {
        Parity::Even => {
            out[(x.i, x.j)] = rat(1);
            out[(m + x.i, m + x.j)] = rat(1);
        }
        Parity::Odd => {
            out[(x.i, m + x.j)] = rat(1);
            out[(m + x.i, x.j)] = rat(1);
        }
    }
    out
}

pub fn defining_rep_element(x: &AlgebraElement<Rational>, n: usize) -> Matrix<Rational> {
    let m = 2 * (n + 1);
    x.terms().fold(Matrix::zeros(m, m, &()), |acc, (g, c)| acc.add(&defining_rep(*g, n).scale(c)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaoKind {
    /// even: `b_i^±`
    B,
    /// odd: `f_i^±`
    F,
}

impl CaoKind {
    pub fn parity(self) -> Parity {
        match self {
            CaoKind::B => Parity::Even,
            CaoKind::F => Parity::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaoSign {
    Plus,
    Minus,
}

/// A creation or annihilation operator `b_i^±` / `f_i^±`, `i ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaoId {
    pub kind: CaoKind,
    pub sign: CaoSign,
    pub index: usize,
}

impl CaoId {
    pub fn new(kind: CaoKind, sign: CaoSign, index: usize) -> Self {
        assert!(index >= 1, "operator index starts at 1");
        CaoId { kind, sign, index }
    }

    pub fn b_plus(i: usize) -> Self {
        Self::new(CaoKind::B, CaoSign::Plus, i)
    }

    pub fn b_minus(i: usize) -> Self {
        Self::new(CaoKind::B, CaoSign::Minus, i)
    }

    pub fn f_plus(i: usize) -> Self {
        Self::new(CaoKind::F, CaoSign::Plus, i)
    }

    pub fn f_minus(i: usize) -> Self {
        Self::new(CaoKind::F, CaoSign::Minus, i)
    }

    pub fn parity(&self) -> Parity {
        self.kind.parity()
    }

    pub fn is_creation(&self) -> bool {
        self.sign == CaoSign::Plus
    }

    /// The adjoint operator: `b^± ↔ b^∓`, `f^± ↔ f^∓`.
    pub fn dagger(&self) -> Self {
        let sign = match self.sign {
            CaoSign::Plus => CaoSign::Minus,
            CaoSign::Minus => CaoSign::Plus,
        };
        CaoId { sign, ..*self }
    }
}

impl fmt::Display for CaoId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            CaoKind::B => 'b',
            CaoKind::F => 'f',
        };
        let s = match self.sign {
            CaoSign::Plus => '+',
            CaoSign::Minus => '-',
        };
        write!(f, "{k}{}{s}", self.index)
    }
}

impl Serialize for CaoId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All `4n` creation and annihilation operators.
pub fn all_caos(n: usize) -> Vec<CaoId> {
    let mut out = Vec::with_capacity(4 * n);
    for sign in [CaoSign::Plus, CaoSign::Minus] {
        for i in 1..=n {
            for kind in [CaoKind::B, CaoKind::F] {
                out.push(CaoId::new(kind, sign, i));
            }
        }
    }
    out
}

/// `a_i^+(σ) = e_{i0}^σ`, `a_i^−(σ) = e_{0i}^σ`.
pub fn cao_embed(c: CaoId) -> GeneratorId {
    let parity = c.parity();
    match c.sign {
        CaoSign::Plus => GeneratorId::new(c.index, 0, parity),
        CaoSign::Minus => GeneratorId::new(0, c.index, parity),
    }
}

fn a_op(sign: CaoSign, parity: Parity, i: usize) -> GeneratorId {
    let kind = match parity {
        Parity::Even => CaoKind::B,
        Parity::Odd => CaoKind::F,
    };
    cao_embed(CaoId::new(kind, sign, i))
}

/// Deliberate corruption of the triple relations, used to confirm that the
/// verifier notices a wrong sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Flip the sign of the second term on the right of the
    /// `[[[[a^+, a^-]], a^+]]` relation.
    FlipCreationTripleSign,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationViolation {
    pub relation: String,
    pub indices: Vec<usize>,
    pub parities: Vec<u8>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QStatisticsReport {
    pub n: usize,
    pub instances: usize,
    pub violations: Vec<RelationViolation>,
}

impl QStatisticsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_q_statistics(n: usize) -> QStatisticsReport {
    verify_q_statistics_with(n, Fault::None)
}

/// Expands the quadratic and triple relations of the creation and
/// annihilation operators for every index and parity tuple.
pub fn verify_q_statistics_with(n: usize, fault: Fault) -> QStatisticsReport {
    type E = AlgebraElement<Rational>;
    let gen = |g: GeneratorId| E::generator(g, &());
    let br = |x: &E, y: &E| bracket_elements(x, y).expect("homogeneous operands");
    let mut report = QStatisticsReport { n, instances: 0, violations: Vec::new() };
    let mut record = |relation: &str, idx: Vec<usize>, par: Vec<Parity>, lhs: E, rhs: E| {
        report.instances += 1;
        if lhs != rhs {
            report.violations.push(RelationViolation {
                relation: relation.to_string(),
                indices: idx,
                parities: par.iter().map(|p| p.bit()).collect(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    };
    let delta = |a: usize, b: usize| if a == b { 1 } else { 0 };
    let zero = E::zero(&());

    for i in 1..=n {
        for j in 1..=n {
            for s in Parity::ALL {
                for t in Parity::ALL {
                    for sign in [CaoSign::Minus, CaoSign::Plus] {
                        let lhs = br(&gen(a_op(sign, s, i)), &gen(a_op(sign, t, j)));
                        let name = if sign == CaoSign::Minus { "quadratic-minus" } else { "quadratic-plus" };
                        record(name, vec![i, j], vec![s, t], lhs, zero.clone());
                    }
                    for k in 1..=n {
                        for w in Parity::ALL {
                            let total = s + t + w;
                            let inner = br(&gen(a_op(CaoSign::Plus, s, i)), &gen(a_op(CaoSign::Minus, t, j)));

                            let lhs = br(&inner, &gen(a_op(CaoSign::Plus, w, k)));
                            let mut second = s.sign_with(t) * t.sign_with(w) * w.sign_with(s);
                            if fault == Fault::FlipCreationTripleSign {
                                second = -second;
                            }
                            let rhs = gen(a_op(CaoSign::Plus, total, i))
                                .scale(&rat(delta(j, k)))
                                .plus(&gen(a_op(CaoSign::Plus, total, k)).scale(&rat(second * delta(i, j))));
                            record("triple-plus", vec![i, j, k], vec![s, t, w], lhs, rhs);

                            let lhs = br(&inner, &gen(a_op(CaoSign::Minus, w, k)));
                            let first = -s.sign_with(t) * delta(i, j);
                            let second = -t.sign_with(w) * w.sign_with(s) * delta(i, k);
                            let rhs = gen(a_op(CaoSign::Minus, total, k))
                                .scale(&rat(first))
                                .plus(&gen(a_op(CaoSign::Minus, total, j)).scale(&rat(second)));
                            record("triple-minus", vec![i, j, k], vec![s, t, w], lhs, rhs);
                        }
                    }
                }
            }
        }
    }
    report
}

/// Pairs `(x, y)` where `[[x,y]] ≠ −(−1)^(σθ)[[y,x]]`.
pub fn super_antisymmetry_failures(n: usize) -> Vec<(GeneratorId, GeneratorId)> {
    let gens = all_generators(n);
    let mut out = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let lhs = bracket::<Rational>(x, y, &());
            let rhs = bracket::<Rational>(y, x, &()).scale(&rat(-x.parity.sign_with(y.parity)));
            if lhs != rhs {
                out.push((x, y));
            }
        }
    }
    out
}

/// Triples violating `[[x,[[y,z]]]] = [[[[x,y]],z]] + (−1)^(σθ)[[y,[[x,z]]]]`.
pub fn super_jacobi_failures(n: usize) -> Vec<(GeneratorId, GeneratorId, GeneratorId)> {
    type E = AlgebraElement<Rational>;
    let gens = all_generators(n);
    let gen = |g: GeneratorId| E::generator(g, &());
    let br = |x: &E, y: &E| bracket_elements(x, y).expect("homogeneous operands");
    let mut out = Vec::new();
    for &x in &gens {
        let ex = gen(x);
        for &y in &gens {
            let ey = gen(y);
            let xy = br(&ex, &ey);
            for &z in &gens {
                let ez = gen(z);
                let lhs = br(&ex, &br(&ey, &ez));
                let rhs = br(&xy, &ez).plus(&br(&ey, &br(&ex, &ez)).scale(&rat(x.parity.sign_with(y.parity))));
                if lhs != rhs {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// Pairs where `ρ([[x,y]]) ≠ ρ(x)ρ(y) − (−1)^(σθ)ρ(y)ρ(x)`.
pub fn defining_rep_failures(n: usize) -> Vec<(GeneratorId, GeneratorId)> {
    let gens = all_generators(n);
    let images: Vec<_> = gens.iter().map(|&g| defining_rep(g, n)).collect();
    let mut out = Vec::new();
    for (a, &x) in gens.iter().enumerate() {
        for (b, &y) in gens.iter().enumerate() {
            let lhs = defining_rep_element(&bracket(x, y, &()), n);
            let xy = &images[a] * &images[b];
            let yx = &images[b] * &images[a];
            let rhs = xy.sub(&yx.scale(&rat(x.parity.sign_with(y.parity))));
            if lhs != rhs {
                out.push((x, y));
            }
        }
    }
    out
}

/// Dimension of the span of all creation/annihilation operators together
/// with their pairwise brackets.
pub fn cao_span_dimension(n: usize) -> usize {
    let gens = all_generators(n);
    let index: BTreeMap<GeneratorId, usize> = gens.iter().enumerate().map(|(k, g)| (*g, k)).collect();
    let caos: Vec<GeneratorId> = all_caos(n).into_iter().map(cao_embed).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let to_row = |e: &AlgebraElement<Rational>| {
        let mut row = vec![rat(0); gens.len()];
        for (g, c) in e.terms() {
            row[index[g]] = c.clone();
        }
        row
    };
    for &a in &caos {
        rows.push(to_row(&AlgebraElement::generator(a, &())));
        for &b in &caos {
            rows.push(to_row(&bracket(a, b, &())));
        }
    }
    Matrix::from_rows(rows, &()).rank()
}

/// A root in the ε-basis with its even and odd multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub vector: Vec<i64>,
    pub even: usize,
    pub odd: usize,
}

impl Root {
    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(|&c| c == 0)
    }

    /// `ε_i − ε_j` with `i < j`.
    pub fn is_positive(&self) -> bool {
        self.vector.iter().find(|&&c| c != 0) == Some(&1)
    }
}

pub fn roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                let mut v = vec![0; n + 1];
                v[i] = 1;
                v[j] = -1;
                out.push(Root { vector: v, even: 1, odd: 1 });
            }
        }
    }
    out.push(Root { vector: vec![0; n + 1], even: 0, odd: n + 1 });
    out
}

pub fn positive_roots(n: usize) -> Vec<Root> {
    roots(n).into_iter().filter(Root::is_positive).collect()
}
