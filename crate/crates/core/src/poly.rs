//! Sparse multivariate polynomials over a [`Ring`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalar::Ring;

/// Variable names plus the coefficient ring's own context.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCtx<C> {
    vars: Arc<[String]>,
    coeff: C,
}

impl<C: Clone> PolyCtx<C> {
    pub fn new<S: AsRef<str>>(vars: &[S], coeff: C) -> Self {
        PolyCtx { vars: vars.iter().map(|v| v.as_ref().to_string()).collect(), coeff }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn coeff_ctx(&self) -> &C {
        &self.coeff
    }
}

impl PolyCtx<()> {
    /// `x0, x1, …, x_{count−1}`
    pub fn indexed(prefix: &str, count: usize) -> Self {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names, ())
    }
}

#[derive(Clone, PartialEq)]
pub struct MPoly<R: Ring> {
    ctx: PolyCtx<R::Ctx>,
    terms: BTreeMap<Vec<u32>, R>,
}

/// Graded lexicographic order, largest first.
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl<R: Ring> MPoly<R> {
    pub fn zero(ctx: &PolyCtx<R::Ctx>) -> Self {
        MPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(c: R, ctx: &PolyCtx<R::Ctx>) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(vec![0; ctx.arity()], c);
        out
    }

    pub fn one(ctx: &PolyCtx<R::Ctx>) -> Self {
        Self::constant(R::one(&ctx.coeff), ctx)
    }

    pub fn var(i: usize, ctx: &PolyCtx<R::Ctx>) -> Self {
        assert!(i < ctx.arity(), "variable index {i} out of range");
        let mut e = vec![0; ctx.arity()];
        e[i] = 1;
        let mut out = Self::zero(ctx);
        out.add_term(e, R::one(&ctx.coeff));
        out
    }

    pub fn monomial(exponents: Vec<u32>, c: R, ctx: &PolyCtx<R::Ctx>) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(exponents, c);
        out
    }

    pub fn poly_ctx(&self) -> &PolyCtx<R::Ctx> {
        &self.ctx
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: R) {
        assert_eq!(exponents.len(), self.ctx.arity(), "exponent vector has the wrong arity");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exponents) {
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.terms.insert(exponents, sum);
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> R {
        self.terms.get(exponents).cloned().unwrap_or_else(|| R::zero(&self.ctx.coeff))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Terms in graded lexicographic order, leading term first.
    pub fn terms(&self) -> Vec<(&[u32], &R)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        v.sort_by(|a, b| grlex(a.0, b.0));
        v
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.ctx.arity(), "evaluation point has the wrong arity");
        let mut acc = R::zero(&self.ctx.coeff);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = term * x.pow(k);
                }
            }
            acc = acc + term;
        }
        acc
    }

    fn same_ring(&self, other: &Self) {
        assert!(self.ctx == other.ctx, "polynomials over different variable lists");
    }
}

impl<R: Ring> Add for MPoly<R> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<R: Ring> Sub for MPoly<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for MPoly<R> {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<R: Ring> Mul for MPoly<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        let mut out = Self::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Ring> Ring for MPoly<R> {
    type Ctx = PolyCtx<R::Ctx>;

    fn ctx(&self) -> Self::Ctx {
        self.ctx.clone()
    }

    fn zero(ctx: &Self::Ctx) -> Self {
        MPoly::zero(ctx)
    }

    fn one(ctx: &Self::Ctx) -> Self {
        MPoly::one(ctx)
    }

    fn from_i64(n: i64, ctx: &Self::Ctx) -> Self {
        MPoly::constant(R::from_i64(n, &ctx.coeff), ctx)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn monomial_text(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    parts.join(" ")
}

impl<R: Ring> MPoly<R> {
    fn write_with(&self, f: &mut fmt::Formatter<'_>, show: impl Fn(&R) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().into_iter().enumerate() {
            let text = show(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_text(&self.ctx.vars, e);
            if mono.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude} * {mono}")?;
            }
        }
        Ok(())
    }
}

/// `c * x0^a0 ... xn^an + ...` in graded lexicographic order.
impl<R: Ring + fmt::Display> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |c| c.to_string())
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |c| format!("{c:?}"))
    }
}

#[derive(Serialize)]
struct Term<'a> {
    exponents: &'a [u32],
    coeff: String,
}

/// `{"variables": [...], "terms": [{"exponents": [...], "coeff": "..."}]}`
impl<R: Ring + fmt::Display> Serialize for MPoly<R> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self.terms().into_iter().map(|(e, c)| Term { exponents: e, coeff: c.to_string() }).collect();
        let mut st = s.serialize_struct("MPoly", 2)?;
        st.serialize_field("variables", &*self.ctx.vars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{rat, Rational};

    type P = MPoly<Rational>;

    #[test]
    fn arithmetic_and_text() {
        let ctx = PolyCtx::indexed("x", 2);
        let x0 = P::var(0, &ctx);
        let x1 = P::var(1, &ctx);
        let sq = (x0.clone() + x1.clone()).pow(2);
        assert_eq!(sq.to_string(), "1 * x0^2 + 2 * x0 x1 + 1 * x1^2");
        let diff = x1.clone() - x0.clone() * P::from_i64(3, &ctx) + P::one(&ctx);
        assert_eq!(diff.to_string(), "-3 * x0 + 1 * x1 + 1");
        assert_eq!(sq.evaluate(&[rat(2), rat(3)]), rat(25));
        assert!((x0.clone() - x0).is_zero());
    }

    #[test]
    #[should_panic(expected = "different variable lists")]
    fn mixing_rings_panics() {
        let a = P::var(0, &PolyCtx::indexed("x", 2));
        let b = P::var(0, &PolyCtx::indexed("t", 2));
        let _ = a + b;
    }
}
