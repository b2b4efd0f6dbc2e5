//! Elementary and complete symmetric polynomials, hook Schur functions and
//! the character of V_p.

use crate::poly::{MPoly, PolyCtx};
use crate::quad::{rat, Rational};
use crate::structure::{vp_mult, vp_weights};

pub type Poly = MPoly<Rational>;

/// Variables `x0, …, xn` of a character of q(n+1).
pub fn char_ctx(n: usize) -> PolyCtx<()> {
    PolyCtx::indexed("x", n + 1)
}

/// `e_r`; zero for `r < 0` or `r` above the number of variables.
pub fn elem_sym(r: i64, ctx: &PolyCtx<()>) -> Poly {
    let mut out = Poly::zero(ctx);
    if r < 0 {
        return out;
    }
    let m = ctx.arity();
    for mask in 0u64..(1 << m) {
        if mask.count_ones() as i64 == r {
            let e = (0..m).map(|i| ((mask >> i) & 1) as u32).collect();
            out.add_term(e, rat(1));
        }
    }
    out
}

/// `h_r`; zero for `r < 0`.
pub fn complete_sym(r: i64, ctx: &PolyCtx<()>) -> Poly {
    fn go(slot: usize, rest: u32, e: &mut Vec<u32>, out: &mut Poly) {
        if slot + 1 == e.len() {
            e[slot] = rest;
            out.add_term(e.clone(), rat(1));
            return;
        }
        for k in 0..=rest {
            e[slot] = k;
            go(slot + 1, rest - k, e, out);
        }
        e[slot] = 0;
    }
    let mut out = Poly::zero(ctx);
    if r >= 0 && ctx.arity() > 0 {
        go(0, r as u32, &mut vec![0; ctx.arity()], &mut out);
    }
    out
}

/// `s_(a|b) = h_{a+1}e_b − h_{a+2}e_{b−1} + ⋯ + (−1)^b h_{a+b+1}`
pub fn schur_hook(a: u32, b: u32, ctx: &PolyCtx<()>) -> Poly {
    (0..=b as i64).fold(Poly::zero(ctx), |acc, j| {
        let term = complete_sym(a as i64 + 1 + j, ctx) * elem_sym(b as i64 - j, ctx);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `h_{p−n}e_n + h_{p−n+2}e_{n−2} + ⋯`, ending with `h_p` (n even) or
/// `h_{p−1}e_1` (n odd).
pub fn char_formula(n: usize, p: u64) -> Poly {
    assert!(p >= 1, "p must be positive");
    let ctx = char_ctx(n);
    (0..=n / 2).fold(Poly::zero(&ctx), |acc, j| {
        let h = p as i64 - n as i64 + 2 * j as i64;
        acc + complete_sym(h, &ctx) * elem_sym(n as i64 - 2 * j as i64, &ctx)
    })
}

/// `Σ_{i=0}^{min(n,p−1)} s_(p−1−i | i)`
pub fn char_hook_sum(n: usize, p: u64) -> Poly {
    assert!(p >= 1, "p must be positive");
    let ctx = char_ctx(n);
    (0..=n.min(p as usize - 1)).fold(Poly::zero(&ctx), |acc, i| acc + schur_hook(p as u32 - 1 - i as u32, i as u32, &ctx))
}

/// `Σ_λ dim V_p(λ) x^λ`
pub fn char_from_weights(n: usize, p: u64) -> Poly {
    let ctx = char_ctx(n);
    let mut out = Poly::zero(&ctx);
    for w in vp_weights(n, p) {
        let e = w.components().iter().map(|&c| u32::try_from(c).expect("V_p weights are nonnegative")).collect();
        out.add_term(e, rat(vp_mult(&w, n, p) as i64));
    }
    out
}

/// Value at `x0 = ⋯ = xn = 1`.
pub fn at_ones(f: &Poly) -> Rational {
    f.evaluate(&vec![rat(1); f.poly_ctx().arity()])
}
