//! Whole-module consistency checks on V̄_p.

use serde::Serialize;

use crate::algebra::{all_caos, bracket, cao_embed, AlgebraElement, CaoId, GeneratorId, Parity};
use crate::quad::{QuadScalar, Rational};

use super::{apply_cao, inner_product, inner_product_with, keys_up_to, BasisKey, FockOracle, FockState};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepresentationFailure {
    pub x: String,
    pub y: String,
    pub key: BasisKey,
}

/// Pairs `(x, y)` of CAOs and keys of level ≤ `cap` where the action of
/// `[[x, y]]` differs from `x∘y − (−1)^{σθ} y∘x`.
pub fn representation_failures(n: usize, p: u64, cap: u32) -> Vec<RepresentationFailure> {
    let oracle = FockOracle::new(n, p);
    let keys = keys_up_to(n, cap);
    let mut out = Vec::new();
    for x in all_caos(n) {
        for y in all_caos(n) {
            let br: AlgebraElement<Rational> = bracket(cao_embed(x), cao_embed(y), &());
            let sign = QuadScalar::from_int(-x.parity().sign_with(y.parity()), p);
            for key in &keys {
                let v = FockState::basis(key.clone(), p);
                let lhs = oracle.apply_element(&br, &v);
                let mut rhs = apply_cao(x, &apply_cao(y, &v));
                rhs.add_scaled(&apply_cao(y, &apply_cao(x, &v)), &sign);
                if lhs != rhs {
                    out.push(RepresentationFailure { x: x.to_string(), y: y.to_string(), key: key.clone() });
                }
            }
        }
    }
    out
}

/// `I = Σ_{i=0}^n e_ii^0̄`
pub fn center_element(n: usize) -> AlgebraElement<Rational> {
    let mut out = AlgebraElement::zero(&());
    for i in 0..=n {
        out.add_term(GeneratorId::new(i, i, Parity::Even), crate::quad::rat(1));
    }
    out
}

/// Keys of level ≤ `cap` on which `I` does not act as `p`.
pub fn center_failures(n: usize, p: u64, cap: u32) -> Vec<BasisKey> {
    let oracle = FockOracle::new(n, p);
    let centre = center_element(n);
    keys_up_to(n, cap)
        .into_iter()
        .filter(|key| {
            let v = FockState::basis(key.clone(), p);
            oracle.apply_element(&centre, &v) != v.scale(&QuadScalar::from_int(p as i64, p))
        })
        .collect()
}

/// Violated instances of `b⁻v₀ = f⁻v₀ = 0` and of the level-one relations
/// `b_i⁻b_j⁺v₀ = f_i⁻f_j⁺v₀ = δ_ij p v₀`, `f_i⁻b_j⁺v₀ = b_i⁻f_j⁺v₀ = δ_ij √p v₀`.
pub fn vacuum_relation_failures(n: usize, p: u64) -> Vec<String> {
    let vac = FockState::vacuum(n, p);
    let mut out = Vec::new();
    for i in 1..=n {
        for c in [CaoId::b_minus(i), CaoId::f_minus(i)] {
            if !apply_cao(c, &vac).is_zero() {
                out.push(format!("{c} v0 != 0"));
            }
        }
        for j in 1..=n {
            for (minus, plus) in [
                (CaoId::b_minus(i), CaoId::b_plus(j)),
                (CaoId::f_minus(i), CaoId::f_plus(j)),
                (CaoId::f_minus(i), CaoId::b_plus(j)),
                (CaoId::b_minus(i), CaoId::f_plus(j)),
            ] {
                let value = if i != j {
                    QuadScalar::zero_in(p)
                } else if minus.kind == plus.kind {
                    QuadScalar::from_int(p as i64, p)
                } else {
                    QuadScalar::sqrt_p(p)
                };
                if apply_cao(minus, &apply_cao(plus, &vac)) != vac.scale(&value) {
                    out.push(format!("{minus} {plus} v0 != ({value}) v0"));
                }
            }
        }
    }
    out
}

/// Key pairs of level ≤ `cap` where the form is not symmetric or where the
/// closed-form and oracle evaluations disagree.
pub fn form_failures(n: usize, p: u64, cap: u32) -> Vec<(BasisKey, BasisKey)> {
    let oracle = FockOracle::new(n, p);
    let keys = keys_up_to(n, cap);
    let mut out = Vec::new();
    for a in &keys {
        for b in &keys {
            let (u, v) = (FockState::basis(a.clone(), p), FockState::basis(b.clone(), p));
            let ab = inner_product(&u, &v);
            if ab != inner_product(&v, &u) || ab != inner_product_with(&oracle, &u, &v) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
