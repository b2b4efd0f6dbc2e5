use crate::algebra::{cao_embed, CaoId};
use crate::quad::QuadScalar;

use super::{apply_annihilate, weight_of, BasisKey, FockOracle, FockState};

/// `⟨key1|key2⟩`: the `v₀` coefficient of
/// `(f_n⁻)^l_n (b_n⁻)^k_n ⋯ (f₁⁻)^l₁ (b₁⁻)^k₁ |key2⟩`.
pub fn key_inner_product(a: &BasisKey, b: &BasisKey, p: u64) -> QuadScalar {
    key_inner_product_with(a, b, p, &mut |c, v| apply_annihilate(c, v))
}

fn key_inner_product_with(
    a: &BasisKey,
    b: &BasisKey,
    p: u64,
    annihilate: &mut dyn FnMut(CaoId, &FockState) -> FockState,
) -> QuadScalar {
    if weight_of(a, p) != weight_of(b, p) {
        return QuadScalar::zero_in(p);
    }
    let mut v = FockState::basis(b.clone(), p);
    for i in 0..a.n() {
        for _ in 0..a.k()[i] {
            v = annihilate(CaoId::b_minus(i + 1), &v);
        }
        if a.l()[i] == 1 {
            v = annihilate(CaoId::f_minus(i + 1), &v);
        }
        if v.is_zero() {
            break;
        }
    }
    v.coefficient(&BasisKey::vacuum(a.n()))
}

/// Bilinear symmetric form with `⟨v₀|v₀⟩ = 1`.
pub fn inner_product(u: &FockState, v: &FockState) -> QuadScalar {
    inner_product_by(u, v, &mut |c, s| apply_annihilate(c, s))
}

/// The same form evaluated through the rewriting oracle.
pub fn inner_product_with(oracle: &FockOracle, u: &FockState, v: &FockState) -> QuadScalar {
    inner_product_by(u, v, &mut |c, s| oracle.apply(cao_embed(c), s))
}

fn inner_product_by(
    u: &FockState,
    v: &FockState,
    annihilate: &mut dyn FnMut(CaoId, &FockState) -> FockState,
) -> QuadScalar {
    assert_eq!((u.n(), u.p()), (v.n(), v.p()), "states from different modules");
    let p = u.p();
    let mut total = QuadScalar::zero_in(p);
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let ip = key_inner_product_with(a, b, p, annihilate);
            if !ip.is_zero() {
                total = total + ca * cb * ip;
            }
        }
    }
    total
}
