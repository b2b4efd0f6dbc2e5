use crate::algebra::{CaoId, CaoKind, CaoSign};
use crate::quad::QuadScalar;

use super::{BasisKey, FockState};

fn parity_sign(bits: &[u8]) -> i64 {
    if bits.iter().map(|&b| b as u32).sum::<u32>() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_index(c: CaoId, n: usize) -> usize {
    assert!(c.index >= 1 && c.index <= n, "{c} does not act on a module with n={n}");
    c.index - 1
}

/// `b_j⁺` raises `k_j`; `f_j⁺` sets `l_j` with sign `(−1)^(l₁+⋯+l_{j−1})`.
pub fn apply_create(c: CaoId, v: &FockState) -> FockState {
    assert!(c.is_creation(), "{c} is not a creation operator");
    let j = check_index(c, v.n());
    let p = v.p();
    v.map_linear(|key| {
        let mut out = FockState::zero(key.n(), p);
        match c.kind {
            CaoKind::B => out.add_term(key.with_k(j, 1).expect("raise"), QuadScalar::one_in(p)),
            CaoKind::F => {
                if key.l[j] == 0 {
                    out.add_term(key.with_l(j, 1), QuadScalar::from_int(parity_sign(&key.l[..j]), p));
                }
            }
        }
        out
    })
}

pub fn apply_annihilate(c: CaoId, v: &FockState) -> FockState {
    assert!(!c.is_creation(), "{c} is not an annihilation operator");
    let j = check_index(c, v.n());
    let p = v.p();
    v.map_linear(|key| match c.kind {
        CaoKind::F => f_minus(j, key, p),
        CaoKind::B => b_minus(j, key, p),
    })
}

pub fn apply_cao(c: CaoId, v: &FockState) -> FockState {
    match c.sign {
        CaoSign::Plus => apply_create(c, v),
        CaoSign::Minus => apply_annihilate(c, v),
    }
}

fn f_minus(j: usize, key: &BasisKey, p: u64) -> FockState {
    let mut out = FockState::zero(key.n(), p);
    let int = |x: i64| QuadScalar::from_int(x, p);
    let total = key.level() as i64;
    let kj = key.k[j] as i64;
    let before_j = parity_sign(&key.l[..j]);

    if key.l[j] == 1 {
        out.add_term(key.with_l(j, 0), int(before_j * (p as i64 + 1 + kj - total)));
    }
    if kj >= 1 {
        let lowered = key.with_k(j, -1).expect("k_j ≥ 1");
        out.add_term(lowered.clone(), QuadScalar::sqrt_p(p).scale_int(parity_sign(&key.l) * kj));
        if key.l[j] == 0 && kj >= 2 {
            let target = key.with_k(j, -2).expect("k_j ≥ 2").with_l(j, 1);
            out.add_term(target, int(-before_j * kj * (kj - 1)));
        }
        for i in (0..key.n()).filter(|&i| i != j) {
            let before_i = parity_sign(&key.l[..i]);
            let ki = key.k[i] as i64;
            if key.l[i] == 0 && ki >= 1 {
                let target = lowered.with_k(i, -1).expect("k_i ≥ 1").with_l(i, 1);
                out.add_term(target, int(-before_i * ki * kj));
            }
            if key.l[i] == 1 {
                let target = lowered.with_k(i, 1).expect("raise").with_l(i, 0);
                out.add_term(target, int(before_i * kj));
            }
        }
    }
    out
}

fn b_minus(j: usize, key: &BasisKey, p: u64) -> FockState {
    let mut out = FockState::zero(key.n(), p);
    let int = |x: i64| QuadScalar::from_int(x, p);
    let total = key.level() as i64;
    let kj = key.k[j] as i64;
    let lj = key.l[j] as i64;
    let after_j = parity_sign(&key.l[j + 1..]);

    if kj >= 1 {
        let target = key.with_k(j, -1).expect("k_j ≥ 1");
        out.add_term(target, int(kj * (p as i64 + 1 - lj - total)));
    }
    if lj == 1 {
        let lowered = key.with_l(j, 0);
        out.add_term(lowered.clone(), QuadScalar::sqrt_p(p).scale_int(after_j));
        for i in (0..key.n()).filter(|&i| i != j) {
            let theta = if i < j { 1 } else { -1 };
            let from_i = parity_sign(&key.l[i..]);
            let ki = key.k[i] as i64;
            if key.l[i] == 0 && ki >= 1 {
                let target = lowered.with_k(i, -1).expect("k_i ≥ 1").with_l(i, 1);
                out.add_term(target, int(after_j * from_i * theta * ki));
            }
            if key.l[i] == 1 {
                let target = lowered.with_k(i, 1).expect("raise").with_l(i, 0);
                out.add_term(target, int(-after_j * from_i * theta));
            }
        }
    }
    out
}

/// `X(p;k,l) = (−1)^(Σl) √p |k,l⟩ − Σ_i (−1)^(l₁+⋯+l_i) l_i |k_i+1,l_i−1⟩
///            − Σ_i (−1)^(l₁+⋯+l_i) δ_{l_i,0} k_i |k_i−1,l_i+1⟩`
pub fn x_vector(key: &BasisKey, p: u64) -> FockState {
    let mut out = FockState::zero(key.n(), p);
    out.add_term(key.clone(), QuadScalar::sqrt_p(p).scale_int(parity_sign(&key.l)));
    for i in 0..key.n() {
        let through_i = parity_sign(&key.l[..=i]);
        if key.l[i] == 1 {
            let target = key.with_k(i, 1).expect("raise").with_l(i, 0);
            out.add_term(target, QuadScalar::from_int(-through_i, p));
        } else if key.k[i] >= 1 {
            let target = key.with_k(i, -1).expect("k_i ≥ 1").with_l(i, 1);
            out.add_term(target, QuadScalar::from_int(-through_i * key.k[i] as i64, p));
        }
    }
    out
}

/// Image of `X(p;k,l)` under a creation or annihilation operator, expressed
/// through X-vectors and basis vectors without expanding the action.
///
/// For `f_j⁻` the sign is `(−1)^(l₁+⋯+l_j)`: with `l_j = 1` this is the
/// negative of `(−1)^(l₁+⋯+l_{j−1})`.
pub fn x_vector_image(c: CaoId, key: &BasisKey, p: u64) -> FockState {
    let j = check_index(c, key.n());
    let mut out = FockState::zero(key.n(), p);
    let kj = key.k[j] as i64;
    let lj = key.l[j];
    let below = p as i64 - key.level() as i64;
    let int = |x: i64| QuadScalar::from_int(x, p);
    match (c.kind, c.sign) {
        (CaoKind::B, CaoSign::Plus) => {
            out = x_vector(&key.with_k(j, 1).expect("raise"), p);
            if lj == 0 {
                out.add_term(key.with_l(j, 1), int(parity_sign(&key.l[..=j])));
            }
        }
        (CaoKind::F, CaoSign::Plus) => {
            out.add_term(key.with_k(j, 1).expect("raise"), int(1));
            if lj == 0 {
                out.add_scaled(&x_vector(&key.with_l(j, 1), p), &int(-parity_sign(&key.l[..j])));
            }
        }
        (CaoKind::B, CaoSign::Minus) => {
            if kj >= 1 {
                out = x_vector(&key.with_k(j, -1).expect("k_j ≥ 1"), p).scale(&int(kj * below));
            }
        }
        (CaoKind::F, CaoSign::Minus) => {
            if lj == 1 {
                out = x_vector(&key.with_l(j, 0), p).scale(&int(parity_sign(&key.l[..=j]) * below));
            }
        }
    }
    out
}
