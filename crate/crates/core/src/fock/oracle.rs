use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::{bracket, AlgebraElement, GeneratorId, Parity};
use crate::quad::{QuadScalar, Rational};

use super::{BasisKey, FockState};

/// Computes the action of q(n+1) on V̄_p from the structure constants and the
/// vacuum data alone, by moving each generator through the creation word of
/// a basis key.
pub struct FockOracle {
    n: usize,
    p: u64,
    memo: Mutex<HashMap<(GeneratorId, BasisKey), FockState>>,
}

/// Position of a creation generator in the word `b₁ f₁ b₂ f₂ ⋯`.
fn position(g: GeneratorId) -> usize {
    2 * (g.i - 1) + g.parity.bit() as usize
}

impl FockOracle {
    pub fn new(n: usize, p: u64) -> Self {
        assert!(n >= 1 && p >= 1, "need n ≥ 1 and p ≥ 1");
        FockOracle { n, p, memo: Mutex::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn apply(&self, x: GeneratorId, v: &FockState) -> FockState {
        assert!(x.fits(self.n), "{x} is not a generator of q({})", self.n + 1);
        assert_eq!((v.n(), v.p()), (self.n, self.p), "state from a different module");
        v.map_linear(|key| self.act(x, key))
    }

    pub fn apply_element(&self, x: &AlgebraElement<Rational>, v: &FockState) -> FockState {
        let mut out = FockState::zero(self.n, self.p);
        for (g, c) in x.terms() {
            out.add_scaled(&self.apply(*g, v), &QuadScalar::from_rational(c.clone(), self.p));
        }
        out
    }

    fn act(&self, x: GeneratorId, key: &BasisKey) -> FockState {
        let memo_key = (x, key.clone());
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&memo_key) {
            return hit.clone();
        }
        let out = self.compute(x, key);
        self.memo.lock().expect("memo lock").insert(memo_key, out.clone());
        out
    }

    fn act_state(&self, x: GeneratorId, v: &FockState) -> FockState {
        v.map_linear(|key| self.act(x, key))
    }

    fn compute(&self, x: GeneratorId, key: &BasisKey) -> FockState {
        let p = self.p;
        let Some((first, rest)) = split_first(key) else {
            return self.on_vacuum(x);
        };
        if x.is_creation() && position(x) <= position(first) {
            if position(x) < position(first) || x.parity == Parity::Even {
                return FockState::basis(prepend(x, key), p);
            }
            // x x = ½ [[x,x]] for odd x
            let half = QuadScalar::from_rational(Rational::new(1.into(), 2.into()), p);
            let sq = bracket::<Rational>(x, x, &());
            return self.apply_element(&sq, &FockState::basis(rest, p)).scale(&half);
        }
        let rest_state = FockState::basis(rest, p);
        let commuted = self.apply_element(&bracket(x, first, &()), &rest_state);
        let moved = self.act_state(first, &self.act_state(x, &rest_state));
        let sign = QuadScalar::from_int(x.parity.sign_with(first.parity), p);
        commuted.plus(&moved.scale(&sign))
    }

    fn on_vacuum(&self, x: GeneratorId) -> FockState {
        let p = self.p;
        let vac = BasisKey::vacuum(self.n);
        match (x.i, x.j, x.parity) {
            (0, 0, Parity::Even) => FockState::basis(vac, p).scale(&QuadScalar::from_int(p as i64, p)),
            (0, 0, Parity::Odd) => FockState::basis(vac, p).scale(&QuadScalar::sqrt_p(p)),
            (i, 0, _) => FockState::basis(prepend(GeneratorId::new(i, 0, x.parity), &vac), p),
            _ => FockState::zero(self.n, p),
        }
    }
}

/// Leftmost creation generator of the key's word, and the key with it removed.
fn split_first(key: &BasisKey) -> Option<(GeneratorId, BasisKey)> {
    let i = (0..key.n()).find(|&i| key.k[i] > 0 || key.l[i] > 0)?;
    if key.k[i] > 0 {
        Some((GeneratorId::even(i + 1, 0), key.with_k(i, -1).expect("k_i > 0")))
    } else {
        Some((GeneratorId::odd(i + 1, 0), key.with_l(i, 0)))
    }
}

/// Key of `x·|key⟩` when `x` sorts at or before the key's first generator.
fn prepend(x: GeneratorId, key: &BasisKey) -> BasisKey {
    let i = x.i - 1;
    match x.parity {
        Parity::Even => key.with_k(i, 1).expect("raise"),
        Parity::Odd => key.with_l(i, 1),
    }
}
