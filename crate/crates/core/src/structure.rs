//! The maximal submodule M_p of V̄_p and the simple quotient V_p.

use std::collections::{BTreeMap, VecDeque};

use num_integer::binomial;
use serde::Serialize;

use crate::algebra::{all_caos, CaoId};
use crate::error::{Error, Result};
use crate::fock::{
    apply_annihilate, apply_cao, key_inner_product, keys_with_occupation, occupations_at_level, weight_of, x_vector,
    BasisKey, FockState, Weight,
};
use crate::lemma::build_a;
use crate::linalg::Matrix;
use crate::quad::QuadScalar;
use crate::scalar::Field;
use crate::QuadMatrix;

fn occupation_for(weight: &Weight, n: usize, p: u64) -> Option<Vec<u32>> {
    if weight.n() != n {
        return None;
    }
    weight.occupation(p)
}

fn nonzero_count(m: &[u32]) -> u32 {
    m.iter().filter(|&&c| c > 0).count() as u32
}

/// `dim V̄_p(λ_m) = 2^r`, `r` the number of nonzero `m_i`; 0 off the weight lattice.
pub fn mult_bar(weight: &Weight, n: usize, p: u64) -> u64 {
    occupation_for(weight, n, p).map_or(0, |m| 1 << nonzero_count(&m))
}

/// `dim V_p(λ_m)`: `2^r` below level p, `2^(r−1)` at level p, 0 above.
pub fn vp_mult(weight: &Weight, n: usize, p: u64) -> u64 {
    let Some(m) = occupation_for(weight, n, p) else { return 0 };
    let level: u64 = m.iter().map(|&c| c as u64).sum();
    let r = nonzero_count(&m);
    match level.cmp(&p) {
        std::cmp::Ordering::Less => 1 << r,
        std::cmp::Ordering::Equal => 1 << (r - 1),
        std::cmp::Ordering::Greater => 0,
    }
}

/// Every weight of V_p, by level.
pub fn vp_weights(n: usize, p: u64) -> Vec<Weight> {
    (0..=p as u32)
        .flat_map(|lv| occupations_at_level(n, lv))
        .map(|m| Weight::from_occupation(&m, p))
        .collect()
}

fn require_occupation(weight: &Weight, n: usize, p: u64) -> Result<Vec<u32>> {
    occupation_for(weight, n, p)
        .ok_or_else(|| Error::Precondition(format!("{weight} is not a weight of the module with n={n}, p={p}")))
}

/// Largest index with `m_j > 0`.
fn last_occupied(m: &[u32]) -> Option<usize> {
    m.iter().rposition(|&c| c > 0)
}

/// Keys spanning a complement of M_p(λ) in V̄_p(λ). At level p these have
/// `k_j = m_j − 1, l_j = 1` for the largest `j` with `m_j > 0`.
pub fn vp_representatives(weight: &Weight, n: usize, p: u64) -> Result<Vec<BasisKey>> {
    let m = require_occupation(weight, n, p)?;
    let level = weight.level() as u64;
    if level > p {
        return Err(Error::Precondition(format!("{weight} has level {level} > p = {p}; V_p has no such weight")));
    }
    let keys = keys_with_occupation(&m);
    if level < p {
        return Ok(keys);
    }
    let j = last_occupied(&m).expect("level p ≥ 1");
    Ok(keys.into_iter().filter(|k| k.l()[j] == 1).collect())
}

/// A basis of M_p(λ). At level p: the X-vectors whose key has `l_j = 0` for
/// the largest occupied `j`. Above p: every basis key. Below p: nothing.
pub fn mp_basis(weight: &Weight, n: usize, p: u64, level_cap: u32) -> Result<Vec<FockState>> {
    let m = require_occupation(weight, n, p)?;
    let level = weight.level() as u64;
    if level > level_cap as u64 {
        return Err(Error::Precondition(format!("{weight} has level {level} above the cap {level_cap}")));
    }
    Ok(match level.cmp(&p) {
        std::cmp::Ordering::Less => Vec::new(),
        std::cmp::Ordering::Equal => {
            let j = last_occupied(&m).expect("level p ≥ 1");
            keys_with_occupation(&m).into_iter().filter(|k| k.l()[j] == 0).map(|k| x_vector(&k, p)).collect()
        }
        std::cmp::Ordering::Greater => keys_with_occupation(&m).into_iter().map(|k| FockState::basis(k, p)).collect(),
    })
}

/// `Σ_i C(p−1, i)·C(p+n−i, n−i)`
pub fn dim_vp(n: usize, p: u64) -> u64 {
    assert!(p >= 1, "p must be positive");
    (0..=n as u64).map(|i| binomial(p - 1, i) * binomial(p + n as u64 - i, n as u64 - i)).sum()
}

/// gl(n+1) highest weights `(p−i, 1^i, 0, …)` for `0 ≤ i ≤ min(n, p−1)`.
pub fn gl_decomposition(n: usize, p: u64) -> Vec<Vec<i64>> {
    assert!(p >= 1, "p must be positive");
    (0..=n.min(p as usize - 1))
        .map(|i| {
            let mut w = vec![0i64; n + 1];
            w[0] = p as i64 - i as i64;
            w[1..=i].iter_mut().for_each(|c| *c = 1);
            w
        })
        .collect()
}

/// Weyl dimension `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)` of a dominant gl weight.
pub fn weyl_dim(lambda: &[i64]) -> u64 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            let f = lambda[i] - lambda[j] + (j - i) as i64;
            assert!(f > 0, "{lambda:?} is not dominant");
            num *= f as u128;
            den *= (j - i) as u128;
        }
    }
    debug_assert_eq!(num % den, 0);
    (num / den) as u64
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub weight: Weight,
    pub basis: Vec<BasisKey>,
    pub entries: QuadMatrix,
}

impl GramMatrix {
    pub fn order(&self) -> usize {
        self.basis.len()
    }
}

fn gram_over(weight: &Weight, basis: Vec<BasisKey>, p: u64) -> GramMatrix {
    let size = basis.len();
    let mut entries = Matrix::zeros(size, size, &p);
    for a in 0..size {
        for b in a..size {
            let v = key_inner_product(&basis[a], &basis[b], p);
            entries[(b, a)] = v.clone();
            entries[(a, b)] = v;
        }
    }
    GramMatrix { weight: weight.clone(), basis, entries }
}

/// Gram matrix of V_p on the representative keys of `weight`.
pub fn gram(weight: &Weight, n: usize, p: u64) -> Result<GramMatrix> {
    let basis = vp_representatives(weight, n, p)?;
    Ok(gram_over(weight, basis, p))
}

/// Gram matrix of V̄_p on all `2^r` keys of `weight`.
pub fn gram_bar(weight: &Weight, n: usize, p: u64) -> Result<GramMatrix> {
    let m = require_occupation(weight, n, p)?;
    Ok(gram_over(weight, keys_with_occupation(&m), p))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositivityCertificate {
    pub minors: Vec<QuadScalar>,
    pub positive_definite: bool,
}

/// Sylvester's criterion with exact signs of every leading principal minor.
pub fn is_positive_definite(g: &GramMatrix) -> PositivityCertificate {
    sylvester(&g.entries)
}

pub fn sylvester(m: &QuadMatrix) -> PositivityCertificate {
    assert!(m.is_symmetric(), "Sylvester's criterion needs a symmetric matrix");
    let minors = m.leading_minors();
    let positive_definite = minors.iter().all(|d| d.signum() == crate::Sign::Positive);
    PositivityCertificate { minors, positive_definite }
}

/// `X(p; (p,0,…,0), 0)`, the primitive vector generating M_p.
pub fn singular_vector(n: usize, p: u64) -> FockState {
    assert!(n >= 1 && p >= 1, "need n ≥ 1 and p ≥ 1");
    let mut k = vec![0; n];
    k[0] = p as u32;
    x_vector(&BasisKey::new(k, vec![0; n]).expect("valid key"), p)
}

/// `d(k,l) = k₁!⋯k_n! (p−1)(p−2)⋯(p−Σm_i)`
pub fn d_factor(key: &BasisKey, p: u64) -> i64 {
    let fact = |k: u32| (1..=k as i64).product::<i64>();
    let kf: i64 = key.k().iter().map(|&k| fact(k)).product();
    kf * (1..=key.level() as i64).map(|i| p as i64 - i).product::<i64>()
}

/// Checks `H_{l,l'} = √p · d(k,l) · (A⁻¹)_{l',l}` with `A = A(√p; m_{i₁}, …, m_{i_r})`
/// over the occupied positions `i₁ < ⋯ < i_r`, for a weight below level p
/// with every `m_i > 0`.
pub fn gram_closed_form_check(weight: &Weight, n: usize, p: u64) -> Result<bool> {
    let m = require_occupation(weight, n, p)?;
    if m.contains(&0) {
        return Err(Error::Precondition(format!("{weight} has an unoccupied mode; the closed form needs all m_i > 0")));
    }
    if weight.level() as u64 >= p {
        return Err(Error::Precondition(format!("{weight} is not below level p = {p}")));
    }
    let t: Vec<QuadScalar> = m.iter().map(|&c| QuadScalar::from_int(c as i64, p)).collect();
    let sqrt_p = QuadScalar::sqrt_p(p);
    let a_inv = build_a(&sqrt_p, &t).inverse().expect("A is invertible off the quadric");
    let index = |key: &BasisKey| crate::lemma::index_of(key.l());
    let h = gram_bar(weight, n, p)?;
    for (a, ka) in h.basis.iter().enumerate() {
        for (b, kb) in h.basis.iter().enumerate() {
            let expected = &sqrt_p * &a_inv[(index(kb), index(ka))].scale_int(d_factor(ka, p));
            if h.entries[(a, b)] != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Incremental row-echelon basis of a set of states inside one weight space.
#[derive(Debug, Clone)]
pub struct EchelonSpan {
    p: u64,
    rows: Vec<(BasisKey, FockState)>,
}

impl EchelonSpan {
    pub fn new(p: u64) -> Self {
        EchelonSpan { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, v: &FockState) -> FockState {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            let c = v.coefficient(pivot);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        v
    }

    /// Adds `v` if it is independent; returns whether the span grew.
    pub fn insert(&mut self, v: &FockState) -> bool {
        let r = self.reduce(v);
        let Some((pivot, c)) = r.terms().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let r = r.scale(&c.inv().expect("nonzero pivot"));
        for (_, row) in self.rows.iter_mut() {
            let c = row.coefficient(&pivot);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn contains(&self, v: &FockState) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn basis(&self) -> impl Iterator<Item = &FockState> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Rank of a family of states.
pub fn span_dim(states: &[FockState], p: u64) -> usize {
    let mut span = EchelonSpan::new(p);
    states.iter().filter(|s| span.insert(s)).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureWeight {
    pub weight: Weight,
    pub closure_dim: usize,
    pub mp_dim: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub n: usize,
    pub p: u64,
    pub level_cap: u32,
    pub weights: Vec<ClosureWeight>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.weights.iter().all(|w| w.equal)
    }
}

fn split_by_weight(v: &FockState) -> BTreeMap<Weight, FockState> {
    let mut out: BTreeMap<Weight, FockState> = BTreeMap::new();
    for (k, c) in v.terms() {
        out.entry(weight_of(k, v.p()))
            .or_insert_with(|| FockState::zero(v.n(), v.p()))
            .add_term(k.clone(), c.clone());
    }
    out
}

/// Smallest subspace containing the singular vector and closed under every
/// creation and annihilation operator, truncated at `level_cap`, compared
/// with span(mp_basis) at each level-p weight.
///
/// With `level_cap ≤ p` the closure misses part of M_p.
pub fn cao_closure_check(n: usize, p: u64, level_cap: u32) -> ClosureReport {
    let caos = all_caos(n);
    let mut spans: BTreeMap<Weight, EchelonSpan> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let push = |v: FockState, spans: &mut BTreeMap<Weight, EchelonSpan>, queue: &mut VecDeque<FockState>| {
        for (w, part) in split_by_weight(&v) {
            if w.level() > level_cap as i64 {
                continue;
            }
            let span = spans.entry(w).or_insert_with(|| EchelonSpan::new(p));
            let reduced = span.reduce(&part);
            if span.insert(&reduced) {
                queue.push_back(reduced);
            }
        }
    };
    push(singular_vector(n, p), &mut spans, &mut queue);
    while let Some(v) = queue.pop_front() {
        for &c in &caos {
            push(apply_cao(c, &v), &mut spans, &mut queue);
        }
    }
    let weights = occupations_at_level(n, p as u32)
        .into_iter()
        .map(|m| {
            let weight = Weight::from_occupation(&m, p);
            let mp = mp_basis(&weight, n, p, level_cap).expect("level-p weight");
            let closure = spans.remove(&weight).unwrap_or_else(|| EchelonSpan::new(p));
            let mp_dim = span_dim(&mp, p);
            let equal = closure.dim() == mp_dim && mp.iter().all(|v| closure.contains(v));
            ClosureWeight { weight, closure_dim: closure.dim(), mp_dim, equal }
        })
        .collect();
    ClosureReport { n, p, level_cap, weights }
}

/// Rewrites a single-weight state in V_p on the representative keys, by
/// subtracting its component in M_p.
pub fn reduce_to_representatives(v: &FockState) -> Result<FockState> {
    let (n, p) = (v.n(), v.p());
    if v.is_zero() {
        return Ok(v.clone());
    }
    let weight = v.weight().ok_or_else(|| Error::Precondition("state is not a weight vector".into()))?;
    let level = weight.level() as u64;
    if level > p {
        return Ok(FockState::zero(n, p));
    }
    if level < p {
        return Ok(v.clone());
    }
    let reps = vp_representatives(&weight, n, p)?;
    let mp = mp_basis(&weight, n, p, level as u32)?;
    let keys = keys_with_occupation(&weight.occupation(p).expect("weight of V̄_p"));
    // columns: representatives then M_p vectors; rows: all keys of the weight
    let cols: Vec<FockState> = reps.iter().map(|k| FockState::basis(k.clone(), p)).chain(mp).collect();
    let a = Matrix::from_fn(keys.len(), cols.len(), &p, |r, c| cols[c].coefficient(&keys[r]));
    let b: Vec<QuadScalar> = keys.iter().map(|k| v.coefficient(k)).collect();
    let x = a.solve(&b).ok_or_else(|| Error::Precondition("representatives and M_p do not span".into()))?;
    let mut out = FockState::zero(n, p);
    for (key, c) in reps.into_iter().zip(x) {
        out.add_term(key, c);
    }
    Ok(out)
}

/// Annihilators that fail to kill `v`.
pub fn surviving_annihilators(v: &FockState) -> Vec<CaoId> {
    all_caos(v.n()).into_iter().filter(|c| !c.is_creation()).filter(|&c| !apply_annihilate(c, v).is_zero()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightReport {
    pub weight: Weight,
    pub level: i64,
    pub dim_bar: u64,
    pub dim_vp: u64,
    pub gram_minors: Vec<QuadScalar>,
    pub positive_definite: bool,
}

pub fn weight_report(weight: &Weight, n: usize, p: u64) -> Result<WeightReport> {
    let g = gram(weight, n, p)?;
    let cert = is_positive_definite(&g);
    Ok(WeightReport {
        weight: weight.clone(),
        level: weight.level(),
        dim_bar: mult_bar(weight, n, p),
        dim_vp: vp_mult(weight, n, p),
        gram_minors: cert.minors,
        positive_definite: cert.positive_definite,
    })
}
