//! The induced module V̄_p with basis
//! `|k,l⟩ = (b₁⁺)^k₁ (f₁⁺)^l₁ ⋯ (b_n⁺)^k_n (f_n⁺)^l_n v₀`.

mod action;
mod checks;
mod form;
mod oracle;

pub use action::{apply_annihilate, apply_cao, apply_create, x_vector, x_vector_image};
pub use checks::{center_element, center_failures, form_failures, representation_failures, vacuum_relation_failures, RepresentationFailure};
pub use form::{inner_product, inner_product_with, key_inner_product};
pub use oracle::FockOracle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quad::QuadScalar;

/// Exponents `(k, l)` of a basis vector. Indices in the public API are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    k: Vec<u32>,
    l: Vec<u8>,
}

impl BasisKey {
    pub fn new(k: Vec<u32>, l: Vec<u8>) -> Result<Self> {
        if k.is_empty() || k.len() != l.len() {
            return Err(Error::Precondition(format!("key needs n ≥ 1 pairs, got k={k:?} l={l:?}")));
        }
        if l.iter().any(|&b| b > 1) {
            return Err(Error::Precondition(format!("l entries must be 0 or 1, got {l:?}")));
        }
        Ok(BasisKey { k, l })
    }

    pub fn vacuum(n: usize) -> Self {
        BasisKey { k: vec![0; n], l: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn l(&self) -> &[u8] {
        &self.l
    }

    pub fn is_vacuum(&self) -> bool {
        self.level() == 0
    }

    pub fn level(&self) -> u32 {
        self.k.iter().sum::<u32>() + self.l.iter().map(|&b| b as u32).sum::<u32>()
    }

    /// `m_i = k_i + l_i`
    pub fn occupation(&self) -> Vec<u32> {
        self.k.iter().zip(&self.l).map(|(&k, &l)| k + l as u32).collect()
    }

    pub(crate) fn with_k(&self, i: usize, delta: i64) -> Option<Self> {
        let v = self.k[i] as i64 + delta;
        (v >= 0).then(|| {
            let mut out = self.clone();
            out.k[i] = v as u32;
            out
        })
    }

    pub(crate) fn with_l(&self, i: usize, value: u8) -> Self {
        let mut out = self.clone();
        out.l[i] = value;
        out
    }
}

/// `level(key) = Σ (k_i + l_i)`
pub fn level(key: &BasisKey) -> u32 {
    key.level()
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.k.iter().zip(&self.l).map(|(k, l)| format!("{k},{l}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl FromStr for BasisKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `k1,l1;k2,l2;...`, got `{s}`"));
        let mut k = Vec::new();
        let mut l = Vec::new();
        for pair in s.trim().split(';') {
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            k.push(a.trim().parse().map_err(|_| bad())?);
            l.push(b.trim().parse().map_err(|_| bad())?);
        }
        BasisKey::new(k, l)
    }
}

impl Serialize for BasisKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Weight `(λ₀, λ₁, …, λ_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn n(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    /// `(m₁, …, m_n)` when this is a weight `λ_m` of V̄_p.
    pub fn occupation(&self, p: u64) -> Option<Vec<u32>> {
        let (head, tail) = self.0.split_first()?;
        if tail.is_empty() || tail.iter().any(|&c| c < 0) {
            return None;
        }
        let total: i64 = tail.iter().sum();
        (*head == p as i64 - total).then(|| tail.iter().map(|&c| c as u32).collect())
    }

    /// `Σ_{i≥1} λ_i`
    pub fn level(&self) -> i64 {
        self.0.iter().skip(1).sum()
    }

    pub fn from_occupation(m: &[u32], p: u64) -> Self {
        let total: i64 = m.iter().map(|&c| c as i64).sum();
        let mut v = vec![p as i64 - total];
        v.extend(m.iter().map(|&c| c as i64));
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: std::result::Result<Vec<i64>, _> = inner.split(',').map(|c| c.trim().parse()).collect();
        match parts {
            Ok(v) if v.len() >= 2 => Ok(Weight(v)),
            _ => Err(Error::Parse(format!("expected a weight like `2,1,0`, got `{s}`"))),
        }
    }
}

/// `(p − Σ(k_i+l_i), k₁+l₁, …, k_n+l_n)`
pub fn weight_of(key: &BasisKey, p: u64) -> Weight {
    Weight::from_occupation(&key.occupation(), p)
}

/// Every key with `k_i + l_i = m_i`: `2^r` of them for `r` nonzero `m_i`.
pub fn keys_with_occupation(m: &[u32]) -> Vec<BasisKey> {
    let mut out = vec![BasisKey { k: Vec::new(), l: Vec::new() }];
    for &mi in m {
        let choices: &[(u32, u8)] = if mi == 0 { &[(0, 0)] } else { &[(mi, 0), (mi - 1, 1)] };
        out = out
            .into_iter()
            .flat_map(|key| {
                choices.iter().map(move |&(k, l)| {
                    let mut next = key.clone();
                    next.k.push(k);
                    next.l.push(l);
                    next
                })
            })
            .collect();
    }
    out
}

/// All occupation vectors `m ∈ ℕⁿ` with `Σ m_i = level`, in lexicographically
/// decreasing order.
pub fn occupations_at_level(n: usize, level: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=rest).rev() {
            prefix.push(first);
            go(n, rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, level, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

pub fn keys_at_level(n: usize, level: u32) -> Vec<BasisKey> {
    occupations_at_level(n, level).iter().flat_map(|m| keys_with_occupation(m)).collect()
}

/// All keys of level at most `cap`.
pub fn keys_up_to(n: usize, cap: u32) -> Vec<BasisKey> {
    (0..=cap).flat_map(|lv| keys_at_level(n, lv)).collect()
}

/// Sparse vector of V̄_p over ℚ(√p).
#[derive(Clone, PartialEq, Eq)]
pub struct FockState {
    n: usize,
    p: u64,
    terms: BTreeMap<BasisKey, QuadScalar>,
}

impl FockState {
    pub fn zero(n: usize, p: u64) -> Self {
        assert!(n >= 1 && p >= 1, "need n ≥ 1 and p ≥ 1");
        FockState { n, p, terms: BTreeMap::new() }
    }

    pub fn basis(key: BasisKey, p: u64) -> Self {
        let mut s = Self::zero(key.n(), p);
        s.add_term(key, QuadScalar::one_in(p));
        s
    }

    pub fn vacuum(n: usize, p: u64) -> Self {
        Self::basis(BasisKey::vacuum(n), p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add_term(&mut self, key: BasisKey, c: QuadScalar) {
        assert_eq!(key.n(), self.n, "key {key} does not belong to a module with n={}", self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockState, k: &QuadScalar) {
        for (key, c) in &other.terms {
            self.add_term(key.clone(), c * k);
        }
    }

    pub fn coefficient(&self, key: &BasisKey) -> QuadScalar {
        self.terms.get(key).cloned().unwrap_or_else(|| QuadScalar::zero_in(self.p))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &QuadScalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &BasisKey> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &QuadScalar) -> Self {
        let mut out = Self::zero(self.n, self.p);
        out.add_scaled(self, k);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &QuadScalar::one_in(self.p));
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &QuadScalar::from_int(-1, self.p));
        out
    }

    /// Applies a per-key linear map and sums the results.
    pub fn map_linear(&self, mut f: impl FnMut(&BasisKey) -> FockState) -> FockState {
        let mut out = Self::zero(self.n, self.p);
        for (key, c) in &self.terms {
            out.add_scaled(&f(key), c);
        }
        out
    }

    /// Weight shared by every term, or `None` for zero or mixed states.
    pub fn weight(&self) -> Option<Weight> {
        let mut ws = self.terms.keys().map(|k| weight_of(k, self.p));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})|{k}>")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    key: &'a BasisKey,
    coeff: &'a QuadScalar,
}

/// `[{"key": "1,0;0,1", "coeff": "0 + 1*sqrt(3)"}, ...]`
impl Serialize for FockState {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (key, coeff) in &self.terms {
            seq.serialize_element(&Entry { key, coeff })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(s: &str) -> BasisKey {
        s.parse().unwrap()
    }

    #[test]
    fn weights_and_levels() {
        assert_eq!(weight_of(&key("1,1;0,1"), 5), Weight(vec![2, 2, 1]));
        assert_eq!(weight_of(&BasisKey::vacuum(3), 4), Weight(vec![4, 0, 0, 0]));
        assert_eq!(weight_of(&key("2,1"), 3), Weight(vec![0, 3]));
        assert_eq!(level(&BasisKey::vacuum(2)), 0);
        assert_eq!(level(&key("1,0;0,1")), 2);
        assert_eq!(level(&key("3,1")), 4);
    }

    #[test]
    fn key_validation_and_text() {
        assert!(BasisKey::new(vec![1], vec![2]).is_err());
        assert!(BasisKey::new(vec![1, 0], vec![0]).is_err());
        assert!("1,0;x,1".parse::<BasisKey>().is_err());
        assert_eq!(key("1,0;0,1").to_string(), "1,0;0,1");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(keys_with_occupation(&[2, 0, 1]).len(), 4);
        assert_eq!(keys_with_occupation(&[0, 0]), vec![BasisKey::vacuum(2)]);
        // level-2 keys of n=2: occupations (2,0),(1,1),(0,2) give 2+4+2
        assert_eq!(keys_at_level(2, 2).len(), 8);
        assert_eq!(keys_up_to(1, 3).len(), 7);
    }

    #[test]
    fn state_drops_zeros() {
        let p = 3;
        let mut s = FockState::vacuum(1, p);
        s.add_term(BasisKey::vacuum(1), QuadScalar::from_int(-1, p));
        assert!(s.is_zero());
    }

    #[test]
    fn weight_parsing() {
        let w: Weight = "(2,1,0)".parse().unwrap();
        assert_eq!(w.occupation(3), Some(vec![1, 0]));
        assert_eq!(w.occupation(4), None);
        assert_eq!(Weight(vec![5, -1, 0]).occupation(4), None);
        assert!("7".parse::<Weight>().is_err());
    }
}
