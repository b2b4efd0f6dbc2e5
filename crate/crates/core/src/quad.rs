//! Exact arithmetic in ℚ(√p) for a fixed positive integer radicand `p`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, ExactSign, Field, Sign};

pub type Rational = BigRational;

/// The number `a + b·√p`.
///
/// When `p` is a perfect square the radical is folded into `a`, so `b` is
/// always zero for such radicands. Values only combine when their radicands
/// agree; the operator impls panic otherwise, the `checked_*` methods return
/// [`Error::RadicandMismatch`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    p: u64,
}

fn perfect_sqrt(p: u64) -> Option<u64> {
    let r = p.sqrt();
    (r * r == p).then_some(r)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadScalar {
    /// Canonical form of `a + b√p`.
    pub fn normalize(a: Rational, b: Rational, p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidRadicand(p));
        }
        Ok(match perfect_sqrt(p) {
            Some(q) if !b.is_zero() => QuadScalar {
                a: a + b * rat(q as i64),
                b: Rational::zero(),
                p,
            },
            _ => QuadScalar { a, b, p },
        })
    }

    /// Panicking constructor for call sites that already validated `p`.
    pub fn new(a: Rational, b: Rational, p: u64) -> Self {
        Self::normalize(a, b, p).expect("radicand must be positive")
    }

    pub fn zero_in(p: u64) -> Self {
        Self::new(Rational::zero(), Rational::zero(), p)
    }

    pub fn one_in(p: u64) -> Self {
        Self::new(Rational::one(), Rational::zero(), p)
    }

    pub fn from_int(n: i64, p: u64) -> Self {
        Self::new(rat(n), Rational::zero(), p)
    }

    pub fn from_rational(a: Rational, p: u64) -> Self {
        Self::new(a, Rational::zero(), p)
    }

    /// `√p` itself.
    pub fn sqrt_p(p: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), p)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadScalar { a: self.a.clone(), b: -self.b.clone(), p: self.p }
    }

    /// Field norm `a² − p·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(self.p as i64) * &self.b * &self.b
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::RadicandMismatch(self.p, other.p))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadScalar { a: &self.a + &other.a, b: &self.b + &other.b, p: self.p })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadScalar { a: &self.a - &other.a, b: &self.b - &other.b, p: self.p })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let p = rat(self.p as i64);
        Ok(QuadScalar {
            a: &self.a * &other.a + p * &self.b * &other.b,
            b: &self.a * &other.b + &other.a * &self.b,
            p: self.p,
        })
    }

    /// Multiplicative inverse via conjugate over norm.
    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        Ok(QuadScalar { a: &self.a / &norm, b: -(&self.b / &norm), p: self.p })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadScalar { a: &self.a * k, b: &self.b * k, p: self.p }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    /// Sign of the real number `a + b√p`, decided with integer comparisons.
    pub fn signum(&self) -> Sign {
        // BigRational keeps denominators positive
        let sa = Sign::from_bigint(self.a.numer());
        let sb = Sign::from_bigint(self.b.numer());
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            (sa, sb) => {
                // opposite signs: the larger of a² and p·b² wins
                let a2 = &self.a * &self.a;
                let pb2 = rat(self.p as i64) * &self.b * &self.b;
                match a2.cmp(&pb2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    /// Floating point approximation.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.p as f64).sqrt()
    }

    /// Parse `a + b*sqrt(p)`, `b*sqrt(p)` or a bare rational, the latter
    /// placed in ℚ(√p) for the given radicand.
    pub fn parse_in(s: &str, p: u64) -> Result<Self> {
        let q: QuadScalar = match s.parse() {
            Ok(q) => q,
            Err(_) => Self::from_rational(parse_rational(s)?, p),
        };
        if q.is_rational() && q.p != p {
            return Ok(Self::from_rational(q.a, p));
        }
        q.same_field(&Self::zero_in(p))?;
        Ok(q)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.p)
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QuadScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected `a + b*sqrt(p)`, got `{s}`"));
        let open = s.rfind("sqrt(").ok_or_else(bad)?;
        let close = s[open..].find(')').map(|c| open + c).ok_or_else(bad)?;
        if close + 1 != s.len() {
            return Err(bad());
        }
        let p: u64 = s[open + 5..close].trim().parse().map_err(|_| bad())?;
        let head = s[..open].trim_end();
        let head = head.strip_suffix('*').ok_or_else(bad)?.trim_end();
        // split head into rational part and coefficient of the radical
        let (a, b) = match head.rfind(" + ").or_else(|| head.rfind(" - ")) {
            Some(pos) => {
                let a = parse_rational(&head[..pos])?;
                let mut b = parse_rational(&head[pos + 3..])?;
                if &head[pos..pos + 3] == " - " {
                    b = -b;
                }
                (a, b)
            }
            None => (Rational::zero(), parse_rational(head)?),
        };
        QuadScalar::normalize(a, b, p)
    }
}

impl serde::Serialize for QuadScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar { a: -self.a, b: -self.b, p: self.p }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -self.clone()
    }
}

impl scalar::Ring for QuadScalar {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }

    fn zero(p: &u64) -> Self {
        Self::zero_in(*p)
    }

    fn one(p: &u64) -> Self {
        Self::one_in(*p)
    }

    fn from_i64(n: i64, p: &u64) -> Self {
        Self::from_int(n, *p)
    }

    fn is_zero(&self) -> bool {
        QuadScalar::is_zero(self)
    }
}

impl Field for QuadScalar {
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

impl ExactSign for QuadScalar {
    fn sign(&self) -> Sign {
        self.signum()
    }
}
