//! Scalar abstractions shared by the linear algebra and polynomial code.
//!
//! Coefficient rings here may need runtime data to build their constants:
//! an element of ℚ(√p) has to know `p`, a polynomial its variable list.
//! [`Ring::Ctx`] carries that data. Plain `num-traits` numbers use `()`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring with unit whose constants may depend on a runtime context.
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    type Ctx: Clone + PartialEq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(n: i64, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T> Ring for T
where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + Debug,
{
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        <T as num_traits::Zero>::zero()
    }

    fn one(_: &()) -> Self {
        <T as num_traits::One>::one()
    }

    fn from_i64(n: i64, _: &()) -> Self {
        T::from_i64(n).expect("integer not representable in scalar type")
    }

    fn is_zero(&self) -> bool {
        <T as num_traits::Zero>::is_zero(self)
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

macro_rules! num_field {
    ($($t:ty),*) => {$(
        impl Field for $t {
            fn inv(&self) -> Option<Self> {
                if <$t as num_traits::Zero>::is_zero(self) {
                    None
                } else {
                    Some(<$t as num_traits::One>::one() / self.clone())
                }
            }
        }
    )*};
}

num_field!(BigRational, f32, f64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        match x.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }
}

/// Scalars whose real sign can be decided.
///
/// For floating point types this is a plain comparison with zero and so only
/// as trustworthy as the value itself.
pub trait ExactSign {
    fn sign(&self) -> Sign;
}

impl<T: Signed> ExactSign for T {
    fn sign(&self) -> Sign {
        if self.is_positive() {
            Sign::Positive
        } else if self.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}
