//! Exact computations for the Fock representations of the Lie superalgebra
//! q(n+1): structure constants, the induced module and its simple quotient,
//! Gram matrices, characters and the q(2) worked case.
//!
//! Core linear algebra and polynomial code is generic over [`scalar::Ring`] /
//! [`scalar::Field`]; the aliases below fix the scalar types used throughout.

pub mod algebra;
pub mod error;
pub mod fock;
pub mod lemma;
pub mod linalg;
pub mod poly;
pub mod qtwo;
pub mod quad;
pub mod scalar;
pub mod structure;
pub mod symfun;

pub use error::{Error, Result};
pub use quad::QuadScalar;
pub use scalar::{ExactSign, Field, Ring, Sign};

/// Arbitrary precision rationals.
pub type Rational = num_rational::BigRational;
/// Matrices over ℚ.
pub type RatMatrix = linalg::Matrix<Rational>;
/// Matrices over ℚ(√p).
pub type QuadMatrix = linalg::Matrix<QuadScalar>;
/// Floating point matrices.
pub type FloatMatrix = linalg::Matrix<f64>;
