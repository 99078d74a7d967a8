//! Coefficient and Laurent polynomial arithmetic.

mod field;
mod poly;

pub use field::{Coeff, Modulus};
pub use poly::{Exponent, LaurentPoly, Monomial, SparsePoly, TPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
}
