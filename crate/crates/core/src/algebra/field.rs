//! Prime field coefficients.

use std::fmt;

use super::AlgebraError;

/// A prime modulus `p`; shared by every coefficient taking part in one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u32);

impl Modulus {
    pub const TWO: Modulus = Modulus(2);

    /// Largest accepted modulus. Keeps every product of two residues inside a `u64`.
    pub const MAX: u32 = (1 << 31) - 1;

    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p > Self::MAX || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Modulus(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Inverse by Fermat's little theorem. `a` must be nonzero.
    pub(crate) fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        let mut base = a as u64 % self.0 as u64;
        let mut exp = self.0 as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0 as u64;
            }
            base = base * base % self.0 as u64;
            exp >>= 1;
        }
        acc as u32
    }

    /// Reduce a signed integer into `0..p`.
    pub fn reduce(self, n: i128) -> u32 {
        n.rem_euclid(self.0 as i128) as u32
    }
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus::TWO
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    value: u32,
    modulus: Modulus,
}

impl Coeff {
    pub fn new(value: i128, modulus: Modulus) -> Self {
        Coeff {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn zero(modulus: Modulus) -> Self {
        Coeff { value: 0, modulus }
    }

    pub fn one(modulus: Modulus) -> Self {
        Coeff { value: 1, modulus }
    }

    pub(crate) fn from_residue(value: u32, modulus: Modulus) -> Self {
        debug_assert!(value < modulus.get());
        Coeff { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn try_add(self, other: Coeff) -> Result<Coeff, AlgebraError> {
        self.check(other)?;
        Ok(Coeff::from_residue(
            self.modulus.add(self.value, other.value),
            self.modulus,
        ))
    }

    pub fn try_mul(self, other: Coeff) -> Result<Coeff, AlgebraError> {
        self.check(other)?;
        Ok(Coeff::from_residue(
            self.modulus.mul(self.value, other.value),
            self.modulus,
        ))
    }

    /// `None` for zero.
    pub fn inverse(self) -> Option<Coeff> {
        if self.is_zero() {
            None
        } else {
            Some(Coeff::from_residue(
                self.modulus.inv(self.value),
                self.modulus,
            ))
        }
    }

    fn check(self, other: Coeff) -> Result<(), AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::from_residue(self.modulus.neg(self.value), self.modulus)
    }
}
