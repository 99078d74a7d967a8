use std::ops::{Add, Mul};

use crate::algebra::{AlgebraError, Coeff, Modulus, TPoly};
use crate::group::DElement;

/// `u(t) + v(t)·b̄` in `K[D∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElemD {
    u: TPoly,
    v: TPoly,
}

impl RingElemD {
    pub fn new(u: TPoly, v: TPoly) -> Result<Self, AlgebraError> {
        if u.modulus() != v.modulus() {
            return Err(AlgebraError::ModulusMismatch {
                left: u.modulus().get(),
                right: v.modulus().get(),
            });
        }
        Ok(RingElemD { u, v })
    }

    pub fn zero(modulus: Modulus) -> Self {
        RingElemD {
            u: TPoly::zero(modulus),
            v: TPoly::zero(modulus),
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        Self::from_group(DElement::IDENTITY, modulus)
    }

    pub fn from_group(d: DElement, modulus: Modulus) -> Self {
        let mono = TPoly::monomial(d.n, 1, modulus);
        if d.flip {
            RingElemD {
                u: TPoly::zero(modulus),
                v: mono,
            }
        } else {
            RingElemD {
                u: mono,
                v: TPoly::zero(modulus),
            }
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.u.modulus()
    }

    /// Rotation part.
    pub fn u(&self) -> &TPoly {
        &self.u
    }

    /// Coefficient of `b̄`.
    pub fn v(&self) -> &TPoly {
        &self.v
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn terms(&self) -> Vec<(DElement, Coeff)> {
        let rot = self.u.terms().map(|(n, c)| (DElement::rotation(n), c));
        let refl = self.v.terms().map(|(n, c)| (DElement::reflection(n), c));
        rot.chain(refl).collect()
    }

    /// `(u1 + v1 b̄)(u2 + v2 b̄) = (u1 u2 + v1 v2*) + (u1 v2 + v1 u2*) b̄`,
    /// where `f*(t) = f(t^-1)`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let u = self
            .u
            .try_mul(&rhs.u)?
            .try_add(&self.v.try_mul(&rhs.v.reflect())?)?;
        let v = self
            .u
            .try_mul(&rhs.v)?
            .try_add(&self.v.try_mul(&rhs.u.reflect())?)?;
        Ok(RingElemD { u, v })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(RingElemD {
            u: self.u.try_add(&rhs.u)?,
            v: self.v.try_add(&rhs.v)?,
        })
    }

    /// `d^-1 · self · d` for a group element `d`.
    pub fn conjugate(&self, d: DElement) -> Self {
        let m = self.modulus();
        &(&Self::from_group(d.inv(), m) * self) * &Self::from_group(d, m)
    }
}

impl<'a> Mul<&'a RingElemD> for &'a RingElemD {
    type Output = RingElemD;
    fn mul(self, rhs: &'a RingElemD) -> RingElemD {
        self.try_mul(rhs).expect("operands must share a modulus")
    }
}

impl<'a> Add<&'a RingElemD> for &'a RingElemD {
    type Output = RingElemD;
    fn add(self, rhs: &'a RingElemD) -> RingElemD {
        self.try_add(rhs).expect("operands must share a modulus")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Modulus = Modulus::TWO;

    #[test]
    fn reflection_squares_to_one() {
        let b = RingElemD::from_group(DElement::REFLECTION, F2);
        assert!((&b * &b).is_one());
        let tb = RingElemD::from_group(DElement::reflection(1), F2);
        assert!((&tb * &tb).is_one());
    }

    #[test]
    fn matches_group_multiplication() {
        for n1 in -3..=3 {
            for n2 in -3..=3 {
                for f1 in [false, true] {
                    for f2 in [false, true] {
                        let d1 = DElement { n: n1, flip: f1 };
                        let d2 = DElement { n: n2, flip: f2 };
                        let lhs = &RingElemD::from_group(d1, F2) * &RingElemD::from_group(d2, F2);
                        assert_eq!(lhs, RingElemD::from_group(d1 * d2, F2));
                    }
                }
            }
        }
    }
}
