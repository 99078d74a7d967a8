//! The group ring `K[P]` and its dihedral image `K[D∞]`.
//!
//! An element of `K[P]` is stored as `p + q·a + r·b + s·ab` with four Laurent
//! polynomials in `x, y, z` written on the left of the section elements.

mod convolution;
mod dihedral;

pub use dihedral::RingElemD;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::algebra::{AlgebraError, Coeff, LaurentPoly, Modulus, Monomial};
use crate::group::{PElement, QElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("component {component} has a half-integer exponent of x or y")]
    HalfExponent { component: QElement },
}

/// Element of `K[P]`. Components are indexed by [`QElement::index`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElemP {
    parts: [LaurentPoly; 4],
}

impl RingElemP {
    /// `p + q·a + r·b + s·ab`; every component must be a polynomial in `x, y, z`.
    pub fn new(
        p: LaurentPoly,
        q: LaurentPoly,
        r: LaurentPoly,
        s: LaurentPoly,
    ) -> Result<Self, RingError> {
        Self::from_parts([p, q, r, s])
    }

    pub fn from_parts(parts: [LaurentPoly; 4]) -> Result<Self, RingError> {
        let m = parts[0].modulus();
        for (i, part) in parts.iter().enumerate() {
            if part.modulus() != m {
                return Err(AlgebraError::ModulusMismatch {
                    left: m.get(),
                    right: part.modulus().get(),
                }
                .into());
            }
            if !part.is_integral() {
                return Err(RingError::HalfExponent {
                    component: QElement::from_index(i),
                });
            }
        }
        Ok(RingElemP { parts })
    }

    pub fn zero(modulus: Modulus) -> Self {
        RingElemP {
            parts: std::array::from_fn(|_| LaurentPoly::zero(modulus)),
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        Self::from_group(PElement::IDENTITY, modulus)
    }

    /// The trivial unit `c · e`.
    pub fn from_term(e: PElement, c: Coeff) -> Self {
        let mut out = Self::zero(c.modulus());
        out.parts[e.g.index()] =
            LaurentPoly::monomial(Monomial::xyz(e.m, e.n, e.k), c.value() as i128, c.modulus());
        out
    }

    pub fn from_group(e: PElement, modulus: Modulus) -> Self {
        Self::from_term(e, Coeff::one(modulus))
    }

    /// Embeds a Laurent polynomial in `x, y, z` as the `1`-component.
    pub fn from_poly(f: LaurentPoly) -> Result<Self, RingError> {
        let m = f.modulus();
        Self::new(
            f,
            LaurentPoly::zero(m),
            LaurentPoly::zero(m),
            LaurentPoly::zero(m),
        )
    }

    pub fn modulus(&self) -> Modulus {
        self.parts[0].modulus()
    }

    pub fn component(&self, g: QElement) -> &LaurentPoly {
        &self.parts[g.index()]
    }

    pub fn parts(&self) -> &[LaurentPoly; 4] {
        &self.parts
    }

    pub fn into_parts(self) -> [LaurentPoly; 4] {
        self.parts
    }

    pub fn p(&self) -> &LaurentPoly {
        &self.parts[0]
    }

    pub fn q(&self) -> &LaurentPoly {
        &self.parts[1]
    }

    pub fn r(&self) -> &LaurentPoly {
        &self.parts[2]
    }

    pub fn s(&self) -> &LaurentPoly {
        &self.parts[3]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.parts[0].is_one() && self.parts[1..].iter().all(LaurentPoly::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.modulus() != other.modulus() {
            return Err(AlgebraError::ModulusMismatch {
                left: self.modulus().get(),
                right: other.modulus().get(),
            });
        }
        Ok(())
    }

    /// Product via the four structured component formulas. `self` is the left factor.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check(rhs)?;
        Ok(RingElemP {
            parts: structured_product(&self.parts, &rhs.parts),
        })
    }

    /// Product by expanding both factors into group elements and multiplying
    /// every pair in `P`. Independent of [`RingElemP::try_mul`].
    pub fn try_mul_convolution(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check(rhs)?;
        Ok(convolution::multiply(self, rhs))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check(rhs)?;
        Ok(RingElemP {
            parts: std::array::from_fn(|i| &self.parts[i] + &rhs.parts[i]),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RingElemP {
            parts: std::array::from_fn(|i| self.parts[i].neg()),
        }
    }

    pub fn scale(&self, c: Coeff) -> Self {
        RingElemP {
            parts: std::array::from_fn(|i| self.parts[i].scale(c)),
        }
    }

    /// All `(group element, coefficient)` pairs, in [`PElement`] order.
    pub fn terms(&self) -> Vec<(PElement, Coeff)> {
        let mut out = Vec::new();
        for g in QElement::ALL {
            for (mono, c) in self.component(g).terms() {
                let (m, n, k) = mono.to_xyz().expect("components are integral");
                out.push((PElement::new(m, n, k, g), c));
            }
        }
        out
    }

    /// Rebuild from a list of weighted group elements; repeated elements are summed.
    pub fn from_terms<I>(terms: I, modulus: Modulus) -> Self
    where
        I: IntoIterator<Item = (PElement, Coeff)>,
    {
        let mut buckets: [Vec<(Monomial, i128)>; 4] = Default::default();
        for (e, c) in terms {
            buckets[e.g.index()].push((Monomial::xyz(e.m, e.n, e.k), c.value() as i128));
        }
        RingElemP {
            parts: buckets.map(|b| LaurentPoly::from_terms(b, modulus)),
        }
    }

    pub fn support(&self) -> Vec<PElement> {
        self.terms().into_iter().map(|(e, _)| e).collect()
    }

    pub fn support_size(&self) -> usize {
        self.parts.iter().map(LaurentPoly::len).sum()
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> Coeff {
        let m = self.modulus();
        self.parts
            .iter()
            .flat_map(|p| p.terms())
            .fold(Coeff::zero(m), |acc, (_, c)| acc.try_add(c).unwrap())
    }

    /// Nonzero scalar times a group element.
    pub fn is_trivial_unit(&self) -> bool {
        self.support_size() == 1
    }

    /// `left · self · right`.
    pub fn translate(&self, left: PElement, right: PElement) -> Self {
        let m = self.modulus();
        &(&Self::from_group(left, m) * self) * &Self::from_group(right, m)
    }

    /// `w^-1 · self · w`.
    pub fn conjugate(&self, w: PElement) -> Self {
        self.translate(w.inv(), w)
    }

    /// Image under the ring map induced by `π : P → D∞`.
    pub fn project(&self) -> RingElemD {
        let m = self.modulus();
        let mut rot = Vec::new();
        let mut refl = Vec::new();
        for (e, c) in self.terms() {
            let d = e.project_dihedral();
            let bucket = if d.flip { &mut refl } else { &mut rot };
            bucket.push((d.n, c.value() as i128));
        }
        RingElemD::new(
            crate::algebra::TPoly::from_terms(rot, m),
            crate::algebra::TPoly::from_terms(refl, m),
        )
        .expect("shared modulus")
    }
}

/// The structured product formulas on raw components; the left operand plays
/// the role of `α'` in `(α'α)`:
///
/// ```text
/// (α'α)_1  = p'p + x q'q^a + y r'r^b + z s's^ab
/// (α'α)_a  = p'q + q'p^a + x^-1 z^-1 r's^b + y^-1 s'r^ab
/// (α'α)_b  = p'r + x q's^a + r'p^b + y^-1 z s'q^ab
/// (α'α)_ab = p's + q'r^a + x^-1 y z^-1 r'q^b + s'p^ab
/// ```
///
/// Valid also for half-integer exponents of `x, y`, where it computes in the
/// extension of the half-lattice by `Q` with the same cocycle.
pub(crate) fn structured_product(
    left: &[LaurentPoly; 4],
    right: &[LaurentPoly; 4],
) -> [LaurentPoly; 4] {
    let [p1, q1, r1, s1] = left;
    let [p, q, r, s] = right;
    let (a, b, ab) = (QElement::A, QElement::B, QElement::AB);
    let x = |m, n, k| Monomial::xyz(m, n, k);

    let one = &(&(p1 * p) + &(q1 * &q.act(a)).shift(x(1, 0, 0)))
        + &(&(r1 * &r.act(b)).shift(x(0, 1, 0)) + &(s1 * &s.act(ab)).shift(x(0, 0, 1)));
    let comp_a = &(&(p1 * q) + &(q1 * &p.act(a)))
        + &(&(r1 * &s.act(b)).shift(x(-1, 0, -1)) + &(s1 * &r.act(ab)).shift(x(0, -1, 0)));
    let comp_b = &(&(p1 * r) + &(q1 * &s.act(a)).shift(x(1, 0, 0)))
        + &(&(r1 * &p.act(b)) + &(s1 * &q.act(ab)).shift(x(0, -1, 1)));
    let comp_ab = &(&(p1 * s) + &(q1 * &r.act(a)))
        + &(&(r1 * &q.act(b)).shift(x(-1, 1, -1)) + &(s1 * &p.act(ab)));
    [one, comp_a, comp_b, comp_ab]
}

impl<'a> Mul<&'a RingElemP> for &'a RingElemP {
    type Output = RingElemP;
    /// Panics on modulus mismatch.
    fn mul(self, rhs: &'a RingElemP) -> RingElemP {
        self.try_mul(rhs).expect("operands must share a modulus")
    }
}

impl<'a> Add<&'a RingElemP> for &'a RingElemP {
    type Output = RingElemP;
    fn add(self, rhs: &'a RingElemP) -> RingElemP {
        self.try_add(rhs).expect("operands must share a modulus")
    }
}

impl<'a> Sub<&'a RingElemP> for &'a RingElemP {
    type Output = RingElemP;
    fn sub(self, rhs: &'a RingElemP) -> RingElemP {
        self.try_sub(rhs).expect("operands must share a modulus")
    }
}

impl Neg for &RingElemP {
    type Output = RingElemP;
    fn neg(self) -> RingElemP {
        RingElemP::neg(self)
    }
}

/// Support with multiplicities: group element -> coefficient.
pub fn coefficient_map(alpha: &RingElemP) -> BTreeMap<PElement, Coeff> {
    alpha.terms().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Modulus = Modulus::TWO;

    fn g(e: PElement) -> RingElemP {
        RingElemP::from_group(e, F2)
    }

    #[test]
    fn identity_is_neutral() {
        let alpha = &g(PElement::a()) + &g(PElement::new(1, -1, 2, QElement::B));
        let one = RingElemP::one(F2);
        assert_eq!(&one * &alpha, alpha);
        assert_eq!(&alpha * &one, alpha);
    }

    #[test]
    fn a_squared_is_x() {
        let a = g(PElement::a());
        assert_eq!(&a * &a, g(PElement::lattice(1, 0, 0)));
    }

    #[test]
    fn single_term_convolutions() {
        let (a, b) = (g(PElement::a()), g(PElement::b()));
        assert_eq!(
            a.try_mul_convolution(&b).unwrap(),
            g(PElement::section(QElement::AB))
        );
        assert_eq!(
            b.try_mul_convolution(&a).unwrap(),
            g(PElement::new(-1, 1, -1, QElement::AB))
        );
    }

    #[test]
    fn rejects_half_exponents() {
        let half = LaurentPoly::monomial(Monomial::new(1, 0, 0), 1, F2);
        let z = LaurentPoly::zero(F2);
        assert_eq!(
            RingElemP::new(z.clone(), half, z.clone(), z),
            Err(RingError::HalfExponent {
                component: QElement::A
            })
        );
    }

    #[test]
    fn modulus_mismatch() {
        let f3 = Modulus::new(3).unwrap();
        let a = RingElemP::one(F2);
        let b = RingElemP::one(f3);
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_mul_convolution(&b).is_err());
    }

    #[test]
    fn augmentation_and_triviality() {
        let one_plus_x = &RingElemP::one(F2) + &g(PElement::lattice(1, 0, 0));
        assert!(one_plus_x.augmentation().is_zero());
        assert_eq!(g(PElement::b()).augmentation(), Coeff::one(F2));
        assert!(g(PElement::new(-1, 0, 0, QElement::A)).is_trivial_unit());
        assert!(!RingElemP::zero(F2).is_trivial_unit());
        assert!(RingElemP::zero(F2).support().is_empty());
    }

    #[test]
    fn conjugation_by_identity() {
        let alpha = &g(PElement::a()) + &g(PElement::lattice(0, 1, -1));
        assert_eq!(alpha.conjugate(PElement::IDENTITY), alpha);
    }

    #[test]
    fn odd_characteristic_signs() {
        let f3 = Modulus::new(3).unwrap();
        let a = RingElemP::from_group(PElement::a(), f3);
        let minus_a = a.neg();
        let prod = &minus_a * &a;
        assert_eq!(
            prod.terms(),
            vec![(PElement::lattice(1, 0, 0), Coeff::new(-1, f3))]
        );
        assert_eq!(prod, minus_a.try_mul_convolution(&a).unwrap());
    }
}
