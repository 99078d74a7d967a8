//! Sparse Laurent polynomials over `F_p`.
//!
//! Terms are kept in a vector sorted by exponent with no zero coefficients, so
//! structural equality is polynomial equality. The exponent type is generic: the
//! group ring components use [`Monomial`] (exponents of `v`, `w`, `z` where
//! `x = v^2`, `y = w^2`), and the dihedral group ring uses a bare `i64` power of `t`.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Coeff, Modulus};
use super::AlgebraError;
use crate::group::QElement;

/// Exponent of a Laurent monomial: an abelian group with a total order.
pub trait Exponent:
    Copy + Ord + Hash + Debug + Default + Add<Output = Self> + Neg<Output = Self>
{
}

impl Exponent for i64 {}

/// `v^v * w^w * z^z`. With `x = v^2` and `y = w^2`, a monomial lies in
/// `K[x^±, y^±, z^±]` exactly when both `v` and `w` are even.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub v: i64,
    pub w: i64,
    pub z: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { v: 0, w: 0, z: 0 };

    pub const fn new(v: i64, w: i64, z: i64) -> Self {
        Monomial { v, w, z }
    }

    /// `x^m y^n z^k`.
    pub const fn xyz(m: i64, n: i64, k: i64) -> Self {
        Monomial {
            v: 2 * m,
            w: 2 * n,
            z: k,
        }
    }

    pub fn is_integral(self) -> bool {
        self.v % 2 == 0 && self.w % 2 == 0
    }

    /// `(m, n, k)` with `self = x^m y^n z^k`; `None` for half-integer exponents.
    pub fn to_xyz(self) -> Option<(i64, i64, i64)> {
        self.is_integral()
            .then_some((self.v / 2, self.w / 2, self.z))
    }

    /// Conjugation action of the Klein four quotient: `a` inverts `y, z`,
    /// `b` inverts `x, z`, `ab` inverts `x, y`.
    pub fn act(self, g: QElement) -> Monomial {
        let (flip_v, flip_w, flip_z) = g.inversions();
        let sign = |flip: bool, e: i64| if flip { -e } else { e };
        Monomial {
            v: sign(flip_v, self.v),
            w: sign(flip_w, self.w),
            z: sign(flip_z, self.z),
        }
    }
}

impl Add for Monomial {
    type Output = Monomial;
    fn add(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.v + rhs.v, self.w + rhs.w, self.z + rhs.z)
    }
}

impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial::new(-self.v, -self.w, -self.z)
    }
}

impl Exponent for Monomial {}

/// A finite `F_p`-linear combination of monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly<E> {
    terms: Vec<(E, u32)>,
    modulus: Modulus,
}

/// Laurent polynomial in `v, w, z`.
pub type LaurentPoly = SparsePoly<Monomial>;

/// Laurent polynomial in the single variable `t`.
pub type TPoly = SparsePoly<i64>;

impl<E: Exponent> SparsePoly<E> {
    pub fn zero(modulus: Modulus) -> Self {
        SparsePoly {
            terms: Vec::new(),
            modulus,
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        Self::monomial(E::default(), 1, modulus)
    }

    /// `c * e`, with `c` reduced mod `p`.
    pub fn monomial(exp: E, c: i128, modulus: Modulus) -> Self {
        let value = modulus.reduce(c);
        let terms = if value == 0 {
            Vec::new()
        } else {
            vec![(exp, value)]
        };
        SparsePoly { terms, modulus }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(terms: I, modulus: Modulus) -> Self
    where
        I: IntoIterator<Item = (E, i128)>,
    {
        let raw = terms
            .into_iter()
            .map(|(e, c)| (e, modulus.reduce(c)))
            .collect();
        Self::collect(raw, modulus)
    }

    fn collect(mut raw: Vec<(E, u32)>, modulus: Modulus) -> Self {
        raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(E, u32)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = modulus.add(last.1, c),
                _ => {
                    if let Some(last) = terms.last() {
                        if last.1 == 0 {
                            terms.pop();
                        }
                    }
                    terms.push((e, c));
                }
            }
        }
        if terms.last().is_some_and(|t| t.1 == 0) {
            terms.pop();
        }
        SparsePoly { terms, modulus }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (E::default(), 1)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (E, Coeff)> + '_ {
        self.terms
            .iter()
            .map(move |&(e, c)| (e, Coeff::from_residue(c, self.modulus)))
    }

    pub fn exponents(&self) -> impl ExactSizeIterator<Item = E> + '_ {
        self.terms.iter().map(|t| t.0)
    }

    pub fn coeff(&self, exp: E) -> Coeff {
        match self.terms.binary_search_by(|t| t.0.cmp(&exp)) {
            Ok(i) => Coeff::from_residue(self.terms[i].1, self.modulus),
            Err(_) => Coeff::zero(self.modulus),
        }
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(E, Coeff)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, Coeff::from_residue(*c, self.modulus))),
            _ => None,
        }
    }

    /// Units of a Laurent polynomial ring over a field are the nonzero scalar monomials.
    pub fn is_ring_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse in the Laurent ring, when it exists.
    pub fn ring_inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let inv = c.inverse()?;
        Some(SparsePoly {
            terms: vec![(-e, inv.value())],
            modulus: self.modulus,
        })
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let m = self.modulus;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = m.add(a[i].1, b[j].1);
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(SparsePoly {
            terms: out,
            modulus: m,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.modulus));
        }
        let m = self.modulus;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                raw.push((e1 + e2, m.mul(c1, c2)));
            }
        }
        Ok(Self::collect(raw, m))
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus;
        SparsePoly {
            terms: self.terms.iter().map(|&(e, c)| (e, m.neg(c))).collect(),
            modulus: m,
        }
    }

    pub fn scale(&self, c: Coeff) -> Self {
        let m = self.modulus;
        assert_eq!(c.modulus(), m, "scalar modulus mismatch");
        if c.is_zero() {
            return Self::zero(m);
        }
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|&(e, v)| (e, m.mul(v, c.value())))
                .collect(),
            modulus: m,
        }
    }

    /// Multiply by the monomial `exp`.
    pub fn shift(&self, exp: E) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|&(e, c)| (e + exp, c)).collect(),
            modulus: self.modulus,
        }
    }

    /// Substitute exponents through `f`, summing any terms that collide.
    pub fn map_exponents<F: FnMut(E) -> E2, E2: Exponent>(&self, mut f: F) -> SparsePoly<E2> {
        SparsePoly::collect(
            self.terms.iter().map(|&(e, c)| (f(e), c)).collect(),
            self.modulus,
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.modulus);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl LaurentPoly {
    /// `x^m y^n z^k` with coefficient 1.
    pub fn xyz(m: i64, n: i64, k: i64, modulus: Modulus) -> Self {
        Self::monomial(Monomial::xyz(m, n, k), 1, modulus)
    }

    /// True when every term lies in `K[x^±, y^±, z^±]`.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_integral())
    }

    /// `f^g`: the Klein four action on exponents. Coefficients are untouched.
    pub fn act(&self, g: QElement) -> Self {
        if g == QElement::ONE {
            return self.clone();
        }
        self.map_exponents(|e| e.act(g))
    }
}

impl TPoly {
    /// `f(t^-1)`.
    pub fn reflect(&self) -> Self {
        self.map_exponents(|e: i64| -e)
    }
}

macro_rules! checked_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a, E: Exponent> $tr<&'a SparsePoly<E>> for &'a SparsePoly<E> {
            type Output = SparsePoly<E>;
            /// Panics if the moduli differ; use the `try_` form for a `Result`.
            fn $method(self, rhs: &'a SparsePoly<E>) -> SparsePoly<E> {
                self.$inner(rhs)
                    .expect("polynomial operands must share a modulus")
            }
        }

        impl<E: Exponent> $tr for SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $method(self, rhs: SparsePoly<E>) -> SparsePoly<E> {
                (&self).$method(&rhs)
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl<E: Exponent> Neg for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        SparsePoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Modulus = Modulus::TWO;

    fn v(i: i64) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::new(i, 0, 0), 1, F2)
    }

    fn vbar() -> LaurentPoly {
        &v(-1) + &v(1)
    }

    #[test]
    fn doubling_vanishes_in_characteristic_two() {
        let f = &LaurentPoly::one(F2) + &v(2);
        assert!((&f + &f).is_zero());
        assert_eq!(&f + &LaurentPoly::zero(F2), f);
    }

    #[test]
    fn vbar_squared_is_frobenius() {
        let sq = &vbar() * &vbar();
        assert!((&sq + &(&v(-2) + &v(2))).is_zero());
    }

    #[test]
    fn theorem_p_expands_to_eight_terms() {
        let one = LaurentPoly::one(F2);
        let x = LaurentPoly::xyz(1, 0, 0, F2);
        let y = LaurentPoly::xyz(0, 1, 0, F2);
        let zi = LaurentPoly::xyz(0, 0, -1, F2);
        let p = &(&(&one + &x) * &(&one + &y)) * &(&one + &zi);
        assert_eq!(p.len(), 8);
        for m in 0..=1 {
            for n in 0..=1 {
                for k in -1..=0 {
                    assert!(!p.coeff(Monomial::xyz(m, n, k)).is_zero());
                }
            }
        }
        assert_eq!(&LaurentPoly::one(F2) * &p, p);
    }

    #[test]
    fn gamma_times_its_a_conjugate() {
        // gamma = v^-2 w^-1 + v^2 w
        let gamma = LaurentPoly::from_terms(
            [(Monomial::new(-2, -1, 0), 1), (Monomial::new(2, 1, 0), 1)],
            F2,
        );
        let w = |j| LaurentPoly::monomial(Monomial::new(0, j, 0), 1, F2);
        let wbar = &w(-1) + &w(1);
        let expected = &vbar().pow(4) + &wbar.pow(2);
        assert_eq!(&gamma * &gamma.act(QElement::A), expected);
    }

    #[test]
    fn action_on_y() {
        let y = LaurentPoly::xyz(0, 1, 0, F2);
        assert_eq!(y.act(QElement::A), LaurentPoly::xyz(0, -1, 0, F2));
        assert_eq!(y.act(QElement::ONE), y);
    }

    #[test]
    fn ring_units_are_single_terms() {
        assert!(LaurentPoly::xyz(2, -1, 1, F2).is_ring_unit());
        assert!(!(&LaurentPoly::one(F2) + &LaurentPoly::xyz(1, 0, 0, F2)).is_ring_unit());
        assert!(!LaurentPoly::zero(F2).is_ring_unit());
    }

    #[test]
    fn mismatched_moduli_error() {
        let f3 = Modulus::new(3).unwrap();
        let a = LaurentPoly::one(F2);
        let b = LaurentPoly::one(f3);
        assert!(matches!(
            a.try_add(&b),
            Err(AlgebraError::ModulusMismatch { .. })
        ));
        assert!(matches!(
            a.try_mul(&b),
            Err(AlgebraError::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn from_terms_cancels() {
        let f3 = Modulus::new(3).unwrap();
        let f = LaurentPoly::from_terms(
            [
                (Monomial::new(1, 0, 0), 1),
                (Monomial::new(1, 0, 0), 2),
                (Monomial::ONE, -1),
            ],
            f3,
        );
        assert_eq!(f, LaurentPoly::monomial(Monomial::ONE, 2, f3));
    }

    #[test]
    fn ring_inverse_of_monomial() {
        let f5 = Modulus::new(5).unwrap();
        let f = LaurentPoly::monomial(Monomial::new(1, -2, 3), 3, f5);
        let inv = f.ring_inverse().unwrap();
        assert!((&f * &inv).is_one());
    }
}
