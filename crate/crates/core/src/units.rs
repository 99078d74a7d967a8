//! Piecewise symmetric units.
//!
//! A quadruple `(p0, q0, r0, s0)` of Laurent polynomials in `v = x^½`,
//! `w = y^½`, `z`, each invariant under the action of `ab`, gives a unit
//! `α = p + qa + rb + s·ab` with `p = vw·p0`, `q = w^-1·q0`, `r = v·r0`,
//! `s = s0` as soon as
//!
//! ```text
//! p0^a s0 - q0 r0^a + z^-1 (p0^a s0 - q0 r0^a)^a = 0
//! p0 p0^a - q0 q0^a - r0 r0^a + s0 s0^a          = 1
//! ```
//!
//! The inverse is `x^-1 p^a - x^-1 q·a - y^-1 r·b + z^-1 s^a·ab`.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, LaurentPoly, Modulus, Monomial};
use crate::group::QElement;
use crate::groupring::{RingElemP, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("symmetric quadruple fails the unit criterion: {0:?}")]
    CriterionFailed(CriterionReport),
    #[error("recovered component {component} is not a polynomial in x, y, z")]
    ParityViolation { component: QElement },
    #[error("constructed inverse does not verify ({side})")]
    VerificationFailed { side: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricQuadruple {
    pub p0: LaurentPoly,
    pub q0: LaurentPoly,
    pub r0: LaurentPoly,
    pub s0: LaurentPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub ab_invariant: bool,
    pub eq1_holds: bool,
    pub eq2_holds: bool,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.ab_invariant && self.eq1_holds && self.eq2_holds
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMethod {
    SymmetricConstruction,
    Adjugate,
    External,
}

/// A pair `(α, α')` with `α'α = 1` and `αα' = 1`, both checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCertificate {
    alpha: RingElemP,
    alpha_inv: RingElemP,
    method: CertificateMethod,
}

impl UnitCertificate {
    /// Verifies both products before accepting the pair.
    pub fn new(
        alpha: RingElemP,
        alpha_inv: RingElemP,
        method: CertificateMethod,
    ) -> Result<Self, UnitError> {
        if !alpha_inv.try_mul(&alpha)?.is_one() {
            return Err(UnitError::VerificationFailed { side: "left" });
        }
        if !alpha.try_mul(&alpha_inv)?.is_one() {
            return Err(UnitError::VerificationFailed { side: "right" });
        }
        Ok(UnitCertificate {
            alpha,
            alpha_inv,
            method,
        })
    }

    pub fn alpha(&self) -> &RingElemP {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> &RingElemP {
        &self.alpha_inv
    }

    pub fn method(&self) -> CertificateMethod {
        self.method
    }
}

impl SymmetricQuadruple {
    pub fn modulus(&self) -> Modulus {
        self.p0.modulus()
    }

    fn parts(&self) -> [&LaurentPoly; 4] {
        [&self.p0, &self.q0, &self.r0, &self.s0]
    }

    fn check_moduli(&self) -> Result<(), AlgebraError> {
        let m = self.modulus();
        for f in self.parts() {
            if f.modulus() != m {
                return Err(AlgebraError::ModulusMismatch {
                    left: m.get(),
                    right: f.modulus().get(),
                });
            }
        }
        Ok(())
    }

    /// Substitute `v ↦ v^(2k+1)` in all four polynomials.
    pub fn stretch_v(&self, k: u32) -> Self {
        let factor = 2 * k as i64 + 1;
        let sub =
            |f: &LaurentPoly| f.map_exponents(|e: Monomial| Monomial::new(e.v * factor, e.w, e.z));
        SymmetricQuadruple {
            p0: sub(&self.p0),
            q0: sub(&self.q0),
            r0: sub(&self.r0),
            s0: sub(&self.s0),
        }
    }

    /// The quadruple behind the non-trivial unit of `F_2[P]`, reduced mod `modulus`:
    ///
    /// ```text
    /// p0 = v̄ w̄ (1 + z^-1)
    /// q0 = v^-2 w^-1 + v^2 w + w̄ z
    /// r0 = v̄ + (v^-1 w^-2 + v w^2) z
    /// s0 = 1 + (v^-2 + v^2 + w^-2 + w^2) z^-1
    /// ```
    ///
    /// with `v̄ = v^-1 + v`, `w̄ = w^-1 + w`.
    pub fn counterexample_data(modulus: Modulus) -> Self {
        let poly = |terms: &[(i64, i64, i64)]| {
            LaurentPoly::from_terms(
                terms.iter().map(|&(i, j, k)| (Monomial::new(i, j, k), 1)),
                modulus,
            )
        };
        SymmetricQuadruple {
            p0: poly(&[
                (-1, -1, 0),
                (-1, 1, 0),
                (1, -1, 0),
                (1, 1, 0),
                (-1, -1, -1),
                (-1, 1, -1),
                (1, -1, -1),
                (1, 1, -1),
            ]),
            q0: poly(&[(-2, -1, 0), (2, 1, 0), (0, -1, 1), (0, 1, 1)]),
            r0: poly(&[(-1, 0, 0), (1, 0, 0), (-1, -2, 1), (1, 2, 1)]),
            s0: poly(&[(0, 0, 0), (-2, 0, -1), (2, 0, -1), (0, -2, -1), (0, 2, -1)]),
        }
    }
}

/// Evaluate the symmetry condition and both equations, each independently.
pub fn check_lemma_criterion(sq: &SymmetricQuadruple) -> Result<CriterionReport, AlgebraError> {
    sq.check_moduli()?;
    let (a, ab) = (QElement::A, QElement::AB);
    let m = sq.modulus();
    let SymmetricQuadruple { p0, q0, r0, s0 } = sq;

    let ab_invariant = sq.parts().iter().all(|f| f.act(ab) == **f);

    let xi = &(&p0.act(a) * s0) - &(q0 * &r0.act(a));
    let eq1 = &xi + &xi.act(a).shift(Monomial::new(0, 0, -1));
    let eq1_holds = eq1.is_zero();

    let eq2 =
        &(&(p0 * &p0.act(a)) - &(q0 * &q0.act(a))) + &(&(s0 * &s0.act(a)) - &(r0 * &r0.act(a)));
    let eq2_holds = eq2 == LaurentPoly::one(m);

    Ok(CriterionReport {
        ab_invariant,
        eq1_holds,
        eq2_holds,
    })
}

/// Recover `α` from a symmetric quadruple and pair it with its inverse.
pub fn build_unit_from_symmetric(sq: &SymmetricQuadruple) -> Result<UnitCertificate, UnitError> {
    let report = check_lemma_criterion(sq)?;
    if !report.passed() {
        return Err(UnitError::CriterionFailed(report));
    }
    let p = sq.p0.shift(Monomial::new(1, 1, 0));
    let q = sq.q0.shift(Monomial::new(0, -1, 0));
    let r = sq.r0.shift(Monomial::new(1, 0, 0));
    let s = sq.s0.clone();
    let alpha = RingElemP::new(p, q, r, s).map_err(parity)?;

    let (a, x_inv, y_inv, z_inv) = (
        QElement::A,
        Monomial::xyz(-1, 0, 0),
        Monomial::xyz(0, -1, 0),
        Monomial::xyz(0, 0, -1),
    );
    let alpha_inv = RingElemP::new(
        alpha.p().act(a).shift(x_inv),
        alpha.q().neg().shift(x_inv),
        alpha.r().neg().shift(y_inv),
        alpha.s().act(a).shift(z_inv),
    )
    .map_err(parity)?;

    UnitCertificate::new(alpha, alpha_inv, CertificateMethod::SymmetricConstruction)
}

fn parity(e: RingError) -> UnitError {
    match e {
        RingError::HalfExponent { component } => UnitError::ParityViolation { component },
        RingError::Algebra(e) => UnitError::Algebra(e),
    }
}

/// The non-trivial unit of `F_2[P]` with its inverse.
pub fn counterexample() -> UnitCertificate {
    build_unit_from_symmetric(&SymmetricQuadruple::counterexample_data(Modulus::TWO))
        .expect("the fixed quadruple satisfies the criterion over F_2")
}

/// `α_k`: the counterexample with `x^½` replaced by `x^(k+½)`.
pub fn family_alpha(k: u32) -> UnitCertificate {
    build_unit_from_symmetric(&SymmetricQuadruple::counterexample_data(Modulus::TWO).stretch_v(k))
        .expect("stretching v preserves the criterion")
}
