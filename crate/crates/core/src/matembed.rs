//! Regular embedding `K[P] → M_4(K[x^±, y^±, z^±])`.
//!
//! `K[P]` is a free right module over the lattice ring with basis
//! `σ(1), σ(a), σ(b), σ(ab)`: every element is `Σ σ(g) c_g`. Left
//! multiplication by `α` is linear for this structure; [`embed`] returns its
//! matrix, so column `g` holds the coordinates of `α·σ(g)`. Since
//! `u·σ(g) = σ(g)·u^g`, a coordinate `c_g` and the left component `(β)_g` of the
//! same element are related by the action of `g`.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::algebra::{LaurentPoly, Modulus};
use crate::group::{PElement, QElement};
use crate::groupring::RingElemP;
use crate::units::{CertificateMethod, UnitCertificate, UnitError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("zero is not a unit")]
    ZeroElement,
    #[error("adjugate-derived inverse failed verification: {0}")]
    InverseOutsideImage(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat4 {
    entries: [[LaurentPoly; 4]; 4],
}

impl Mat4 {
    pub fn identity(modulus: Modulus) -> Self {
        Mat4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    if i == j {
                        LaurentPoly::one(modulus)
                    } else {
                        LaurentPoly::zero(modulus)
                    }
                })
            }),
        }
    }

    pub fn from_entries(entries: [[LaurentPoly; 4]; 4]) -> Self {
        Mat4 { entries }
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[[LaurentPoly; 4]; 4] {
        &self.entries
    }

    pub fn modulus(&self) -> Modulus {
        self.entries[0][0].modulus()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.modulus())
    }

    /// `M · adj(M) = adj(M) · M = det(M) · I`.
    pub fn adjugate(&self) -> Mat4 {
        Mat4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    // adj[i][j] = (-1)^(i+j) * minor obtained by deleting row j, column i
                    let rows: Vec<usize> = (0..4).filter(|&r| r != j).collect();
                    let cols: Vec<usize> = (0..4).filter(|&c| c != i).collect();
                    let minor = self.minor(&rows, &cols);
                    if (i + j) % 2 == 0 {
                        minor
                    } else {
                        minor.neg()
                    }
                })
            }),
        }
    }

    /// Cofactor expansion along the first listed row.
    fn minor(&self, rows: &[usize], cols: &[usize]) -> LaurentPoly {
        match rows {
            [] => LaurentPoly::one(self.modulus()),
            [r] => self.entries[*r][cols[0]].clone(),
            [r, rest @ ..] => {
                let mut acc = LaurentPoly::zero(self.modulus());
                for (idx, &c) in cols.iter().enumerate() {
                    let entry = &self.entries[*r][c];
                    if entry.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
                    let term = entry * &self.minor(rest, &sub_cols);
                    acc = if idx % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        }
    }
}

impl Mul for &Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: &Mat4) -> Mat4 {
        Mat4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..4).fold(LaurentPoly::zero(self.modulus()), |acc, k| {
                        &acc + &(&self.entries[i][k] * &rhs.entries[k][j])
                    })
                })
            }),
        }
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(crate::parse::format_poly).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// Right-module coordinates of an element.
fn coordinates(beta: &RingElemP) -> [LaurentPoly; 4] {
    std::array::from_fn(|i| beta.parts()[i].act(QElement::from_index(i)))
}

/// Inverse of [`coordinates`]; fails if a coordinate has half-integer exponents.
fn from_coordinates(coords: [LaurentPoly; 4]) -> Result<RingElemP, crate::groupring::RingError> {
    let mut i = 0;
    RingElemP::from_parts(coords.map(|c| {
        let g = QElement::from_index(i);
        i += 1;
        c.act(g)
    }))
}

/// Matrix of left multiplication by `alpha`, computed with the structured product.
pub fn embed(alpha: &RingElemP) -> Mat4 {
    let m = alpha.modulus();
    let columns: [[LaurentPoly; 4]; 4] = std::array::from_fn(|j| {
        let image = alpha * &RingElemP::from_group(PElement::section(QElement::from_index(j)), m);
        coordinates(&image)
    });
    Mat4 {
        entries: std::array::from_fn(|i| std::array::from_fn(|j| columns[j][i].clone())),
    }
}

pub fn det4(m: &Mat4) -> LaurentPoly {
    m.minor(&[0, 1, 2, 3], &[0, 1, 2, 3])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Unit(Box<UnitCertificate>),
    NonUnit { determinant: LaurentPoly },
}

impl Decision {
    pub fn is_unit(&self) -> bool {
        matches!(self, Decision::Unit(_))
    }
}

/// Decide invertibility of `alpha` from `det(embed(alpha))`; on success the
/// inverse is read off the adjugate and checked by multiplication.
pub fn decide_unit(alpha: &RingElemP) -> Result<Decision, DecideError> {
    if alpha.is_zero() {
        return Err(DecideError::ZeroElement);
    }
    let mat = embed(alpha);
    let det = det4(&mat);
    let Some(det_inv) = det.ring_inverse() else {
        return Ok(Decision::NonUnit { determinant: det });
    };
    // coordinates of alpha^-1 = M^-1 e_1 = adj(M) e_1 / det
    let adj = mat.adjugate();
    let coords: [LaurentPoly; 4] = std::array::from_fn(|i| adj.get(i, 0) * &det_inv);
    let inverse =
        from_coordinates(coords).map_err(|e| DecideError::InverseOutsideImage(e.to_string()))?;
    match UnitCertificate::new(alpha.clone(), inverse, CertificateMethod::Adjugate) {
        Ok(cert) => Ok(Decision::Unit(Box::new(cert))),
        Err(UnitError::VerificationFailed { side }) => Err(DecideError::InverseOutsideImage(
            format!("{side} product is not 1"),
        )),
        Err(e) => Err(DecideError::InverseOutsideImage(e.to_string())),
    }
}
