//! The group `P = <a, b | b^-1 a^2 b = a^-2, a^-1 b^2 a = b^-2>`.
//!
//! `P` is an extension of the lattice `<x, y, z> = Z^3` (`x = a^2`, `y = b^2`,
//! `z = (ab)^2`) by the Klein four group `Q`. Every element has a unique normal
//! form `x^m y^n z^k σ(g)` with `σ(g) ∈ {1, a, b, ab}`, and products are computed
//! from the conjugation action of `Q` on the lattice and the cocycle
//! `f(g, h) = σ(g) σ(h) σ(gh)^-1`.

mod dihedral;

pub use dihedral::{dihedral_word_length, dihedral_word_length_bfs, DElement, DihedralGenerators};

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("unexpected character {letter:?} at position {position} (words use a, b, A, B)")]
    BadLetter { letter: char, position: usize },
}

/// An element of `Q = Z/2 × Z/2`, stored as the pair of exponents of `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QElement {
    a: bool,
    b: bool,
}

impl QElement {
    pub const ONE: QElement = QElement { a: false, b: false };
    pub const A: QElement = QElement { a: true, b: false };
    pub const B: QElement = QElement { a: false, b: true };
    pub const AB: QElement = QElement { a: true, b: true };

    /// Basis order used throughout: `1, a, b, ab`.
    pub const ALL: [QElement; 4] = [Self::ONE, Self::A, Self::B, Self::AB];

    pub fn new(a: bool, b: bool) -> Self {
        QElement { a, b }
    }

    /// Position in [`QElement::ALL`].
    pub fn index(self) -> usize {
        self.a as usize | (self.b as usize) << 1
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn has_a(self) -> bool {
        self.a
    }

    pub fn has_b(self) -> bool {
        self.b
    }

    /// Which of `x`, `y`, `z` are inverted by conjugation with `σ(self)`.
    pub fn inversions(self) -> (bool, bool, bool) {
        match (self.a, self.b) {
            (false, false) => (false, false, false),
            (true, false) => (false, true, true),
            (false, true) => (true, false, true),
            (true, true) => (true, true, false),
        }
    }

    /// Action on a lattice vector of `(x, y, z)` exponents.
    pub fn act(self, [m, n, k]: [i64; 3]) -> [i64; 3] {
        let (fx, fy, fz) = self.inversions();
        let s = |f: bool, e: i64| if f { -e } else { e };
        [s(fx, m), s(fy, n), s(fz, k)]
    }

    pub fn name(self) -> &'static str {
        match (self.a, self.b) {
            (false, false) => "1",
            (true, false) => "a",
            (false, true) => "b",
            (true, true) => "ab",
        }
    }
}

impl Mul for QElement {
    type Output = QElement;
    fn mul(self, rhs: QElement) -> QElement {
        QElement {
            a: self.a ^ rhs.a,
            b: self.b ^ rhs.b,
        }
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The cocycle `f(g, h) ∈ Z^3` as `(x, y, z)` exponents; rows `g`, columns `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CocycleTable([[[i64; 3]; 4]; 4]);

impl CocycleTable {
    pub fn get(&self, g: QElement, h: QElement) -> [i64; 3] {
        self.0[g.index()][h.index()]
    }
}

pub const COCYCLE: CocycleTable = CocycleTable([
    // 1
    [[0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]],
    // a:  1, x, 1, x
    [[0, 0, 0], [1, 0, 0], [0, 0, 0], [1, 0, 0]],
    // b:  1, x^-1 y z^-1, y, x^-1 z^-1
    [[0, 0, 0], [-1, 1, -1], [0, 1, 0], [-1, 0, -1]],
    // ab: 1, y^-1 z, y^-1, z
    [[0, 0, 0], [0, -1, 1], [0, -1, 0], [0, 0, 1]],
]);

/// `x^m y^n z^k σ(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PElement {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    pub g: QElement,
}

impl PElement {
    pub const IDENTITY: PElement = PElement::new(0, 0, 0, QElement::ONE);

    pub const fn new(m: i64, n: i64, k: i64, g: QElement) -> Self {
        PElement { m, n, k, g }
    }

    pub const fn lattice(m: i64, n: i64, k: i64) -> Self {
        PElement::new(m, n, k, QElement::ONE)
    }

    pub const fn section(g: QElement) -> Self {
        PElement::new(0, 0, 0, g)
    }

    pub fn a() -> Self {
        Self::section(QElement::A)
    }

    pub fn b() -> Self {
        Self::section(QElement::B)
    }

    pub fn translation(self) -> [i64; 3] {
        [self.m, self.n, self.k]
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// `(u, g)(u', h) = (u + g·u' + f(g, h), gh)`.
    fn compose(self, rhs: PElement) -> PElement {
        let moved = self.g.act(rhs.translation());
        let f = COCYCLE.get(self.g, rhs.g);
        PElement {
            m: self.m + moved[0] + f[0],
            n: self.n + moved[1] + f[1],
            k: self.k + moved[2] + f[2],
            g: self.g * rhs.g,
        }
    }

    pub fn inv(self) -> PElement {
        // (u, g)(u', g) = 1  <=>  u' = g·(-u - f(g, g))
        let f = COCYCLE.get(self.g, self.g);
        let [m, n, k] = self.g.act([-self.m - f[0], -self.n - f[1], -self.k - f[2]]);
        PElement::new(m, n, k, self.g)
    }

    pub fn pow(self, e: i64) -> PElement {
        let base = if e < 0 { self.inv() } else { self };
        (0..e.unsigned_abs()).fold(Self::IDENTITY, |acc, _| acc * base)
    }

    /// `w^-1 · self · w`.
    pub fn conjugate(self, w: PElement) -> PElement {
        w.inv() * self * w
    }

    /// Image under `π : P → D∞`, `a ↦ t`, `b ↦ b̄` (so `x ↦ t²`, `y, z ↦ 1`).
    pub fn project_dihedral(self) -> DElement {
        let base = DElement::rotation(2 * self.m);
        let top = match (self.g.has_a(), self.g.has_b()) {
            (false, false) => DElement::IDENTITY,
            (true, false) => DElement::rotation(1),
            (false, true) => DElement::REFLECTION,
            (true, true) => DElement::rotation(1) * DElement::REFLECTION,
        };
        base * top
    }

    /// Image in `P / <<x, y>> ≅ Z/2 * Z/2`, identified with `D∞` by `a ↦ t·b̄`,
    /// `b ↦ b̄`. The generator product `ab` goes to `t`, so `z ↦ t²`.
    pub fn project_mod_xy(self) -> DElement {
        let base = DElement::rotation(2 * self.k);
        let top = match (self.g.has_a(), self.g.has_b()) {
            (false, false) => DElement::IDENTITY,
            (true, false) => DElement::rotation(1) * DElement::REFLECTION,
            (false, true) => DElement::REFLECTION,
            (true, true) => DElement::rotation(1),
        };
        base * top
    }
}

impl Mul for PElement {
    type Output = PElement;
    fn mul(self, rhs: PElement) -> PElement {
        self.compose(rhs)
    }
}

/// Orders by `Q` part first, then lexicographically by `(m, n, k)`.
impl Ord for PElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.g, self.m, self.n, self.k).cmp(&(other.g, other.m, other.n, other.k))
    }
}

impl PartialOrd for PElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}*y^{}*z^{}*{}", self.m, self.n, self.k, self.g)
    }
}

/// Fold a word over `a, b, A = a^-1, B = b^-1` into normal form.
pub fn parse_word(word: &str) -> Result<PElement, GroupError> {
    let a = PElement::a();
    let b = PElement::b();
    let (a_inv, b_inv) = (a.inv(), b.inv());
    word.chars()
        .enumerate()
        .try_fold(PElement::IDENTITY, |acc, (position, letter)| {
            let gen = match letter {
                'a' => a,
                'b' => b,
                'A' => a_inv,
                'B' => b_inv,
                _ => return Err(GroupError::BadLetter { letter, position }),
            };
            Ok(acc * gen)
        })
}

/// Every element `x^m y^n z^k σ(g)` with `|m|, |n|, |k| <= bound`, in [`PElement`] order.
pub fn elements_in_box(bound: i64) -> Vec<PElement> {
    let mut out = Vec::with_capacity((2 * bound as usize + 1).pow(3) * 4);
    for g in QElement::ALL {
        for m in -bound..=bound {
            for n in -bound..=bound {
                for k in -bound..=bound {
                    out.push(PElement::new(m, n, k, g));
                }
            }
        }
    }
    out
}
