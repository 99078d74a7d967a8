use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

/// `t^n` or `t^n b̄` in `D∞ = <t, b̄ | b̄² = 1, t^b̄ = t^-1>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DElement {
    pub n: i64,
    pub flip: bool,
}

impl DElement {
    pub const IDENTITY: DElement = DElement { n: 0, flip: false };
    pub const REFLECTION: DElement = DElement { n: 0, flip: true };

    pub const fn rotation(n: i64) -> Self {
        DElement { n, flip: false }
    }

    pub const fn reflection(n: i64) -> Self {
        DElement { n, flip: true }
    }

    pub fn inv(self) -> DElement {
        if self.flip {
            self
        } else {
            DElement::rotation(-self.n)
        }
    }
}

impl Mul for DElement {
    type Output = DElement;
    fn mul(self, rhs: DElement) -> DElement {
        let n = if self.flip {
            self.n - rhs.n
        } else {
            self.n + rhs.n
        };
        DElement {
            n,
            flip: self.flip ^ rhs.flip,
        }
    }
}

impl fmt::Display for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flip {
            write!(f, "t^{}*b", self.n)
        } else {
            write!(f, "t^{}", self.n)
        }
    }
}

/// Generating set used to measure word length in `D∞`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DihedralGenerators {
    /// The two involutions `{b̄, t·b̄}`.
    #[default]
    Reflections,
    /// The images `{t, t^-1, b̄}` of `a^±1` and `b` under `π`.
    RotationAndReflection,
}

impl DihedralGenerators {
    fn elements(self) -> Vec<DElement> {
        match self {
            Self::Reflections => vec![DElement::REFLECTION, DElement::reflection(1)],
            Self::RotationAndReflection => vec![
                DElement::rotation(1),
                DElement::rotation(-1),
                DElement::REFLECTION,
            ],
        }
    }
}

/// Geodesic word length, closed form. Agrees with [`dihedral_word_length_bfs`].
pub fn dihedral_word_length(d: DElement, gens: DihedralGenerators) -> u64 {
    let n = d.n.unsigned_abs();
    match (gens, d.flip) {
        (DihedralGenerators::Reflections, false) => 2 * n,
        (DihedralGenerators::Reflections, true) if d.n >= 1 => 2 * n - 1,
        (DihedralGenerators::Reflections, true) => 2 * n + 1,
        (DihedralGenerators::RotationAndReflection, false) => n,
        (DihedralGenerators::RotationAndReflection, true) => n + 1,
    }
}

/// Geodesic word length by breadth-first search of the Cayley graph.
pub fn dihedral_word_length_bfs(d: DElement, gens: DihedralGenerators) -> u64 {
    let gens = gens.elements();
    let mut seen = HashSet::from([DElement::IDENTITY]);
    let mut queue = VecDeque::from([(DElement::IDENTITY, 0u64)]);
    while let Some((e, dist)) = queue.pop_front() {
        if e == d {
            return dist;
        }
        for &g in &gens {
            let next = e * g;
            if seen.insert(next) {
                queue.push_back((next, dist + 1));
            }
        }
    }
    unreachable!("both generating sets generate D∞")
}
