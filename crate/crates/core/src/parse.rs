//! Text forms: an expression grammar for ring elements and canonical printers.
//!
//! ```text
//! sum     := signed (('+' | '-') signed)*
//! signed  := '-' signed | product
//! product := power ('*' power)*
//! power   := atom ('^' exponent)?
//! exponent:= '-'? INT | '(' '-'? INT ')'
//! atom    := INT | IDENT | '(' sum ')'
//! ```
//!
//! Identifiers are `x, y, z, v, w, t`, or any word over `a, b, A, B`
//! (so `ab` and `baBA` are group elements). `v` and `w` are square roots of
//! `x` and `y`.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Coeff, LaurentPoly, Modulus, Monomial, TPoly};
use crate::group::{parse_word, PElement, QElement};
use crate::groupring::{structured_product, RingElemD, RingElemP, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol {name:?} at {position}")]
    UnknownSymbol { name: String, position: usize },
    #[error("negative power of a non-monomial at {position}")]
    NonInvertiblePower { position: usize },
    #[error("component {component} has an odd power of v or w")]
    OddHalfExponent { component: QElement },
    #[error("expected {expected}")]
    WrongShape { expected: &'static str },
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(u128),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits
                    .parse()
                    .map_err(|_| syntax(start, "integer literal too large"))?;
                out.push((Token::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((Token::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            other => return Err(syntax(start, format!("unexpected character {other:?}"))),
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// Abstract syntax of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u128),
    Symbol {
        name: String,
        position: usize,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow {
        base: Box<Expr>,
        exp: i64,
        position: usize,
    },
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<(), ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            _ => Err(syntax(at, format!("expected {what}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.signed()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.signed()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.signed()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn signed(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.signed()?)));
        }
        self.product()
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        let position = self.offset();
        self.bump();
        let parens = self.peek() == Some(&Token::LParen);
        if parens {
            self.bump();
        }
        let negative = self.peek() == Some(&Token::Minus);
        if negative {
            self.bump();
        }
        let at = self.offset();
        let magnitude = match self.bump() {
            Some(Token::Int(n)) => {
                i64::try_from(n).map_err(|_| syntax(at, "exponent too large"))?
            }
            _ => return Err(syntax(at, "expected integer exponent")),
        };
        if parens {
            self.expect(Token::RParen, "')'")?;
        }
        let exp = if negative { -magnitude } else { magnitude };
        if self.peek() == Some(&Token::Caret) {
            return Err(syntax(self.offset(), "chained '^' needs parentheses"));
        }
        Ok(Expr::Pow {
            base: Box::new(base),
            exp,
            position,
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Ident(name)) => Ok(Expr::Symbol { name, position: at }),
            Some(Token::LParen) => {
                let inner = self.sum()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => Err(syntax(at, "expected a number, symbol or '('")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parse text into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let expr = parser.sum()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(expr)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(_) => 2,
            Expr::Mul(..) => 3,
            Expr::Pow { .. } => 4,
            Expr::Int(_) | Expr::Symbol { .. } => 5,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, child: &Expr, min: u8) -> fmt::Result {
        if child.precedence() < min {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Symbol { name, .. } => f.write_str(name),
            Expr::Neg(inner) => {
                f.write_str("-")?;
                self.write_child(f, inner, 2)
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                self.write_child(f, l, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                self.write_child(f, r, 2)
            }
            Expr::Mul(l, r) => {
                self.write_child(f, l, 3)?;
                f.write_str("*")?;
                self.write_child(f, r, 4)
            }
            Expr::Pow { base, exp, .. } => {
                self.write_child(f, base, 5)?;
                write!(f, "^{exp}")
            }
        }
    }
}

/// Structural equality ignoring source positions.
pub fn same_shape(a: &Expr, b: &Expr) -> bool {
    match (a, b) {
        (Expr::Int(x), Expr::Int(y)) => x == y,
        (Expr::Symbol { name: x, .. }, Expr::Symbol { name: y, .. }) => x == y,
        (Expr::Neg(x), Expr::Neg(y)) => same_shape(x, y),
        (Expr::Add(a1, a2), Expr::Add(b1, b2))
        | (Expr::Sub(a1, a2), Expr::Sub(b1, b2))
        | (Expr::Mul(a1, a2), Expr::Mul(b1, b2)) => same_shape(a1, b1) && same_shape(a2, b2),
        (
            Expr::Pow {
                base: x, exp: e, ..
            },
            Expr::Pow {
                base: y, exp: g, ..
            },
        ) => e == g && same_shape(x, y),
        _ => false,
    }
}

/// Element of the group ring of the half-lattice extension; components may
/// carry odd powers of `v`, `w`.
type Wide = [LaurentPoly; 4];

fn wide_zero(m: Modulus) -> Wide {
    std::array::from_fn(|_| LaurentPoly::zero(m))
}

fn wide_scalar(c: i128, m: Modulus) -> Wide {
    let mut out = wide_zero(m);
    out[0] = LaurentPoly::monomial(Monomial::ONE, c, m);
    out
}

fn wide_group(e: PElement, m: Modulus) -> Wide {
    let mut out = wide_zero(m);
    out[e.g.index()] = LaurentPoly::xyz(e.m, e.n, e.k, m);
    out
}

fn wide_add(a: &Wide, b: &Wide) -> Wide {
    std::array::from_fn(|i| &a[i] + &b[i])
}

fn wide_neg(a: &Wide) -> Wide {
    std::array::from_fn(|i| a[i].neg())
}

fn wide_inverse(a: &Wide, position: usize) -> Result<Wide, ParseError> {
    let m = a[0].modulus();
    let mut single = None;
    for (i, part) in a.iter().enumerate() {
        match (part.len(), single) {
            (0, _) => {}
            (1, None) => single = Some((i, part.as_monomial().unwrap())),
            _ => return Err(ParseError::NonInvertiblePower { position }),
        }
    }
    let (idx, (mono, c)) = single.ok_or(ParseError::NonInvertiblePower { position })?;
    // (c·u·σ(g))^-1 = σ(g)^-1 · u^-1 c^-1
    let section_inv = wide_group(PElement::section(QElement::from_index(idx)).inv(), m);
    let mut rest = wide_zero(m);
    rest[0] = LaurentPoly::monomial(-mono, c.inverse().unwrap().value() as i128, m);
    Ok(structured_product(&section_inv, &rest))
}

fn wide_pow(base: &Wide, exp: i64, position: usize) -> Result<Wide, ParseError> {
    let m = base[0].modulus();
    let b = if exp < 0 {
        wide_inverse(base, position)?
    } else {
        base.clone()
    };
    let mut acc = wide_scalar(1, m);
    for _ in 0..exp.unsigned_abs() {
        acc = structured_product(&acc, &b);
    }
    Ok(acc)
}

fn eval_wide(expr: &Expr, m: Modulus) -> Result<Wide, ParseError> {
    Ok(match expr {
        Expr::Int(n) => wide_scalar((n % m.get() as u128) as i128, m),
        Expr::Symbol { name, position } => {
            let mono = |mo: Monomial| {
                let mut out = wide_zero(m);
                out[0] = LaurentPoly::monomial(mo, 1, m);
                out
            };
            match name.as_str() {
                "x" => mono(Monomial::xyz(1, 0, 0)),
                "y" => mono(Monomial::xyz(0, 1, 0)),
                "z" => mono(Monomial::xyz(0, 0, 1)),
                "v" => mono(Monomial::new(1, 0, 0)),
                "w" => mono(Monomial::new(0, 1, 0)),
                word => match parse_word(word) {
                    Ok(e) => wide_group(e, m),
                    Err(_) => {
                        return Err(ParseError::UnknownSymbol {
                            name: word.to_string(),
                            position: *position,
                        })
                    }
                },
            }
        }
        Expr::Neg(inner) => wide_neg(&eval_wide(inner, m)?),
        Expr::Add(l, r) => wide_add(&eval_wide(l, m)?, &eval_wide(r, m)?),
        Expr::Sub(l, r) => wide_add(&eval_wide(l, m)?, &wide_neg(&eval_wide(r, m)?)),
        Expr::Mul(l, r) => structured_product(&eval_wide(l, m)?, &eval_wide(r, m)?),
        Expr::Pow {
            base,
            exp,
            position,
        } => wide_pow(&eval_wide(base, m)?, *exp, *position)?,
    })
}

/// Parse an element of `K[P]`.
pub fn parse_ring_element(text: &str, modulus: Modulus) -> Result<RingElemP, ParseError> {
    let parts = eval_wide(&parse_expr(text)?, modulus)?;
    RingElemP::from_parts(parts).map_err(|e| match e {
        RingError::HalfExponent { component } => ParseError::OddHalfExponent { component },
        RingError::Algebra(_) => unreachable!("single modulus"),
    })
}

/// Parse a Laurent polynomial in `v, w, z` (with `x = v^2`, `y = w^2`).
pub fn parse_poly(text: &str, modulus: Modulus) -> Result<LaurentPoly, ParseError> {
    let [p, q, r, s] = eval_wide(&parse_expr(text)?, modulus)?;
    if !(q.is_zero() && r.is_zero() && s.is_zero()) {
        return Err(ParseError::WrongShape {
            expected: "a polynomial without a or b",
        });
    }
    Ok(p)
}

/// Parse a single group element, e.g. `x^1*y^0*z^-1*ab` or `baBA`.
pub fn parse_pelement(text: &str) -> Result<PElement, ParseError> {
    // large prime so that no integer literal other than 1 can pass as coefficient 1
    let m = Modulus::new(Modulus::MAX).unwrap();
    let alpha = parse_ring_element(text, m)?;
    match alpha.terms().as_slice() {
        [(e, c)] if c.value() == 1 => Ok(*e),
        _ => Err(ParseError::WrongShape {
            expected: "a single group element",
        }),
    }
}

fn eval_dihedral(expr: &Expr, m: Modulus) -> Result<RingElemD, ParseError> {
    Ok(match expr {
        Expr::Int(n) => RingElemD::new(
            TPoly::monomial(0, (n % m.get() as u128) as i128, m),
            TPoly::zero(m),
        )
        .unwrap(),
        Expr::Symbol { name, position } => match name.as_str() {
            "t" => RingElemD::from_group(crate::group::DElement::rotation(1), m),
            "b" => RingElemD::from_group(crate::group::DElement::REFLECTION, m),
            other => {
                return Err(ParseError::UnknownSymbol {
                    name: other.to_string(),
                    position: *position,
                })
            }
        },
        Expr::Neg(inner) => {
            let e = eval_dihedral(inner, m)?;
            RingElemD::new(e.u().neg(), e.v().neg()).unwrap()
        }
        Expr::Add(l, r) => &eval_dihedral(l, m)? + &eval_dihedral(r, m)?,
        Expr::Sub(l, r) => {
            let rhs = eval_dihedral(r, m)?;
            &eval_dihedral(l, m)? + &RingElemD::new(rhs.u().neg(), rhs.v().neg()).unwrap()
        }
        Expr::Mul(l, r) => &eval_dihedral(l, m)? * &eval_dihedral(r, m)?,
        Expr::Pow {
            base,
            exp,
            position,
        } => {
            let b = eval_dihedral(base, m)?;
            let b = if *exp < 0 {
                match b.terms().as_slice() {
                    [(d, c)] => {
                        let inv = RingElemD::from_group(d.inv(), m);
                        let s = c.inverse().unwrap().value() as i128;
                        RingElemD::new(
                            inv.u().scale(Coeff::new(s, m)),
                            inv.v().scale(Coeff::new(s, m)),
                        )
                        .unwrap()
                    }
                    _ => {
                        return Err(ParseError::NonInvertiblePower {
                            position: *position,
                        })
                    }
                }
            } else {
                b
            };
            (0..exp.unsigned_abs()).fold(RingElemD::one(m), |acc, _| &acc * &b)
        }
    })
}

/// Parse an element of `K[D∞]` over the symbols `t` and `b`.
pub fn parse_dihedral_element(text: &str, modulus: Modulus) -> Result<RingElemD, ParseError> {
    eval_dihedral(&parse_expr(text)?, modulus)
}

fn push_factor(factors: &mut Vec<String>, sym: &str, e: i64) {
    match e {
        0 => {}
        1 => factors.push(sym.to_string()),
        e => factors.push(format!("{sym}^{e}")),
    }
}

fn format_term(factors: Vec<String>, c: Coeff) -> String {
    match (factors.is_empty(), c.value()) {
        (true, v) => v.to_string(),
        (false, 1) => factors.join("*"),
        (false, v) => format!("{v}*{}", factors.join("*")),
    }
}

/// Canonical text of a Laurent polynomial: terms in ascending `(v, w, z)` order,
/// even powers of `v`, `w` written as powers of `x`, `y`.
pub fn format_poly(f: &LaurentPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = f
        .terms()
        .map(|(e, c)| {
            let mut factors = Vec::new();
            if e.v % 2 == 0 {
                push_factor(&mut factors, "x", e.v / 2);
            } else {
                push_factor(&mut factors, "v", e.v);
            }
            if e.w % 2 == 0 {
                push_factor(&mut factors, "y", e.w / 2);
            } else {
                push_factor(&mut factors, "w", e.w);
            }
            push_factor(&mut factors, "z", e.z);
            format_term(factors, c)
        })
        .collect();
    terms.join(" + ")
}

/// Canonical text `P + (Q)*a + (R)*b + (S)*ab`, omitting zero components.
pub fn format_ring_element(alpha: &RingElemP) -> String {
    let mut pieces = Vec::new();
    for g in QElement::ALL {
        let part = alpha.component(g);
        if part.is_zero() {
            continue;
        }
        if g == QElement::ONE {
            pieces.push(format_poly(part));
        } else {
            pieces.push(format!("({})*{}", format_poly(part), g));
        }
    }
    if pieces.is_empty() {
        "0".to_string()
    } else {
        pieces.join(" + ")
    }
}

fn format_tpoly(f: &TPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.terms()
        .map(|(n, c)| {
            let mut factors = Vec::new();
            push_factor(&mut factors, "t", n);
            format_term(factors, c)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Canonical text `U + (V)*b` of an element of `K[D∞]`.
pub fn format_dihedral(d: &RingElemD) -> String {
    match (d.u().is_zero(), d.v().is_zero()) {
        (true, true) => "0".to_string(),
        (false, true) => format_tpoly(d.u()),
        (true, false) => format!("({})*b", format_tpoly(d.v())),
        (false, false) => format!("{} + ({})*b", format_tpoly(d.u()), format_tpoly(d.v())),
    }
}
