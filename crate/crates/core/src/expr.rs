//! The group-expression mini-language.
//!
//! ```text
//! expr := term ('x' term)*
//! term := atom [':' atom '(' 'k=' uint ')']
//! atom := ('C' | 'D' | 'Q' | 'S' | 'A' | 'Heis') uint
//! ```
//!
//! `D n` is the dihedral group of *total* order `n` (so `D14` has 14
//! elements), `Q n` the dicyclic group of order `n`, `S n`/`A n` the
//! symmetric/alternating groups of degree `n` and `Heis p` the Heisenberg
//! group mod `p`. `Cn:Cm(k=j)` is `C_n ⋊ C_m` with the generator of `C_m`
//! acting as multiplication by `j`. `x` is a left-associative direct product
//! and binds looser than `:`. Whitespace between tokens is ignored.

use std::fmt;

use thiserror::Error;

use crate::error::GroupError;
use crate::families::{direct_product, make_family, semidirect_cyclic, FamilyKind};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Heisenberg(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Atom(Atom),
    /// `C_normal ⋊ C_acting` with twist `k`.
    Semidirect {
        normal: u64,
        acting: u64,
        k: u64,
    },
}

/// A direct product of one or more terms, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupExpr {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("unknown atom {found:?} at byte {position}")]
    UnknownAtom { position: usize, found: String },
    #[error("semidirect product at byte {position} needs two cyclic atoms")]
    SemidirectNonCyclic { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::SyntaxError { position, .. }
            | ParseError::UnknownAtom { position, .. }
            | ParseError::SemidirectNonCyclic { position } => *position,
        }
    }
}

/// Either stage of turning text into a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl Atom {
    fn family(self) -> (FamilyKind, u64) {
        match self {
            Atom::Cyclic(n) => (FamilyKind::Cyclic, n),
            Atom::Dihedral(n) => (FamilyKind::Dihedral, n),
            Atom::Dicyclic(n) => (FamilyKind::Dicyclic, n),
            Atom::Symmetric(n) => (FamilyKind::Symmetric, n),
            Atom::Alternating(n) => (FamilyKind::Alternating, n),
            Atom::Heisenberg(p) => (FamilyKind::Heisenberg, p),
        }
    }

    /// Order of the group this atom denotes (no validity check).
    pub fn order(self) -> Option<u64> {
        match self {
            Atom::Cyclic(n) | Atom::Dihedral(n) | Atom::Dicyclic(n) => Some(n),
            Atom::Symmetric(n) => factorial(n),
            Atom::Alternating(n) => factorial(n).map(|f| if n >= 2 { f / 2 } else { f }),
            Atom::Heisenberg(p) => p.checked_pow(3),
        }
    }
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

impl Term {
    pub fn order(&self) -> Option<u64> {
        match self {
            Term::Atom(a) => a.order(),
            Term::Semidirect { normal, acting, .. } => normal.checked_mul(*acting),
        }
    }

    pub fn eval(&self) -> Result<FiniteGroup, GroupError> {
        match *self {
            Term::Atom(a) => {
                let (kind, p) = a.family();
                make_family(kind, p)
            }
            Term::Semidirect { normal, acting, k } => semidirect_cyclic(normal, acting, k),
        }
    }
}

impl GroupExpr {
    pub fn single(term: Term) -> Self {
        GroupExpr { terms: vec![term] }
    }

    pub fn product(mut self, other: GroupExpr) -> Self {
        self.terms.extend(other.terms);
        self
    }

    /// Product of the term orders, if it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        self.terms
            .iter()
            .try_fold(1u64, |acc, t| t.order().and_then(|o| acc.checked_mul(o)))
    }

    pub fn eval(&self) -> Result<FiniteGroup, GroupError> {
        let mut iter = self.terms.iter();
        let first = iter.next().expect("expression has at least one term").eval()?;
        let group = iter.try_fold(first, |acc, t| direct_product(&acc, &t.eval()?))?;
        Ok(group.with_name(self.to_string()))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Dicyclic(n) => write!(f, "Q{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::Heisenberg(p) => write!(f, "Heis{p}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Atom(a) => a.fmt(f),
            Term::Semidirect { normal, acting, k } => write!(f, "C{normal}:C{acting}(k={k})"),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            t.fmt(f)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

pub fn parse(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = vec![p.term()?];
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'x') => {
                p.pos += 1;
                terms.push(p.term()?);
            }
            Some(_) => return Err(p.syntax("expected 'x' or end of input")),
        }
    }
    Ok(GroupExpr { terms })
}

/// Parses and evaluates in one step.
pub fn parse_group(text: &str) -> Result<FiniteGroup, SpecError> {
    Ok(parse(text)?.eval()?)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::SyntaxError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", byte as char)))
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| ParseError::SyntaxError {
            position: start,
            message: "integer too large".into(),
        })
    }

    fn atom(&mut self) -> Result<(usize, Atom), ParseError> {
        self.skip_ws();
        let start = self.pos;
        // Atom names are uppercase-led; the product operator is a lone 'x'.
        if !self.peek().is_some_and(|c| c.is_ascii_uppercase()) {
            return Err(self.syntax("expected a group atom"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic() && c != b'x') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let make: fn(u64) -> Atom = match name {
            "C" => Atom::Cyclic,
            "D" => Atom::Dihedral,
            "Q" => Atom::Dicyclic,
            "S" => Atom::Symmetric,
            "A" => Atom::Alternating,
            "Heis" => Atom::Heisenberg,
            _ => {
                return Err(ParseError::UnknownAtom {
                    position: start,
                    found: name.to_string(),
                })
            }
        };
        Ok((start, make(self.uint()?)))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let (first_pos, first) = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b':') {
            return Ok(Term::Atom(first));
        }
        self.pos += 1;
        let (second_pos, second) = self.atom()?;
        let (Atom::Cyclic(normal), Atom::Cyclic(acting)) = (first, second) else {
            let position = if matches!(first, Atom::Cyclic(_)) {
                second_pos
            } else {
                first_pos
            };
            return Err(ParseError::SemidirectNonCyclic { position });
        };
        self.expect(b'(')?;
        self.expect(b'k')?;
        self.expect(b'=')?;
        let k = self.uint()?;
        self.expect(b')')?;
        Ok(Term::Semidirect { normal, acting, k })
    }
}
