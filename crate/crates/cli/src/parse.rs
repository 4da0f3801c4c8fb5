//! Expression syntax for pairings and quadratic forms.
//!
//! ```text
//! expr := '0' | term (('+' | '#') term)*
//! term := [count '*'] gen
//! gen  := 'A^'k'('a')' | 'E0^'k | 'E1^'k | 'C'p'^'k'('a')'
//!       | 'Q^'k'('abar')' | 'QE0^'k'['α','γ']' | 'QE1^'k'['α','γ']'
//!       | 'L('n','q')'
//! ```
//!
//! Whitespace is ignored. `L(n,q)` stands for the pairing of the lens space
//! and may not appear in a quadratic expression.

use std::fmt;

use linkform::lens::LensSpace;
use linkform::{Error, Gen2, GenOdd, Pairing, QGen2, QuadraticForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the original text.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Pairing(Pairing),
    Quadratic(QuadraticForm),
}

#[derive(Debug, Clone, Copy)]
enum Atom {
    Two(Gen2),
    Odd(GenOdd),
    Quad(QGen2),
    Lens(LensSpace),
}

struct Parser {
    chars: Vec<char>,
    /// Offset of each non-whitespace character in the original text.
    offsets: Vec<usize>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        let (offsets, chars) = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).unzip();
        Parser { chars, offsets, at: 0 }
    }

    fn position(&self) -> usize {
        self.offsets.get(self.at).copied().unwrap_or_else(|| self.offsets.last().map_or(0, |&o| o + 1))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.position(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn done(&self) -> bool {
        self.at == self.chars.len()
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            self.at = start;
            return self.error("expected a number");
        }
        let digits: String = self.chars[start..self.at].iter().collect();
        digits.parse().or_else(|_| {
            self.at = start;
            self.error("number out of range")
        })
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        let start = self.at;
        let v = self.unsigned()?;
        let v = i64::try_from(v).or_else(|_| {
            self.at = start;
            self.error("number out of range")
        })?;
        Ok(if negative { -v } else { v })
    }

    fn level(&mut self) -> Result<u32, ParseError> {
        self.expect('^')?;
        let start = self.at;
        let v = self.unsigned()?;
        u32::try_from(v).or_else(|_| {
            self.at = start;
            self.error("level out of range")
        })
    }

    fn bit(&mut self) -> Result<u8, ParseError> {
        match self.unsigned()? {
            v @ (0 | 1) => Ok(v as u8),
            _ => {
                self.at -= 1;
                self.error("refinement bits must be 0 or 1")
            }
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.at..].starts_with(&w) {
            self.at += w.len();
            true
        } else {
            false
        }
    }

    fn generator(&mut self, start: usize) -> Result<Result<Atom, Error>, ParseError> {
        if self.keyword("QE0") || self.keyword("QE1") {
            let one = self.chars[self.at - 1] == '1';
            let k = self.level()?;
            self.expect('[')?;
            let alpha = self.bit()?;
            self.expect(',')?;
            let gamma = self.bit()?;
            self.expect(']')?;
            let g = if one { QGen2::e1(k, alpha, gamma) } else { QGen2::e0(k, alpha, gamma) };
            return Ok(g.map(Atom::Quad));
        }
        if self.keyword("Q") {
            let k = self.level()?;
            self.expect('(')?;
            let a = self.signed()?;
            self.expect(')')?;
            return Ok(QGen2::cyclic(k, a).map(Atom::Quad));
        }
        if self.keyword("E0") || self.keyword("E1") {
            let one = self.chars[self.at - 1] == '1';
            let k = self.level()?;
            return Ok(if one { Gen2::e1(k) } else { Gen2::e0(k) }.map(Atom::Two));
        }
        if self.keyword("A") {
            let k = self.level()?;
            self.expect('(')?;
            let a = self.signed()?;
            self.expect(')')?;
            return Ok(Gen2::cyclic(k, a).map(Atom::Two));
        }
        if self.keyword("C") {
            let p = self.unsigned()?;
            let k = self.level()?;
            self.expect('(')?;
            let a = self.signed()?;
            self.expect(')')?;
            return Ok(GenOdd::from_unit(p, k, a).map(Atom::Odd));
        }
        if self.keyword("L") {
            self.expect('(')?;
            let n = self.unsigned()?;
            self.expect(',')?;
            let q = self.signed()?;
            self.expect(')')?;
            return Ok(LensSpace::new(n, q).map(Atom::Lens));
        }
        self.at = start;
        self.error("expected a generator (A^k(a), E0^k, E1^k, Cp^k(a), Q^k(a), QE0^k[a,c], QE1^k[a,c] or L(n,q))")
    }

    fn term(&mut self) -> Result<(u64, Atom), ParseError> {
        let start = self.at;
        let count = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.unsigned()?;
            self.expect('*')?;
            n
        } else {
            1
        };
        let gen_start = self.at;
        match self.generator(gen_start)? {
            Ok(atom) => Ok((count, atom)),
            Err(e) => {
                self.at = if count == 1 { start } else { gen_start };
                self.error(format!("invalid generator: {}", strip_prefix(&e)))
            }
        }
    }
}

fn strip_prefix(e: &Error) -> String {
    match e {
        Error::InvalidGenerator(m) | Error::InvalidInput(m) => m.clone(),
        other => other.to_string(),
    }
}

/// Parses an expression; quadratic generators make it a quadratic form.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text);
    if p.done() {
        return p.error("empty expression");
    }
    if p.chars == ['0'] {
        return Ok(Expr::Pairing(Pairing::new()));
    }
    let mut terms = Vec::new();
    loop {
        let start = p.at;
        let (count, atom) = p.term()?;
        terms.push((start, count, atom));
        if p.done() {
            break;
        }
        if !(p.eat('+') || p.eat('#')) {
            return p.error(format!("expected '+' or '#', found '{}'", p.peek().expect("not done")));
        }
    }
    let plain = terms.iter().find(|(_, _, a)| matches!(a, Atom::Two(_) | Atom::Lens(_)));
    let quad = terms.iter().find(|(_, _, a)| matches!(a, Atom::Quad(_)));
    if let (Some(_), Some((pos, _, _))) = (plain, quad) {
        p.at = *pos;
        return p.error("quadratic generators cannot be mixed with plain 2-adic generators or lens spaces");
    }
    let mut two = Vec::new();
    let mut odd = Vec::new();
    let mut q2 = Vec::new();
    for &(pos, count, atom) in &terms {
        for _ in 0..count {
            match atom {
                Atom::Two(g) => two.push(g),
                Atom::Odd(g) => odd.push(g),
                Atom::Quad(g) => q2.push(g),
                Atom::Lens(l) => match l.pairing() {
                    Ok(x) => {
                        two.extend_from_slice(x.two_part());
                        odd.extend_from_slice(x.odd_part());
                    }
                    Err(e) => {
                        p.at = pos;
                        return p.error(strip_prefix(&e));
                    }
                },
            }
        }
    }
    Ok(if quad.is_some() {
        Expr::Quadratic(QuadraticForm::from_parts(q2, odd))
    } else {
        Expr::Pairing(Pairing::from_parts(two, odd))
    })
}

/// Parses a pairing expression; quadratic generators are rejected.
pub fn parse_pairing(text: &str) -> Result<Pairing, ParseError> {
    match parse_expr(text)? {
        Expr::Pairing(x) => Ok(x),
        Expr::Quadratic(_) => Err(ParseError { position: 0, message: "expected a pairing, found a quadratic form".into() }),
    }
}

/// Parses a quadratic expression; an expression with only odd generators is
/// read as its unique refinement.
pub fn parse_quadratic(text: &str) -> Result<QuadraticForm, ParseError> {
    match parse_expr(text)? {
        Expr::Quadratic(q) => Ok(q),
        Expr::Pairing(x) if x.two_part().is_empty() => Ok(QuadraticForm::from_parts(Vec::new(), x.odd_part().to_vec())),
        Expr::Pairing(_) => Err(ParseError {
            position: 0,
            message: "expected a quadratic form, but 2-adic generators carry no refinement (use Q^k, QE0^k, QE1^k)".into(),
        }),
    }
}
