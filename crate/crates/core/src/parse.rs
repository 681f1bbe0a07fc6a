//! Text parser for polynomial input.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' natural)?
//! atom   := number | number '/' number | variable | '(' expr ')'
//! ```
//!
//! Variables are `x0 .. x(n-1)`. A rational literal like `3/4` must be written
//! without spaces; any other `/` is rejected.

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::polynomial::{Polynomial, Ring};

/// Parses `text` into a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: Ring) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { offset: self.pos, message: message.into() }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => self.syntax("unexpected end of input"),
            Some(b'/') => ParseError::Division { offset: self.pos },
            Some(c) => self.syntax(format!("unexpected character `{}`", c as char)),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => return Err(ParseError::Division { offset: self.pos }),
                Some(b'(' | b'x' | b'0'..=b'9') | Some(b'a'..=b'z' | b'A'..=b'Z') => {
                    return Err(self.syntax("missing `*` between factors"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.skip_ws();
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.skip_ws();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.syntax("exponent must be a non-negative integer"));
            }
            let k: u32 = digits
                .parse()
                .map_err(|_| ParseError::Syntax { offset: start, message: "exponent too large".into() })?;
            if k > 1000 {
                return Err(ParseError::Syntax { offset: start, message: "exponent too large".into() });
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let num: BigInt = self.digits().parse().expect("digit string");
                if self.peek() == Some(b'/') && matches!(self.src.get(self.pos + 1), Some(b'0'..=b'9')) {
                    self.pos += 1;
                    let den: BigInt = self.digits().parse().expect("digit string");
                    let c = self
                        .ring
                        .field()
                        .from_ratio(&num, &den)
                        .map_err(|_| ParseError::ZeroDenominator { offset: start })?;
                    return Ok(self.ring.constant(c));
                }
                Ok(self.ring.constant(self.ring.field().from_bigint(&num)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match name.strip_prefix('x').and_then(|s| {
                    if s.is_empty() || (s.len() > 1 && s.starts_with('0')) {
                        None
                    } else {
                        s.parse::<usize>().ok()
                    }
                }) {
                    Some(i) if i < self.ring.nvars() => Ok(self.ring.var(i)),
                    _ => Err(ParseError::UnknownVariable { offset: start, name }),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}
