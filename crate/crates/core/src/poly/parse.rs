use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{Coefficient, Monomial, PolyRing, Polynomial};

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos]).unwrap())
    }

    fn identifier(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.text.get(self.pos), Some(c) if c.is_ascii_alphabetic()) {
            return self.err("expected a variable");
        }
        while self.pos < self.text.len() && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok((start, std::str::from_utf8(&self.text[start..self.pos]).unwrap()))
    }

    fn coefficient(&mut self) -> Result<Coefficient, ParseError> {
        let at = self.pos;
        let num: BigInt = self.digits()?.parse().unwrap();
        let den: BigInt = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.digits()?.parse().unwrap()
        } else {
            BigInt::one()
        };
        self.ring
            .field()
            .from_ratio(&num, &den)
            .map_err(|_| ParseError { position: at, message: "zero denominator".into() })
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let (at, name) = self.identifier()?;
        let Some(i) = self.ring.vars().index_of(name) else {
            return Err(ParseError { position: at, message: format!("unknown variable '{name}'") });
        };
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let digits = self.digits()?;
            e = digits
                .parse()
                .map_err(|_| ParseError { position: at, message: "exponent overflow".into() })?;
        }
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or_else(|| ParseError { position: at, message: "exponent overflow".into() })?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Coefficient), ParseError> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coefficient()?;
                if self.peek() != Some(b'*') {
                    return Ok((Monomial::new(exps), c));
                }
                self.pos += 1;
                c
            }
            Some(c) if c.is_ascii_alphabetic() => self.ring.field().one(),
            Some(_) => return self.err("expected a term"),
            None => return self.err("unexpected end of input"),
        };
        loop {
            self.factor(&mut exps)?;
            if self.peek() != Some(b'*') {
                break;
            }
            self.pos += 1;
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            Some(b'-') => {
                negative = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -&c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms).expect("parsed terms fit the ring"))
    }
}

/// Parses `text` under the grammar
/// `poly := ['+'|'-'] term (('+'|'-') term)*`,
/// `term := coeff ('*' var ('^' nat)?)* | var ('^' nat)? ('*' var ('^' nat)?)*`.
///
/// Coefficients are `3` or `-1/2` style rationals; over a prime field the
/// denominator is inverted.
pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser { text: text.as_bytes(), pos: 0, ring };
    p.polynomial()
}

/// Parses a monomial such as `x1^2*x3` or `1`.
pub fn parse_monomial(ring: &Arc<PolyRing>, text: &str) -> Result<Monomial, ParseError> {
    let mut p = Parser { text: text.as_bytes(), pos: 0, ring };
    let mut exps = vec![0u32; ring.nvars()];
    if p.peek() == Some(b'1') {
        p.pos += 1;
    } else {
        loop {
            p.factor(&mut exps)?;
            if p.peek() != Some(b'*') {
                break;
            }
            p.pos += 1;
        }
    }
    if p.peek().is_some() {
        return p.err("trailing input after monomial");
    }
    Ok(Monomial::new(exps))
}
