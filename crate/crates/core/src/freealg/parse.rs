//! Parser for the text rendering of free-algebra elements.
//!
//! Grammar (whitespace insignificant, juxtaposition multiplies):
//!
//! ```text
//! expr  := [+|-] term {(+|-) term}
//! term  := power {[*] power}
//! power := atom [^ int]
//! atom  := integer | t | generator | ( expr )
//! ```
//!
//! Generators are written `x_12`, `x_{12}` or `x12`, or by a custom name.
//! `t` is the Laurent variable; over Z/2 it evaluates to 1.

use num_bigint::BigInt;

use super::coeff::Laurent;
use super::poly::{LaurentPoly, Poly};
use super::word::{Gen, Names};
use crate::error::{Error, Result};

pub fn parse_poly(text: &str, names: &Names) -> Result<LaurentPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parse with the default `x_i` naming.
pub fn parse_indexed(text: &str) -> Result<LaurentPoly> {
    parse_poly(text, &Names::Indexed)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a Names,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_middle_dot(&mut self) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with("·".as_bytes())
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc += if negate { -&t } else { t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        match self.peek() {
            Some(c) => c == b'(' || c.is_ascii_alphanumeric(),
            None => false,
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if self.peek_middle_dot() {
                self.pos += "·".len();
            } else if !self.starts_atom() {
                return Ok(acc);
            }
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let (base, is_t) = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.digits()?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.err("expected `}`"));
            }
            self.pos += 1;
        }
        let n: i64 = n.parse().map_err(|_| self.err("exponent too large"))?;
        if is_t {
            return Ok(LaurentPoly::constant(Laurent::t_power(if neg { -n } else { n })));
        }
        if neg {
            return Err(self.err("negative powers are only allowed on t"));
        }
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * &base;
        }
        Ok(out)
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    /// Returns the atom and whether it is the bare variable `t`.
    fn atom(&mut self) -> Result<(LaurentPoly, bool)> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok((e, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok((Poly::constant(Laurent::integer(n)), false))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                let mut sub = None;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    if self.src.get(self.pos) == Some(&b'{') {
                        self.pos += 1;
                        sub = Some(self.digits()?);
                        if self.peek() != Some(b'}') {
                            return Err(self.err("expected `}`"));
                        }
                        self.pos += 1;
                    } else {
                        sub = Some(self.digits()?);
                    }
                } else if c == b'x' && self.src.get(self.pos).is_some_and(|d| d.is_ascii_digit()) {
                    sub = Some(self.digits()?);
                }
                let ident = String::from_utf8_lossy(&self.src[start..start + 1]).into_owned();
                let full = match &sub {
                    Some(s) => format!("{ident}_{s}"),
                    None => ident.clone(),
                };
                if let Some(g) = self.names.lookup(&full) {
                    return Ok((Poly::gen(g), false));
                }
                match (ident.as_str(), sub) {
                    ("t", None) => Ok((Poly::constant(Laurent::t_power(1)), true)),
                    ("x", Some(s)) => {
                        let n: usize = s.parse().map_err(|_| self.err("bad generator index"))?;
                        if n == 0 || n > u16::MAX as usize {
                            return Err(self.err("generator index out of range"));
                        }
                        Ok((Poly::gen(Gen::new(n)), false))
                    }
                    _ => {
                        self.pos = start;
                        Err(self.err(&format!("unknown symbol `{full}`")))
                    }
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
