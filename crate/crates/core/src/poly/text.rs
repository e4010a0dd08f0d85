//! Canonical text form.
//!
//! Laurent polynomials print as terms `c*q^e` in ascending exponent order,
//! joined by ` + ` (or ` - ` with the magnitude when `c < 0`); the first
//! term carries its own sign and the zero polynomial prints as `0`:
//!
//! ```text
//! -1*q^-2 + 3/2*q^0 - 1*q^3
//! ```
//!
//! Polynomials in `x` print as `(c_j)*x^j` terms in ascending `j`, joined by
//! ` + `, where `c_j` is the canonical form of the coefficient:
//!
//! ```text
//! (1*q^0)*x^0 + (-1*q^1 - 1*q^2)*x^1
//! ```
//!
//! The parser accepts a superset: a sum of signed products of factors, where
//! a factor is an integer or fraction, `q`, `q^e`, `x`, `x^j` (`j >= 0`), or a
//! parenthesised expression. A rational expression is a numerator, then a
//! line holding only `/`, then a denominator.

use std::fmt;
use std::str::FromStr;

use super::{BiPoly, Coeff, LaurentPoly, RatExpr};
use crate::error::{Error, Result};

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i == 0 {
                write!(f, "{c}*q^{e}")?;
            } else if c.is_negative() {
                write!(f, " - {}*q^{e}", c.abs())?;
            } else {
                write!(f, " + {c}*q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (j, c)) in self.coeffs().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*x^{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bipoly(s)?
            .as_laurent()
            .ok_or_else(|| Error::Parse { offset: 0, message: "expected a polynomial in q only, found x".into() })
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bipoly(s)
    }
}

pub fn parse_bipoly(s: &str) -> Result<BiPoly> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses `num` or `num \n / \n den`.
pub fn parse_ratexpr(s: &str) -> Result<RatExpr<BiPoly>> {
    let lines: Vec<&str> = s.lines().collect();
    match lines.iter().position(|l| l.trim() == "/") {
        None => Ok(RatExpr::from_poly(parse_bipoly(s)?)),
        Some(i) => {
            let num = parse_bipoly(&lines[..i].join("\n"))?;
            let den: LaurentPoly = lines[i + 1..].join("\n").parse()?;
            RatExpr::new(num, den)
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.to_string() }
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<BiPoly> {
        let mut acc = BiPoly::zero();
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.product()?;
            if negate {
                acc -= &t;
            } else {
                acc += &t;
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<BiPoly> {
        let mut acc = self.signed_factor()?;
        while self.eat(b'*') {
            let f = self.signed_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn signed_factor(&mut self) -> Result<BiPoly> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        self.eat(b'+');
        self.factor()
    }

    fn factor(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(LaurentPoly::q_pow(e).into())
            }
            Some(b'x') => {
                self.pos += 1;
                let e = self.exponent()?;
                let j = u32::try_from(e).map_err(|_| self.error("x-exponent must be a non-negative integer"))?;
                Ok(BiPoly::x_pow(j))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    if !self.digits() {
                        return Err(self.error("expected denominator digits"));
                    }
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let c: Coeff = text.parse().map_err(|m: String| Error::Parse { offset: start, message: m })?;
                Ok(LaurentPoly::constant(c).into())
            }
            _ => Err(self.error("expected a number, q, x, or `(`")),
        }
    }

    fn digits(&mut self) -> bool {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.pos > start
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        self.skip_ws();
        let start = self.pos;
        if !self.digits() {
            return Err(self.error("expected exponent digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 =
            text.parse().map_err(|_| Error::Parse { offset: start, message: "exponent out of range".into() })?;
        Ok(if neg { -v } else { v })
    }
}
