//! Recursive-descent parser for polynomial text such as
//! `1/18*(S1^4 - 4*S1*S3 + 3*S2^2)*(S1^3 - 3*S1*S2 + 2*S3)`.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'S' integer | '(' expr ')'
//! ```
//! Whitespace is ignored between tokens. The input is untrusted, so exponents,
//! nesting depth and intermediate term counts are bounded.

use num_bigint::BigInt;
use num_traits::Zero;

use super::SPoly;
use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

pub const MAX_EXPONENT: u32 = 64;
pub const MAX_TERMS: usize = 100_000;
const MAX_DEPTH: usize = 128;
const MAX_DIGITS: usize = 200;

/// Parses a polynomial in `S1..S{symbols}`.
pub fn parse_spoly(input: &str, symbols: usize) -> Result<SPoly> {
    if symbols == 0 || symbols > 64 {
        return Err(Error::Invalid(format!(
            "symbol count {symbols} out of range 1..=64"
        )));
    }
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        symbols,
        depth: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    symbols: usize,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn guard(&self, p: &SPoly) -> Result<()> {
        if p.len() > MAX_TERMS {
            return Err(self.err("expression expands to too many terms"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<SPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
            self.guard(&acc)?;
        }
    }

    fn term(&mut self) -> Result<SPoly> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let rhs = self.unary()?;
            if acc.len().saturating_mul(rhs.len()) > MAX_TERMS * 16 {
                return Err(self.err("expression expands to too many terms"));
            }
            acc = acc.mul(&rhs);
            self.guard(&acc)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SPoly> {
        self.enter()?;
        let out = if self.eat(b'-') {
            self.unary().map(|p| p.neg())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        };
        self.depth -= 1;
        out
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        Ok(())
    }

    fn power(&mut self) -> Result<SPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let e = self.integer()?;
        let e: u32 = match u32::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return Err(self.err("exponent out of range")),
        };
        let mut acc = base.one_like();
        for _ in 0..e {
            if acc.len().saturating_mul(base.len()) > MAX_TERMS * 16 {
                return Err(self.err("expression expands to too many terms"));
            }
            acc = acc.mul(&base);
            self.guard(&acc)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<SPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'S') => {
                self.pos += 1;
                let j = self.integer()?;
                match usize::try_from(&j) {
                    Ok(j) if j >= 1 && j <= self.symbols => SPoly::symbol(self.symbols, j),
                    _ => Err(self.err("symbol index out of range")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                Ok(SPoly::constant(self.symbols, Rational::new(num, den)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        if self.pos - start > MAX_DIGITS {
            return Err(self.err("integer literal too long"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| self.err("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    #[test]
    fn parses_products_and_powers() {
        let a = parse_spoly("(S1^2 - S2)^2", 2).unwrap();
        let b = parse_spoly("S1^4 - 2*S1^2*S2 + S2^2", 2).unwrap();
        assert_eq!(a, b);
        let c = parse_spoly("-1/4*S1^4 + 1/4 * S2^2", 2).unwrap();
        assert_eq!(c, parse_spoly("1/4*(-S1^4+S2^2)", 2).unwrap());
        assert_eq!(
            parse_spoly("--3", 1).unwrap(),
            SPoly::constant(1, ratio(3, 1))
        );
    }

    #[test]
    fn display_round_trips() {
        let a = parse_spoly("1/18*(S1^4 - 4*S1*S3 + 3*S2^2)*(S1^3 - 3*S1*S2 + 2*S3)", 3).unwrap();
        assert_eq!(parse_spoly(&a.to_string(), 3).unwrap(), a);
    }

    #[test]
    fn rejects_bad_input() {
        for s in [
            "", "S0", "S5", "S1^", "(S1", "S1 S2", "1/0", "S1^65", "S", "3/", "x", "S1)",
        ] {
            assert!(parse_spoly(s, 4).is_err(), "{s:?}");
        }
        let deep = "(".repeat(500) + "S1" + &")".repeat(500);
        assert!(parse_spoly(&deep, 1).is_err());
        assert!(parse_spoly("(S1+S2+S3+S4+1)^64", 4).is_err());
    }

    #[test]
    fn error_positions() {
        match parse_spoly("S1 + S9", 4) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
    }
}
