//! Expressions over element literals.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*            left-associative
//! unary  := "-" unary | atom
//! atom   := number | "e" index | "(" expr ")"
//!         | "conj(" expr ")" | "tilde(" expr ")"
//!         | "assoc(" expr "," expr "," expr ")"
//! number := digits ("/" digits)?
//! ```
//!
//! `a*b*c` means `(a*b)*c`; since the algebras are not associative, write
//! the parentheses when the other grouping is meant.

use cdalg::{associator, AlgebraError, CDElement, Rational, Result};
use num_bigint::BigInt;

pub fn evaluate(level: u32, text: &str) -> Result<CDElement> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, level };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    level: u32,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<CDElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CDElement> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.multiply(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<CDElement> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        self.atom()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn atom(&mut self) -> Result<CDElement> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.digits().ok_or_else(|| self.error("bad number"))?;
                let mut q = BigInt::from(1);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    q = self.digits().ok_or_else(|| self.error("bad denominator"))?;
                    if q == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                }
                Ok(CDElement::scalar(self.level, Rational::new(p, q)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().to_string();
                match name.as_str() {
                    "e" => {
                        let i = self.digits().ok_or_else(|| self.error("expected basis index after `e`"))?;
                        let i: usize = i.try_into().map_err(|_| self.error("basis index too large"))?;
                        CDElement::e(self.level, i).map_err(|e| AlgebraError::Parse { pos: start, msg: e.to_string() })
                    }
                    "conj" | "tilde" => {
                        self.expect(b'(')?;
                        let v = self.expr()?;
                        self.expect(b')')?;
                        if name == "conj" {
                            Ok(v.conjugate())
                        } else {
                            v.tilde()
                        }
                    }
                    "assoc" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b',')?;
                        let b = self.expr()?;
                        self.expect(b',')?;
                        let c = self.expr()?;
                        self.expect(b')')?;
                        associator(&a, &b, &c)
                    }
                    _ => Err(AlgebraError::Parse { pos: start, msg: format!("unknown name `{name}`") }),
                }
            }
            _ => Err(self.error("expected a number, basis element, function or `(`")),
        }
    }
}
