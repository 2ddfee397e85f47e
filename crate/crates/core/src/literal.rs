//! Text form of elements.
//!
//! ```text
//! element := [sign] term (sign term)*
//! term    := coeff ['*'] 'e' index | 'e' index | coeff
//! coeff   := int | int '/' int
//! ```
//!
//! Whitespace is ignored. The canonical rendering lists terms by increasing
//! index, writes the `e0` term as a bare coefficient, omits unit
//! coefficients, and prints the zero element as `0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::element::CDElement;
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

pub fn parse_element(level: u32, text: &str) -> Result<CDElement> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0, src_len: text.len() };
    let mut terms = Vec::new();
    if p.at_end() {
        return Err(p.error("empty element literal"));
    }
    let mut first = true;
    while !p.at_end() {
        let negative = match p.peek() {
            Some('+') => {
                p.bump();
                false
            }
            Some('-') => {
                p.bump();
                true
            }
            _ if first => false,
            _ => return Err(p.error("expected '+' or '-'")),
        };
        first = false;
        let (coeff, index) = p.term()?;
        terms.push((index, if negative { -coeff } else { coeff }));
    }
    CDElement::from_terms(level, &terms)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    src_len: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src_len, |&(o, _)| o)
    }

    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.offset(), msg: msg.to_string() }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn coeff(&mut self) -> Result<Option<Rational>> {
        let Some(p) = self.digits() else { return Ok(None) };
        let p: BigInt = p.parse().expect("digit string");
        if self.peek() != Some('/') {
            return Ok(Some(Rational::from_integer(p)));
        }
        self.bump();
        let q = self.digits().ok_or_else(|| self.error("expected denominator"))?;
        let q: BigInt = q.parse().expect("digit string");
        if q.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(Some(Rational::new(p, q)))
    }

    fn basis(&mut self) -> Result<usize> {
        if self.peek() != Some('e') {
            return Err(self.error("expected basis element `e<index>`"));
        }
        self.bump();
        let idx = self.digits().ok_or_else(|| self.error("expected basis index"))?;
        idx.parse().map_err(|_| self.error("basis index too large"))
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        match self.coeff()? {
            None => Ok((Rational::one(), self.basis()?)),
            Some(c) => match self.peek() {
                Some('*') => {
                    self.bump();
                    Ok((c, self.basis()?))
                }
                Some('e') => Ok((c, self.basis()?)),
                _ => Ok((c, 0)),
            },
        }
    }
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{magnitude}*e{i}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::basis;
    use crate::rational::{int, ratio};

    #[test]
    fn parses_the_reference_literal() {
        let x = parse_element(4, "e1 + 2*e10 - 1/2*e15").unwrap();
        let expected = CDElement::from_terms(4, &[(1, int(1)), (10, int(2)), (15, ratio(-1, 2))]).unwrap();
        assert_eq!(x, expected);
        assert_eq!(x.to_string(), "e1 + 2*e10 - 1/2*e15");
    }

    #[test]
    fn whitespace_and_implicit_star() {
        let x = parse_element(4, " -e14+  e5 ").unwrap();
        assert_eq!(x, &basis(4, 5) - &basis(4, 14));
        assert_eq!(x.to_string(), "e5 - e14");
        assert_eq!(parse_element(3, "3e2 - 3 + 2/4").unwrap().to_string(), "-5/2 + 3*e2");
        assert_eq!(parse_element(3, "e1 - e1").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_element(3, "e8"), Err(AlgebraError::IndexOutOfRange { .. })));
        assert!(parse_element(3, "").is_err());
        assert!(parse_element(3, "e1 e2").is_err());
        assert!(parse_element(3, "1/0*e1").is_err());
        assert!(parse_element(3, "2*").is_err());
        assert!(parse_element(3, "x1").is_err());
    }
}
