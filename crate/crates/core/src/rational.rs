//! Scalar helpers over [`BigRational`].
//!
//! Coefficients are always kept in canonical form (positive denominator,
//! coprime numerator), which `num_rational::Ratio` maintains for us. This
//! module adds the `"p/q"` text encoding used by the JSON and CSV outputs
//! and an exact square root for perfect squares.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Always `"p/q"`, including integers (`"3/1"`, `"0/1"`).
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`; surrounding whitespace is ignored.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |msg: &str| AlgebraError::Parse { pos: 0, msg: format!("{msg}: `{s}`") };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad("bad numerator"))?;
    let q: BigInt = q.parse().map_err(|_| bad("bad denominator"))?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// Exact square root when `r` is the square of a rational.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_encoding() {
        assert_eq!(to_pq(&int(3)), "3/1");
        assert_eq!(to_pq(&ratio(-2, 4)), "-1/2");
        assert_eq!(to_pq(&zero()), "0/1");
        assert_eq!(parse("6/-4").unwrap(), ratio(-3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_exact(&ratio(9, 25)), Some(ratio(3, 5)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
        assert_eq!(sqrt_exact(&zero()), Some(zero()));
    }
}
