//! The automorphisms `τ` and `μ` of `A_{n+1}` (`n >= 3`) that generate the
//! `Σ_3` factor of the automorphism group over `Aut(A_n)`.
//!
//! `τ(x, y) = (x, -y)` is rational. An automorphism of order three that
//! commutes with `Aut(A_n)` acts on the pair `(Im x, Im y)` as a rotation by
//! `±2π/3` and fixes `e0` and `ẽ0`, so its matrix involves `√3/2`. `μ` is
//! therefore computed over `Q(√3)`:
//!
//! * `μ(r e0 + s ẽ0) = r e0 + s ẽ0`
//! * `μ(x, 0) = (x, 0) β` with `β = -1/2 e0 + √3/2 ẽ0`, for pure `x`
//! * `μ(0, x) = (x, 0) α` with `α = -√3/2 e0 - 1/2 ẽ0`, for pure `x`
//!
//! [`mu_literal`] is the purely rational map `μ(x, y) = (x, 0) + (y, 0) α'`
//! with `α' = -1/2 e0 - 1/2 ẽ0`; it is not multiplicative and is kept only to
//! make that visible.

use std::fmt;

use crate::element::CDElement;
use crate::error::{AlgebraError, Result};
use crate::rational::{int, ratio};

/// `rational + √3 · sqrt3`, both parts in the same `A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sqrt3Element {
    rational: CDElement,
    sqrt3: CDElement,
}

impl Sqrt3Element {
    pub fn new(rational: CDElement, sqrt3: CDElement) -> Result<Self> {
        if rational.level() != sqrt3.level() {
            return Err(AlgebraError::LevelMismatch { left: rational.level(), right: sqrt3.level() });
        }
        Ok(Sqrt3Element { rational, sqrt3 })
    }

    pub fn from_rational(x: CDElement) -> Self {
        let sqrt3 = CDElement::zero(x.level());
        Sqrt3Element { rational: x, sqrt3 }
    }

    pub fn level(&self) -> u32 {
        self.rational.level()
    }

    pub fn rational_part(&self) -> &CDElement {
        &self.rational
    }

    pub fn sqrt3_part(&self) -> &CDElement {
        &self.sqrt3
    }

    /// The element itself when its `√3` part vanishes.
    pub fn as_rational(&self) -> Option<&CDElement> {
        self.sqrt3.is_zero().then_some(&self.rational)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(self.rational.add(&other.rational)?, self.sqrt3.add(&other.sqrt3)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::new(self.rational.sub(&other.rational)?, self.sqrt3.sub(&other.sqrt3)?)
    }

    pub fn neg(&self) -> Self {
        Sqrt3Element { rational: self.rational.neg(), sqrt3: self.sqrt3.neg() }
    }

    /// Multiplication by `√3`.
    fn times_sqrt3(&self) -> Self {
        Sqrt3Element { rational: self.sqrt3.scale(&int(3)), sqrt3: self.rational.clone() }
    }

    /// `(p1 + √3 q1)(p2 + √3 q2) = p1 p2 + 3 q1 q2 + √3 (p1 q2 + q1 p2)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let (p1, q1, p2, q2) = (&self.rational, &self.sqrt3, &other.rational, &other.sqrt3);
        let rational = p1.multiply(p2)?.add(&q1.multiply(q2)?.scale(&int(3)))?;
        let sqrt3 = p1.multiply(q2)?.add(&q1.multiply(p2)?)?;
        Self::new(rational, sqrt3)
    }

    pub fn tilde(&self) -> Result<Self> {
        Self::new(self.rational.tilde()?, self.sqrt3.tilde()?)
    }
}

impl From<CDElement> for Sqrt3Element {
    fn from(x: CDElement) -> Self {
        Self::from_rational(x)
    }
}

impl fmt::Display for Sqrt3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.sqrt3.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "sqrt3*({})", self.sqrt3),
            (false, false) => write!(f, "{} + sqrt3*({})", self.rational, self.sqrt3),
        }
    }
}

fn require_level(op: &'static str, level: u32) -> Result<()> {
    if level < 4 {
        return Err(AlgebraError::LevelTooLow { op, min: 4, level });
    }
    Ok(())
}

/// `τ(x, y) = (x, -y)`.
pub fn tau(x: &CDElement) -> Result<CDElement> {
    require_level("tau", x.level())?;
    let (lo, hi) = x.halves()?;
    CDElement::from_halves(&lo, &hi.neg())
}

pub fn tau_sqrt3(x: &Sqrt3Element) -> Result<Sqrt3Element> {
    Sqrt3Element::new(tau(&x.rational)?, tau(&x.sqrt3)?)
}

/// `μ` on a rational element; the image generally has a `√3` part.
pub fn mu(x: &CDElement) -> Result<Sqrt3Element> {
    let level = x.level();
    require_level("mu", level)?;
    let (lo, hi) = x.halves()?;
    let zero = CDElement::zero(level - 1);
    let p1 = CDElement::from_halves(&lo.pure_part(), &zero)?;
    let p2 = CDElement::from_halves(&hi.pure_part(), &zero)?;
    let fixed = CDElement::from_halves(&CDElement::scalar(level - 1, lo.real_part()), &CDElement::scalar(level - 1, hi.real_part()))?;
    let half = ratio(1, 2);
    let minus_half = ratio(-1, 2);
    // (p, 0) ẽ0 = (0, p), so both rules only need the tilde map.
    let rational = fixed.add(&p1.scale(&minus_half))?.add(&p2.tilde()?.scale(&minus_half))?;
    let sqrt3 = p1.tilde()?.scale(&half).add(&p2.scale(&minus_half))?;
    Sqrt3Element::new(rational, sqrt3)
}

pub fn mu_sqrt3(x: &Sqrt3Element) -> Result<Sqrt3Element> {
    mu(&x.rational)?.add(&mu(&x.sqrt3)?.times_sqrt3())
}

/// The rational map `(x, y) -> (x, 0) + (y, 0)(-1/2 e0 - 1/2 ẽ0)`.
pub fn mu_literal(x: &CDElement) -> Result<CDElement> {
    let level = x.level();
    require_level("mu_literal", level)?;
    let (lo, hi) = x.halves()?;
    let zero = CDElement::zero(level - 1);
    let alpha = CDElement::one(level).add(&CDElement::tilde_unit(level)?)?.scale(&ratio(-1, 2));
    let first = CDElement::from_halves(&lo, &zero)?;
    let second = CDElement::from_halves(&hi, &zero)?;
    first.add(&second.multiply(&alpha)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::basis;
    use crate::parse_element;

    fn b(i: usize) -> Sqrt3Element {
        basis(4, i).into()
    }

    fn signed(i: usize, k: usize) -> CDElement {
        &basis(4, i) * &basis(4, k)
    }

    #[test]
    fn tau_examples() {
        let x = parse_element(4, "e1 + e10").unwrap();
        assert_eq!(tau(&x).unwrap(), parse_element(4, "e1 - e10").unwrap());
        assert_eq!(tau(&tau(&x).unwrap()).unwrap(), x);
        assert_eq!(tau(&basis(4, 8)).unwrap(), -basis(4, 8));
        assert!(matches!(tau(&basis(3, 1)), Err(AlgebraError::LevelTooLow { .. })));
        assert!(mu(&basis(3, 1)).is_err());
    }

    #[test]
    fn mu_on_basis() {
        assert_eq!(mu(&basis(4, 0)).unwrap(), b(0));
        assert_eq!(mu(&basis(4, 8)).unwrap(), b(8));
        let m1 = mu(&basis(4, 1)).unwrap();
        assert_eq!(m1.rational_part(), &basis(4, 1).scale(&ratio(-1, 2)));
        assert_eq!(m1.sqrt3_part(), &basis(4, 9).scale(&ratio(1, 2)));
        let m9 = mu(&basis(4, 9)).unwrap();
        assert_eq!(m9.rational_part(), &basis(4, 9).scale(&ratio(-1, 2)));
        assert_eq!(m9.sqrt3_part(), &basis(4, 1).scale(&ratio(-1, 2)));
    }

    #[test]
    fn sqrt3_arithmetic() {
        let s = Sqrt3Element::new(CDElement::zero(4), basis(4, 0)).unwrap();
        assert_eq!(s.multiply(&s).unwrap(), b(0).add(&b(0)).unwrap().add(&b(0)).unwrap());
        assert_eq!(s.to_string(), "sqrt3*(1)");
        assert_eq!(b(3).to_string(), "e3");
    }

    #[test]
    fn maps_are_multiplicative_on_basis_pairs() {
        for i in 0..16 {
            for k in 0..16 {
                let p = signed(i, k);
                assert_eq!(tau(&p).unwrap(), &tau(&basis(4, i)).unwrap() * &tau(&basis(4, k)).unwrap());
                let lhs = mu(&p).unwrap();
                let rhs = mu(&basis(4, i)).unwrap().multiply(&mu(&basis(4, k)).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "mu fails on e{i} e{k}");
            }
        }
    }

    #[test]
    fn group_relations() {
        for i in 0..16 {
            let x = b(i);
            let tt = tau_sqrt3(&tau_sqrt3(&x).unwrap()).unwrap();
            assert_eq!(tt, x);
            let mmm = mu_sqrt3(&mu_sqrt3(&mu_sqrt3(&x).unwrap()).unwrap()).unwrap();
            assert_eq!(mmm, x);
            let mt = mu_sqrt3(&tau_sqrt3(&x).unwrap()).unwrap();
            let tmm = tau_sqrt3(&mu_sqrt3(&mu_sqrt3(&x).unwrap()).unwrap()).unwrap();
            assert_eq!(mt, tmm, "relation fails at e{i}");
        }
    }

    #[test]
    fn tilde_unit_is_fixed_up_to_sign() {
        assert_eq!(tau(&basis(4, 8)).unwrap(), -basis(4, 8));
        assert_eq!(mu(&basis(4, 8)).unwrap().as_rational(), Some(&basis(4, 8)));
    }

    #[test]
    fn literal_reading_is_not_multiplicative() {
        // e8 e8 = -e0, but the image of e8 is alpha' and alpha'^2 = 1/2 e8.
        let e8 = basis(4, 8);
        assert_eq!(&e8 * &e8, -basis(4, 0));
        let image = mu_literal(&e8).unwrap();
        assert_eq!(&image * &image, e8.scale(&ratio(1, 2)));
        assert_eq!(mu_literal(&-basis(4, 0)).unwrap(), -basis(4, 0));
        let failures = (0..16)
            .flat_map(|i| (0..16).map(move |k| (i, k)))
            .filter(|&(i, k)| {
                let p = signed(i, k);
                mu_literal(&p).unwrap() != &mu_literal(&basis(4, i)).unwrap() * &mu_literal(&basis(4, k)).unwrap()
            })
            .count();
        assert!(failures > 0);
    }
}
