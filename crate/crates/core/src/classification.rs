//! Alternativity, strong alternativity and their two-element versions.
//!
//! `(a, a, x)` is linear in `x`, so alternativity is decided on the basis.
//! `(a, x, x)` is quadratic in `x`; writing `x = sum c_i e_i` it vanishes for
//! every `x` exactly when `(a, e_i, e_j) + (a, e_j, e_i) = 0` for all
//! `i <= j`, which makes strong alternativity a finite check too.
//!
//! Witnesses are reported in basis order: for the alternativity scan the
//! first `e_i` with `(a, a, e_i) != 0`; for the strong scan first the
//! diagonal `e_i` with `(a, e_i, e_i) != 0`, then the first pair `i < j`
//! whose symmetrized associator is nonzero, reported as `x = e_i + e_j`
//! (the diagonal terms are already known to vanish, so `(a, x, x) != 0`).

use serde::Serialize;

use crate::element::{associator, CDElement};
use crate::error::{AlgebraError, Result};
use crate::linalg;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltStatus {
    pub alternative: bool,
    pub strongly_alternative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CDElement>,
}

/// JSON form of a classification: `{element, level, alternative, strongly_alternative, witness?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub element: CDElement,
    pub level: u32,
    pub alternative: bool,
    pub strongly_alternative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CDElement>,
}

fn basis_of(a: &CDElement) -> impl Iterator<Item = CDElement> + '_ {
    (0..a.dim()).map(|i| CDElement::e(a.level(), i).expect("index in range"))
}

/// First basis element `x` with `(a, a, x) != 0`.
pub fn alternative_witness(a: &CDElement) -> Option<CDElement> {
    let aa = a * a;
    basis_of(a).find(|x| &aa * x != a * &(a * x))
}

pub fn is_alternative(a: &CDElement) -> bool {
    alternative_witness(a).is_none()
}

/// First `x` (basis element or sum of two) with `(a, x, x) != 0`.
pub fn strong_witness(a: &CDElement) -> Option<CDElement> {
    let level = a.level();
    let dim = a.dim();
    let e = |i: usize| CDElement::e(level, i).expect("index in range");
    for i in 0..dim {
        let ei = e(i);
        if !associator(a, &ei, &ei).expect("same level").is_zero() {
            return Some(ei);
        }
    }
    for i in 0..dim {
        let ei = e(i);
        for j in i + 1..dim {
            let ej = e(j);
            let sym = &associator(a, &ei, &ej).expect("same level")
                + &associator(a, &ej, &ei).expect("same level");
            if !sym.is_zero() {
                return Some(&ei + &ej);
            }
        }
    }
    None
}

pub fn is_strongly_alternative(a: &CDElement) -> AltStatus {
    if let Some(w) = alternative_witness(a) {
        return AltStatus { alternative: false, strongly_alternative: false, witness: Some(w) };
    }
    let witness = strong_witness(a);
    AltStatus { alternative: true, strongly_alternative: witness.is_none(), witness }
}

pub fn classify(a: &CDElement) -> Classification {
    let status = is_strongly_alternative(a);
    Classification {
        element: a.clone(),
        level: a.level(),
        alternative: status.alternative,
        strongly_alternative: status.strongly_alternative,
        witness: status.witness,
    }
}

/// `(a, a, b) = 0`.
pub fn alternates_with(a: &CDElement, b: &CDElement) -> Result<bool> {
    Ok(associator(a, a, b)?.is_zero())
}

/// `(a, a, b) = 0` and `(a, b, b) = 0`.
pub fn strongly_alternates_with(a: &CDElement, b: &CDElement) -> Result<bool> {
    Ok(alternates_with(a, b)? && associator(a, b, b)?.is_zero())
}

/// `||ab||^2 = ||a||^2 ||b||^2`, compared exactly in squared form.
pub fn normed_with(a: &CDElement, b: &CDElement) -> Result<bool> {
    Ok(a.multiply(b)?.norm_sq() == a.norm_sq() * b.norm_sq())
}

/// Every ordered pair `(x, y)` from `set`, including `x = y`, is normed.
pub fn is_normed_set(set: &[CDElement]) -> Result<bool> {
    for x in set {
        for y in set {
            if !normed_with(x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The level-`(n+1)` element `(r a, s a)` for a pure alternative `a`.
pub fn lift_alternative(a: &CDElement, r: &Rational, s: &Rational) -> Result<CDElement> {
    if !a.is_pure() {
        return Err(AlgebraError::NotPure { op: "lift_alternative", arg: "a" });
    }
    if !is_alternative(a) {
        return Err(AlgebraError::NotAlternative { op: "lift_alternative", arg: "a" });
    }
    CDElement::from_halves(&a.scale(r), &a.scale(s))
}

/// Exact rank test on the pure parts (zero vectors count as dependent).
pub fn pure_parts_dependent(a: &CDElement, b: &CDElement) -> Result<bool> {
    if a.level() != b.level() {
        return Err(AlgebraError::LevelMismatch { left: a.level(), right: b.level() });
    }
    Ok(linalg::dependent_pair(a.pure_part().coeffs(), b.pure_part().coeffs()))
}

/// First basis `x` with `(a, x, b) != 0`. Since the associator is linear in
/// its middle slot, `None` means `(a, x, b) = 0` for every `x`.
pub fn yui_witness(a: &CDElement, b: &CDElement) -> Result<Option<CDElement>> {
    if a.level() != b.level() {
        return Err(AlgebraError::LevelMismatch { left: a.level(), right: b.level() });
    }
    if a.level() < 4 {
        return Err(AlgebraError::LevelTooLow { op: "yui_witness", min: 4, level: a.level() });
    }
    for x in basis_of(a) {
        if !associator(a, &x, b)?.is_zero() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::basis;
    use crate::parse_element;
    use crate::rational::{int, ratio};

    fn p4(s: &str) -> CDElement {
        parse_element(4, s).unwrap()
    }

    #[test]
    fn alternative_examples() {
        assert!(is_alternative(&basis(4, 1)));
        let a = p4("e1 + e10");
        let w = alternative_witness(&a).expect("not alternative");
        assert!(!associator(&a, &a, &w).unwrap().is_zero());
        assert!(!associator(&a, &a, &basis(4, 15)).unwrap().is_zero());
        for s in ["e1 + 2*e5 - 3/4*e7", "1 + e3 + e6", "2/3*e4 - e2"] {
            assert!(is_alternative(&parse_element(3, s).unwrap()));
        }
    }

    #[test]
    fn strong_examples() {
        let st = is_strongly_alternative(&basis(4, 1));
        assert!(st.alternative && !st.strongly_alternative);
        let w = st.witness.unwrap();
        assert!(!associator(&basis(4, 1), &w, &w).unwrap().is_zero());
        let x = p4("e4 + e15");
        assert!(!associator(&basis(4, 1), &x, &x).unwrap().is_zero());

        let st = is_strongly_alternative(&basis(4, 8));
        assert!(st.strongly_alternative && st.witness.is_none());
        for (r, s) in [(int(3), ratio(-2, 5)), (int(0), int(7)), (ratio(1, 2), int(0))] {
            let x = &basis(4, 0).scale(&r) + &basis(4, 8).scale(&s);
            assert!(is_strongly_alternative(&x).strongly_alternative);
        }
    }

    #[test]
    fn status_invariants() {
        for s in ["e1 + e10", "e2", "e8 + e3", "5"] {
            let st = is_strongly_alternative(&p4(s));
            assert!(!st.strongly_alternative || st.alternative);
            assert_eq!(st.witness.is_some(), !st.strongly_alternative);
        }
    }

    #[test]
    fn pairwise_examples() {
        let a = p4("e1 + e10");
        let b = basis(4, 15);
        assert!(!alternates_with(&a, &b).unwrap());
        assert!(!strongly_alternates_with(&basis(4, 1), &p4("e4 + e15")).unwrap());
        assert!(normed_with(&a, &b).unwrap());
        assert!(normed_with(&basis(4, 0), &p4("3*e2 - e9")).unwrap());
        let hb = [basis(4, 1).tilde().unwrap(), basis(4, 8), basis(4, 0), basis(4, 1)];
        for b in &hb {
            assert!(strongly_alternates_with(&basis(4, 1), b).unwrap());
        }
        assert!(alternates_with(&basis(3, 1), &basis(4, 1)).is_err());
    }

    #[test]
    fn normed_sets() {
        assert!(is_normed_set(&[]).unwrap());
        assert!(is_normed_set(&[basis(4, 0)]).unwrap());
        let a = p4("e1 + e10");
        let b = basis(4, 15);
        let ab = &a * &b;
        assert!(!is_normed_set(&[a.clone(), b.clone(), ab.clone()]).unwrap());
        // {a, b} alone is normed, so the failure comes from pairs with ab.
        assert!(is_normed_set(&[a.clone(), b.clone()]).unwrap());
        assert!(!is_normed_set(&[a, ab]).unwrap());
    }

    #[test]
    fn lifts() {
        let e1 = basis(3, 1);
        let x = lift_alternative(&e1, &int(1), &int(1)).unwrap();
        assert_eq!(x, p4("e1 + e9"));
        assert!(is_alternative(&x));
        assert_eq!(lift_alternative(&e1, &int(1), &int(0)).unwrap(), basis(4, 1));
        assert!(!is_alternative(&p4("e1 + e10")));
        assert!(lift_alternative(&basis(3, 0), &int(1), &int(1)).is_err());
        let not_alt = p4("e1 + e10");
        assert!(matches!(
            lift_alternative(&not_alt, &int(1), &int(1)),
            Err(AlgebraError::NotAlternative { .. })
        ));
    }

    #[test]
    fn yui_examples() {
        let a = basis(4, 1);
        assert_eq!(yui_witness(&a, &p4("3*e1 + 5")).unwrap(), None);
        let w = yui_witness(&a, &basis(4, 2)).unwrap().unwrap();
        assert!(!associator(&a, &w, &basis(4, 2)).unwrap().is_zero());
        let (a, b) = (p4("e1 + e10"), p4("e2 - e7"));
        assert!(!pure_parts_dependent(&a, &b).unwrap());
        assert!(yui_witness(&a, &b).unwrap().is_some());
        assert!(matches!(
            yui_witness(&basis(3, 1), &basis(3, 2)),
            Err(AlgebraError::LevelTooLow { .. })
        ));
    }
}
