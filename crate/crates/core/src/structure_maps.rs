//! Subalgebras spanned by structured element lists.
//!
//! * `H_a = span{e0, ã, a, ẽ0}` for a doubly pure `a`: a quaternion algebra
//!   with `ã <-> e1`, `a <-> e2`, `ẽ0 <-> e3`.
//! * For doubly pure unit `a`, `b` with `b ⊥ H_a` and `a` strongly
//!   alternating with `b`: `span{e0, a, b, ab}` is a quaternion algebra and
//!   `span{e0, a, b, ab, ãb, -b̃, ã, ẽ0}` an octonion algebra, both under
//!   the identification of the list order with `e0, e1, ...`.
//!
//! Closure is decided by exact span membership of every pairwise product.

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::classification::strongly_alternates_with;
use crate::element::{dim_of, CDElement};
use crate::error::{AlgebraError, Result};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::table::{self, SignedBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraBasis {
    pub level: u32,
    pub elements: Vec<CDElement>,
    /// `table[i][j]`: coefficients of `elements[i] * elements[j]` over
    /// `elements`, or `None` when the product leaves the span.
    pub table: Vec<Vec<Option<Vec<Rational>>>>,
    pub closed: bool,
}

impl Serialize for SubalgebraBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let table: Vec<Vec<Option<Vec<String>>>> = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.as_ref().map(|v| v.iter().map(rational::to_pq).collect()))
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("SubalgebraBasis", 4)?;
        s.serialize_field("level", &self.level)?;
        s.serialize_field("elements", &self.elements)?;
        s.serialize_field("table", &table)?;
        s.serialize_field("closed", &self.closed)?;
        s.end()
    }
}

impl SubalgebraBasis {
    /// Compute the structure-constant table of `elements` (all at one level).
    pub fn new(elements: Vec<CDElement>) -> Result<Self> {
        let level = elements.first().map_or(0, CDElement::level);
        for e in &elements {
            if e.level() != level {
                return Err(AlgebraError::LevelMismatch { left: level, right: e.level() });
            }
        }
        let columns: Vec<&[Rational]> = elements.iter().map(CDElement::coeffs).collect();
        let table: Vec<Vec<Option<Vec<Rational>>>> = elements
            .iter()
            .map(|x| {
                elements
                    .iter()
                    .map(|y| linalg::solve_combination(&columns, (x * y).coeffs()))
                    .collect()
            })
            .collect();
        let closed = table.iter().flatten().all(Option::is_some);
        Ok(SubalgebraBasis { level, elements, table, closed })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The table equals that of `A_level` under `elements[k] <-> e_k`.
    pub fn matches_level(&self, level: u32) -> bool {
        let k = dim_of(level);
        self.closed
            && self.len() == k
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let expected = table::basis_product(level, i, j);
                    self.table[i][j].as_ref() == Some(&signed_unit(k, expected))
                })
            })
    }

    /// Search for a signed reordering of `elements` under which the table
    /// becomes that of `A_level`. Returns, for each `e_k`, the signed index
    /// of the list element it corresponds to.
    pub fn find_signed_identification(&self, level: u32) -> Option<Vec<SignedBasis>> {
        let k = dim_of(level);
        if !self.closed || self.len() != k {
            return None;
        }
        let mut assignment: Vec<SignedBasis> = Vec::with_capacity(k);
        let mut used = vec![false; k];
        self.extend_identification(level, &mut assignment, &mut used).then_some(assignment)
    }

    fn extend_identification(&self, level: u32, assignment: &mut Vec<SignedBasis>, used: &mut [bool]) -> bool {
        let k = dim_of(level);
        let next = assignment.len();
        if next == k {
            return true;
        }
        for idx in 0..k {
            if used[idx] {
                continue;
            }
            for negative in [false, true] {
                assignment.push(SignedBasis { negative, index: idx });
                used[idx] = true;
                if self.consistent(level, assignment) && self.extend_identification(level, assignment, used) {
                    return true;
                }
                used[idx] = false;
                assignment.pop();
            }
        }
        false
    }

    /// Check every product among assigned images whose result is also assigned.
    fn consistent(&self, level: u32, assignment: &[SignedBasis]) -> bool {
        let k = dim_of(level);
        let last = assignment.len() - 1;
        for i in 0..=last {
            for (p, q) in [(i, last), (last, i)] {
                let r = p ^ q;
                if r > last {
                    continue;
                }
                let (sp, sq, sr) = (assignment[p], assignment[q], assignment[r]);
                let Some(cell) = &self.table[sp.index][sq.index] else { return false };
                let expected = table::basis_product(level, p, q);
                let negative = sp.negative ^ sq.negative ^ expected.negative ^ sr.negative;
                if *cell != signed_unit(k, SignedBasis { negative, index: sr.index }) {
                    return false;
                }
            }
        }
        true
    }

    pub fn projection_split(&self, x: &CDElement) -> Result<(CDElement, CDElement)> {
        projection_split(x, &self.elements)
    }
}

fn signed_unit(k: usize, s: SignedBasis) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); k];
    v[s.index] = if s.negative { -Rational::one() } else { Rational::one() };
    v
}

/// Orthogonal projection of `x` onto `span(basis)` and its complement.
/// `basis` must consist of nonzero, pairwise orthogonal elements.
pub fn projection_split(x: &CDElement, basis: &[CDElement]) -> Result<(CDElement, CDElement)> {
    for (i, b) in basis.iter().enumerate() {
        if b.is_zero() {
            return Err(AlgebraError::ZeroBasisElement(i));
        }
        for (j, c) in basis.iter().enumerate().skip(i + 1) {
            if !b.dot(c)?.is_zero() {
                return Err(AlgebraError::NonOrthogonalBasis(i, j));
            }
        }
    }
    let mut inside = CDElement::zero(x.level());
    for b in basis {
        let t = x.dot(b)? / b.norm_sq();
        inside = inside.add(&b.scale(&t))?;
    }
    let outside = x.sub(&inside)?;
    Ok((inside, outside))
}

/// `[e0, ã, a, ẽ0]` for a doubly pure `a`.
pub fn h_a_elements(a: &CDElement) -> Result<Vec<CDElement>> {
    let level = a.level();
    Ok(vec![CDElement::one(level), a.tilde()?, a.clone(), CDElement::tilde_unit(level)?])
}

/// Rescale `a` to unit norm when its norm is rational; otherwise reject.
fn unit(op: &'static str, arg: &'static str, a: &CDElement, rescale: bool) -> Result<CDElement> {
    let n = a.norm_sq();
    if n.is_one() {
        return Ok(a.clone());
    }
    if !rescale {
        return Err(AlgebraError::NotUnitNorm { op, arg, norm_sq: n.to_string() });
    }
    match rational::sqrt_exact(&n) {
        Some(r) => Ok(a.scale(&r.recip())),
        None => Err(AlgebraError::IrrationalNorm { op, arg, norm_sq: n.to_string() }),
    }
}

/// `H_a` with its multiplication table.
pub fn h_a_basis(a: &CDElement, rescale: bool) -> Result<SubalgebraBasis> {
    const OP: &str = "h_a_basis";
    if a.level() < 3 {
        return Err(AlgebraError::LevelTooLow { op: OP, min: 3, level: a.level() });
    }
    if a.is_zero() {
        return Err(AlgebraError::Zero { op: OP, arg: "a" });
    }
    if !a.is_doubly_pure() {
        return Err(AlgebraError::NotDoublyPure { op: OP, arg: "a" });
    }
    let a = unit(OP, "a", a, rescale)?;
    SubalgebraBasis::new(h_a_elements(&a)?)
}

/// Verify the hypotheses shared by [`quaternion_span`] and [`octonion_span`].
pub fn check_span_hypotheses(a: &CDElement, b: &CDElement) -> Result<()> {
    const OP: &str = "span";
    if a.level() != b.level() {
        return Err(AlgebraError::LevelMismatch { left: a.level(), right: b.level() });
    }
    if a.level() < 4 {
        return Err(AlgebraError::LevelTooLow { op: OP, min: 4, level: a.level() });
    }
    for (x, name) in [(a, "a"), (b, "b")] {
        if x.is_zero() {
            return Err(AlgebraError::Zero { op: OP, arg: name });
        }
        if !x.is_doubly_pure() {
            return Err(AlgebraError::NotDoublyPure { op: OP, arg: name });
        }
        if !x.norm_sq().is_one() {
            return Err(AlgebraError::NotUnitNorm { op: OP, arg: name, norm_sq: x.norm_sq().to_string() });
        }
    }
    for h in h_a_elements(a)? {
        if !b.dot(&h)?.is_zero() {
            return Err(AlgebraError::Hypothesis(format!("b is not orthogonal to H_a (fails against {h})")));
        }
    }
    if !strongly_alternates_with(a, b)? {
        return Err(AlgebraError::Hypothesis("a does not alternate strongly with b".into()));
    }
    Ok(())
}

/// `span{e0, a, b, ab}`.
pub fn quaternion_span(a: &CDElement, b: &CDElement) -> Result<SubalgebraBasis> {
    check_span_hypotheses(a, b)?;
    SubalgebraBasis::new(vec![CDElement::one(a.level()), a.clone(), b.clone(), a * b])
}

/// `span{e0, a, b, ab, ãb, -b̃, ã, ẽ0}`.
pub fn octonion_span(a: &CDElement, b: &CDElement) -> Result<SubalgebraBasis> {
    check_span_hypotheses(a, b)?;
    let level = a.level();
    let at = a.tilde()?;
    SubalgebraBasis::new(vec![
        CDElement::one(level),
        a.clone(),
        b.clone(),
        a * b,
        &at * b,
        -b.tilde()?,
        at,
        CDElement::tilde_unit(level)?,
    ])
}

/// For a pure unit `a = r c + s ẽ0` (`c` the unit doubly pure direction,
/// `r >= 0`) returns `b = s c - r ẽ0`: orthogonal to `a`, of unit norm, and
/// strongly alternating with `a`. When `a = ±ẽ0` the direction is taken to
/// be `c = e1`, giving `b = -e1`.
pub fn companion(a: &CDElement) -> Result<CDElement> {
    const OP: &str = "companion";
    let level = a.level();
    if level < 4 {
        return Err(AlgebraError::LevelTooLow { op: OP, min: 4, level });
    }
    if !a.is_pure() {
        return Err(AlgebraError::NotPure { op: OP, arg: "a" });
    }
    if !a.norm_sq().is_one() {
        return Err(AlgebraError::NotUnitNorm { op: OP, arg: "a", norm_sq: a.norm_sq().to_string() });
    }
    let d = a.decompose();
    let e0t = CDElement::tilde_unit(level)?;
    let b = if d.doubly_pure.is_zero() {
        -CDElement::e(level, 1)?
    } else {
        let r_sq = d.doubly_pure.norm_sq();
        let r = rational::sqrt_exact(&r_sq)
            .ok_or_else(|| AlgebraError::IrrationalNorm { op: OP, arg: "doubly pure part of a", norm_sq: r_sq.to_string() })?;
        let c = d.doubly_pure.scale(&r.recip());
        c.scale(&d.tilde).sub(&e0t.scale(&r))?
    };
    if !a.dot(&b)?.is_zero() || !b.norm_sq().is_one() || !strongly_alternates_with(a, &b)? {
        return Err(AlgebraError::Hypothesis(format!("companion {b} of {a} fails its postconditions")));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{associator, basis};
    use crate::parse_element;
    use crate::rational::{int, ratio};

    fn p4(s: &str) -> CDElement {
        parse_element(4, s).unwrap()
    }

    /// Oracle: the products of `[e0, ã, a, ẽ0]` for a unit doubly pure `a`,
    /// derived by hand from `ã = a ẽ0` and `ã x = -(a x)~` for doubly pure
    /// `x`. The `ã a` entry is `+ẽ0` (and `a ã = -ẽ0`).
    fn expected_h_a_table() -> [[(i64, usize); 4]; 4] {
        [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ]
    }

    fn assert_h_a_table(b: &SubalgebraBasis) {
        assert!(b.closed);
        for (i, row) in expected_h_a_table().iter().enumerate() {
            for (j, &(sign, k)) in row.iter().enumerate() {
                let mut v = vec![int(0); 4];
                v[k] = int(sign);
                assert_eq!(b.table[i][j].as_ref(), Some(&v), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn h_a_examples() {
        let b = h_a_basis(&basis(4, 1), false).unwrap();
        assert_eq!(b.elements, vec![basis(4, 0), basis(4, 9), basis(4, 1), basis(4, 8)]);
        assert_h_a_table(&b);
        assert!(b.matches_level(2));
        assert_h_a_table(&h_a_basis(&basis(4, 5), false).unwrap());

        let a = p4("3*e1 + 4*e10");
        assert!(matches!(h_a_basis(&a, false), Err(AlgebraError::NotUnitNorm { .. })));
        let b = h_a_basis(&a, true).unwrap();
        assert_eq!(b.elements[2], p4("3/5*e1 + 4/5*e10"));
        assert_h_a_table(&b);
        assert!(matches!(h_a_basis(&p4("e1 + e10"), true), Err(AlgebraError::IrrationalNorm { .. })));
        assert!(matches!(h_a_basis(&basis(4, 8), false), Err(AlgebraError::NotDoublyPure { .. })));
        assert!(matches!(h_a_basis(&CDElement::zero(4), false), Err(AlgebraError::Zero { .. })));
        assert!(h_a_basis(&basis(2, 1), false).is_err());
    }

    #[test]
    fn h_a_is_associative() {
        let b = h_a_basis(&p4("3/5*e3 - 4/5*e13"), false).unwrap();
        for u in &b.elements {
            for v in &b.elements {
                for w in &b.elements {
                    assert!(associator(u, v, w).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn projections() {
        let h = h_a_basis(&basis(4, 1), false).unwrap();
        let x = p4("2 + e1 - 3*e9");
        assert_eq!(h.projection_split(&x).unwrap(), (x.clone(), CDElement::zero(4)));
        assert_eq!(h.projection_split(&basis(4, 2)).unwrap(), (CDElement::zero(4), basis(4, 2)));
        assert_eq!(h.projection_split(&p4("e1 + e2")).unwrap(), (basis(4, 1), basis(4, 2)));
        let (i, o) = h.projection_split(&p4("1/2*e1 + 3*e8 - e13")).unwrap();
        assert!(i.dot(&o).unwrap().is_zero());
        assert!(matches!(
            projection_split(&x, &[basis(4, 1), p4("e1 + e2")]),
            Err(AlgebraError::NonOrthogonalBasis(0, 1))
        ));
        assert!(matches!(
            projection_split(&x, &[CDElement::zero(4)]),
            Err(AlgebraError::ZeroBasisElement(0))
        ));
    }

    #[test]
    fn spans_of_basis_pair() {
        let (a, b) = (basis(4, 1), basis(4, 2));
        let q = quaternion_span(&a, &b).unwrap();
        assert!(q.closed && q.matches_level(2));
        let o = octonion_span(&a, &b).unwrap();
        assert!(o.closed && o.matches_level(3));
        assert_eq!(o.table.iter().flatten().filter(|c| c.is_some()).count(), 64);

        let o = octonion_span(&basis(4, 1), &basis(4, 4)).unwrap();
        assert!(o.matches_level(3));
    }

    #[test]
    fn span_rejections() {
        let err = quaternion_span(&basis(4, 1), &basis(4, 9)).unwrap_err();
        assert!(matches!(err, AlgebraError::Hypothesis(ref m) if m.contains("orthogonal")));
        assert!(matches!(
            quaternion_span(&p4("e1 + e10"), &basis(4, 2)),
            Err(AlgebraError::NotUnitNorm { arg: "a", .. })
        ));
        assert!(matches!(quaternion_span(&basis(3, 1), &basis(3, 2)), Err(AlgebraError::LevelTooLow { .. })));
        // e3 is orthogonal to H_(e1 e10 combination) but the pair does not alternate strongly.
        let a = p4("3/5*e1 + 4/5*e10");
        let err = octonion_span(&a, &basis(4, 15)).unwrap_err();
        assert!(matches!(err, AlgebraError::Hypothesis(ref m) if m.contains("strongly")), "{err}");
    }

    #[test]
    fn identification_search_recovers_shuffled_order() {
        let o = octonion_span(&basis(4, 1), &basis(4, 2)).unwrap();
        let mut shuffled = o.elements.clone();
        shuffled.swap(3, 5);
        shuffled[6] = -&shuffled[6];
        let s = SubalgebraBasis::new(shuffled).unwrap();
        assert!(s.closed && !s.matches_level(3));
        let ident = s.find_signed_identification(3).expect("some identification");
        let relabelled: Vec<CDElement> = ident
            .iter()
            .map(|sb| if sb.negative { -&s.elements[sb.index] } else { s.elements[sb.index].clone() })
            .collect();
        assert!(SubalgebraBasis::new(relabelled).unwrap().matches_level(3));
    }

    #[test]
    fn companion_examples() {
        assert_eq!(companion(&basis(4, 1)).unwrap(), -basis(4, 8));
        let a = p4("3/5*e1 + 4/5*e8");
        assert_eq!(companion(&a).unwrap(), p4("4/5*e1 - 3/5*e8"));
        let b = companion(&basis(4, 8)).unwrap();
        assert_eq!(b, -basis(4, 1));
        assert_eq!(companion(&-basis(4, 8)).unwrap(), -basis(4, 1));
        assert!(matches!(companion(&p4("e1 + e2")), Err(AlgebraError::NotUnitNorm { .. })));
        assert!(matches!(companion(&basis(4, 0)), Err(AlgebraError::NotPure { .. })));
        // doubly pure part with irrational norm
        let a = p4("1/3*e1 + 2/3*e2 + 2/3*e8");
        assert!(matches!(companion(&a), Err(AlgebraError::IrrationalNorm { .. })));
        let _ = ratio(1, 1);
    }
}
