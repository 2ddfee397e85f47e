//! Elements of the level-`n` Cayley-Dickson algebra `A_n = Q^(2^n)`.
//!
//! A pair `(x1, x2)` of level-`(n-1)` elements is stored as the coefficient
//! vector `x1 ++ x2`, so `e_(2^(n-1))` is the element written `ẽ0` below.
//! Products follow the doubling rule
//!
//! ```text
//! (x1, x2)(y1, y2) = (x1 y1 - conj(y2) x2,  y2 x1 + x2 conj(y1))
//! conj(x1, x2)     = (conj(x1), -x2)
//! ```
//!
//! which fixes, for example, `e1 e5 = -e4` and `e10 e15 = e5` in `A_4`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::rational::{self, Rational};
use crate::table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    level: u32,
    index: usize,
}

impl BasisIndex {
    pub fn new(level: u32, index: usize) -> Result<Self> {
        if index >= dim_of(level) {
            return Err(AlgebraError::IndexOutOfRange { level, index });
        }
        Ok(BasisIndex { level, index })
    }

    /// `ẽ0 = e_(2^(n-1))`.
    pub fn tilde_unit(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(AlgebraError::LevelTooLow { op: "tilde_unit", min: 1, level });
        }
        Ok(BasisIndex { level, index: half_of(level) })
    }

    pub fn level(self) -> u32 {
        self.level
    }

    pub fn index(self) -> usize {
        self.index
    }
}

pub(crate) fn dim_of(level: u32) -> usize {
    1usize << level
}

pub(crate) fn half_of(level: u32) -> usize {
    dim_of(level) >> 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ElementRepr", into = "ElementRepr")]
pub struct CDElement {
    level: u32,
    coeffs: Vec<Rational>,
}

/// `a = r e0 + s ẽ0 + c` with `c` doubly pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub real: Rational,
    pub tilde: Rational,
    pub doubly_pure: CDElement,
}

impl CDElement {
    pub fn zero(level: u32) -> Self {
        CDElement { level, coeffs: vec![Rational::zero(); dim_of(level)] }
    }

    pub fn one(level: u32) -> Self {
        Self::scalar(level, rational::one())
    }

    pub fn scalar(level: u32, r: Rational) -> Self {
        let mut x = Self::zero(level);
        x.coeffs[0] = r;
        x
    }

    /// `e_i` for a validated index.
    pub fn basis(i: BasisIndex) -> Self {
        let mut x = Self::zero(i.level);
        x.coeffs[i.index] = Rational::one();
        x
    }

    /// `e_index` at `level`, rejecting out-of-range indices.
    pub fn e(level: u32, index: usize) -> Result<Self> {
        BasisIndex::new(level, index).map(Self::basis)
    }

    pub fn tilde_unit(level: u32) -> Result<Self> {
        BasisIndex::tilde_unit(level).map(Self::basis)
    }

    pub fn from_coeffs(level: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = dim_of(level);
        if coeffs.len() != expected {
            return Err(AlgebraError::BadLength { len: coeffs.len(), expected });
        }
        Ok(CDElement { level, coeffs })
    }

    pub fn from_ints(level: u32, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(level, coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// Sparse constructor from `(index, coefficient)` terms; repeated indices add up.
    pub fn from_terms(level: u32, terms: &[(usize, Rational)]) -> Result<Self> {
        let mut x = Self::zero(level);
        for (i, c) in terms {
            if *i >= x.dim() {
                return Err(AlgebraError::IndexOutOfRange { level, index: *i });
            }
            x.coeffs[*i] += c;
        }
        Ok(x)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    fn same_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(AlgebraError::LevelMismatch { left: self.level, right: other.level });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CDElement { level: self.level, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CDElement { level: self.level, coeffs })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CDElement { level: self.level, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn neg(&self) -> Self {
        CDElement { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Keeps the `e0` coefficient and negates every other one.
    pub fn conjugate(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(1) {
            *c = -&*c;
        }
        CDElement { level: self.level, coeffs }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        Ok(CDElement { level: self.level, coeffs: multiply_table(self.level, &self.coeffs, &other.coeffs) })
    }

    /// `t(x) = x + conj(x)` read as a real number, i.e. twice the `e0` coefficient.
    pub fn trace(&self) -> Rational {
        &self.coeffs[0] + &self.coeffs[0]
    }

    /// `<x, y> = t(x conj(y)) / 2`, computed through the algebra product.
    pub fn inner_product(&self, other: &Self) -> Result<Rational> {
        let p = self.multiply(&other.conjugate())?;
        Ok(p.trace() / rational::int(2))
    }

    /// Euclidean dot product of the coefficient vectors.
    pub fn dot(&self, other: &Self) -> Result<Rational> {
        self.same_level(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum())
    }

    /// `||x||^2`, the sum of squared coefficients (equal to `x conj(x)`).
    pub fn norm_sq(&self) -> Rational {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// `(x1, x2) -> (-x2, x1)`; coincides with right multiplication by `ẽ0`.
    pub fn tilde(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(AlgebraError::LevelTooLow { op: "tilde", min: 1, level: 0 });
        }
        let h = half_of(self.level);
        let mut coeffs = Vec::with_capacity(self.dim());
        coeffs.extend(self.coeffs[h..].iter().map(|c| -c));
        coeffs.extend(self.coeffs[..h].iter().cloned());
        Ok(CDElement { level: self.level, coeffs })
    }

    pub fn decompose(&self) -> Decomposition {
        let real = self.coeffs[0].clone();
        let mut doubly_pure = self.clone();
        doubly_pure.coeffs[0] = Rational::zero();
        let tilde = if self.level == 0 {
            Rational::zero()
        } else {
            let h = half_of(self.level);
            std::mem::take(&mut doubly_pure.coeffs[h])
        };
        Decomposition { real, tilde, doubly_pure }
    }

    pub fn real_part(&self) -> Rational {
        self.coeffs[0].clone()
    }

    pub fn pure_part(&self) -> Self {
        let mut x = self.clone();
        x.coeffs[0] = Rational::zero();
        x
    }

    pub fn is_pure(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// No `e0` and no `ẽ0` component. At level 0 only the zero element qualifies.
    pub fn is_doubly_pure(&self) -> bool {
        if self.level == 0 {
            return self.is_zero();
        }
        self.coeffs[0].is_zero() && self.coeffs[half_of(self.level)].is_zero()
    }

    /// True when `self = r e0` for some rational `r`.
    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Split a level-`n` element (`n >= 1`) into its two level-`(n-1)` halves.
    pub fn halves(&self) -> Result<(Self, Self)> {
        if self.level == 0 {
            return Err(AlgebraError::LevelTooLow { op: "halves", min: 1, level: 0 });
        }
        let h = half_of(self.level);
        let lo = CDElement { level: self.level - 1, coeffs: self.coeffs[..h].to_vec() };
        let hi = CDElement { level: self.level - 1, coeffs: self.coeffs[h..].to_vec() };
        Ok((lo, hi))
    }

    /// The level-`(n+1)` element `(lo, hi)`.
    pub fn from_halves(lo: &Self, hi: &Self) -> Result<Self> {
        lo.same_level(hi)?;
        let mut coeffs = lo.coeffs.clone();
        coeffs.extend(hi.coeffs.iter().cloned());
        Ok(CDElement { level: lo.level + 1, coeffs })
    }

    /// Image under the level-raising embedding `x -> (x, 0)`, applied repeatedly.
    pub fn embed(&self, level: u32) -> Result<Self> {
        if level < self.level {
            return Err(AlgebraError::LevelMismatch { left: self.level, right: level });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim_of(level), Rational::zero());
        Ok(CDElement { level, coeffs })
    }
}

/// `(a b) c - a (b c)`.
pub fn associator(a: &CDElement, b: &CDElement, c: &CDElement) -> Result<CDElement> {
    let left = a.multiply(b)?.multiply(c)?;
    let right = a.multiply(&b.multiply(c)?)?;
    left.sub(&right)
}

/// `a b - b a`.
pub fn commutator(a: &CDElement, b: &CDElement) -> Result<CDElement> {
    a.multiply(b)?.sub(&b.multiply(a)?)
}

// ---------------------------------------------------------------------------
// Products

/// Reference product: the doubling formula applied recursively on halves.
pub fn multiply_recursive(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(x.len(), y.len());
    let n = x.len();
    if n == 1 {
        return vec![&x[0] * &y[0]];
    }
    let zero = |v: &[Rational]| v.iter().all(Zero::is_zero);
    let h = n / 2;
    let (x1, x2) = x.split_at(h);
    let (y1, y2) = y.split_at(h);
    let mut out = vec![Rational::zero(); n];
    let mut acc = |offset: usize, v: Vec<Rational>, negate: bool| {
        for (o, c) in out[offset..offset + h].iter_mut().zip(v) {
            if negate {
                *o -= c;
            } else {
                *o += c;
            }
        }
    };
    // x1 y1 - conj(y2) x2
    if !zero(x1) && !zero(y1) {
        acc(0, multiply_recursive(x1, y1), false);
    }
    if !zero(x2) && !zero(y2) {
        acc(0, multiply_recursive(&conj_slice(y2), x2), true);
    }
    // y2 x1 + x2 conj(y1)
    if !zero(x1) && !zero(y2) {
        acc(h, multiply_recursive(y2, x1), false);
    }
    if !zero(x2) && !zero(y1) {
        acc(h, multiply_recursive(x2, &conj_slice(y1)), false);
    }
    out
}

fn conj_slice(v: &[Rational]) -> Vec<Rational> {
    v.iter().enumerate().map(|(i, c)| if i == 0 { c.clone() } else { -c }).collect()
}

/// Table-driven product. Operands are scaled to integer vectors over their
/// common denominators so the inner loop never normalizes a fraction; the
/// accumulation runs in `i128` whenever the magnitudes allow it.
fn multiply_table(level: u32, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let xs: Vec<usize> = (0..n).filter(|&i| !x[i].is_zero()).collect();
    let ys: Vec<usize> = (0..n).filter(|&j| !y[j].is_zero()).collect();
    let mut out = vec![Rational::zero(); n];
    if xs.is_empty() || ys.is_empty() {
        return out;
    }
    if xs.len() == 1 || ys.len() == 1 {
        for &i in &xs {
            for &j in &ys {
                let p = &x[i] * &y[j];
                if table::is_negative(level, i, j) {
                    out[i ^ j] -= p;
                } else {
                    out[i ^ j] += p;
                }
            }
        }
        return out;
    }

    let (xi, dx) = integer_form(x, &xs);
    let (yi, dy) = integer_form(y, &ys);
    let denom = dx * dy;

    if let Some(acc) = accumulate_i128(level, &xs, &xi, &ys, &yi, n) {
        for (o, a) in out.iter_mut().zip(acc) {
            if a != 0 {
                *o = Rational::new(BigInt::from(a), denom.clone());
            }
        }
        return out;
    }

    let mut acc = vec![BigInt::zero(); n];
    for (&i, a) in xs.iter().zip(&xi) {
        for (&j, b) in ys.iter().zip(&yi) {
            let p = a * b;
            if table::is_negative(level, i, j) {
                acc[i ^ j] -= p;
            } else {
                acc[i ^ j] += p;
            }
        }
    }
    for (o, a) in out.iter_mut().zip(acc) {
        if !a.is_zero() {
            *o = Rational::new(a, denom.clone());
        }
    }
    out
}

fn integer_form(v: &[Rational], support: &[usize]) -> (Vec<BigInt>, BigInt) {
    let d = support.iter().fold(BigInt::one(), |acc, &i| acc.lcm(v[i].denom()));
    let ints = support.iter().map(|&i| v[i].numer() * (&d / v[i].denom())).collect();
    (ints, d)
}

fn accumulate_i128(
    level: u32,
    xs: &[usize],
    xi: &[BigInt],
    ys: &[usize],
    yi: &[BigInt],
    n: usize,
) -> Option<Vec<i128>> {
    let small = |v: &[BigInt]| -> Option<(Vec<i64>, u128)> {
        let mut max = 0u128;
        let mut out = Vec::with_capacity(v.len());
        for b in v {
            let s = b.to_i64()?;
            max = max.max(s.unsigned_abs() as u128);
            out.push(s);
        }
        Some((out, max))
    };
    let (xv, mx) = small(xi)?;
    let (yv, my) = small(yi)?;
    // Each output slot receives at most min(|xs|, |ys|) contributions.
    let terms = xs.len().min(ys.len()) as u128;
    let bound = mx.checked_mul(my)?.checked_mul(terms)?;
    if bound >= i128::MAX as u128 {
        return None;
    }
    let mut acc = vec![0i128; n];
    for (&i, &a) in xs.iter().zip(&xv) {
        for (&j, &b) in ys.iter().zip(&yv) {
            let p = a as i128 * b as i128;
            if table::is_negative(level, i, j) {
                acc[i ^ j] -= p;
            } else {
                acc[i ^ j] += p;
            }
        }
    }
    Some(acc)
}

// ---------------------------------------------------------------------------
// Operator sugar. These panic on level mismatch; use the checked methods
// when levels come from user input.

impl Add for &CDElement {
    type Output = CDElement;
    fn add(self, rhs: &CDElement) -> CDElement {
        CDElement::add(self, rhs).expect("level mismatch in +")
    }
}

impl Sub for &CDElement {
    type Output = CDElement;
    fn sub(self, rhs: &CDElement) -> CDElement {
        CDElement::sub(self, rhs).expect("level mismatch in -")
    }
}

impl Mul for &CDElement {
    type Output = CDElement;
    fn mul(self, rhs: &CDElement) -> CDElement {
        self.multiply(rhs).expect("level mismatch in *")
    }
}

impl Mul<&CDElement> for &Rational {
    type Output = CDElement;
    fn mul(self, rhs: &CDElement) -> CDElement {
        rhs.scale(self)
    }
}

impl Neg for &CDElement {
    type Output = CDElement;
    fn neg(self) -> CDElement {
        CDElement::neg(self)
    }
}

impl Neg for CDElement {
    type Output = CDElement;
    fn neg(self) -> CDElement {
        CDElement::neg(&self)
    }
}

// ---------------------------------------------------------------------------
// Serialization: {"level": n, "coeffs": ["p/q", ...]}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    level: u32,
    coeffs: Vec<String>,
}

impl From<CDElement> for ElementRepr {
    fn from(x: CDElement) -> Self {
        ElementRepr { level: x.level, coeffs: x.coeffs.iter().map(rational::to_pq).collect() }
    }
}

impl TryFrom<ElementRepr> for CDElement {
    type Error = AlgebraError;
    fn try_from(r: ElementRepr) -> Result<Self> {
        let coeffs = r.coeffs.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>()?;
        CDElement::from_coeffs(r.level, coeffs)
    }
}

/// Convenience for tests and examples: `e(level, i)` that panics on bad input.
pub fn basis(level: u32, index: usize) -> CDElement {
    CDElement::e(level, index).expect("basis index out of range")
}

impl CDElement {
    /// Largest absolute numerator or denominator, used to keep random inputs small.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .flat_map(|c| [c.numer().abs(), c.denom().clone()])
            .max()
            .unwrap_or_else(BigInt::one)
    }
}
