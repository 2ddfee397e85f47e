//! Dense matrices of linear operators on `A_n`.
//!
//! Column `j` of a [`MatrixRep`] is the image of `e_j`. Besides the left and
//! right multiplications `L_a`, `R_b`, this module builds
//! `A = L_a^2 + R_b^2` and `S = R_b L_a - L_a R_b` (so `S(x) = (a, x, b)`),
//! which describe the square of left multiplication by `(a, b)` one level up.

use num_traits::{One, Zero};

use crate::element::{dim_of, CDElement};
use crate::error::{AlgebraError, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    level: u32,
    /// Row-major, `dim * dim`.
    entries: Vec<Rational>,
}

impl MatrixRep {
    pub fn zero(level: u32) -> Self {
        let d = dim_of(level);
        MatrixRep { level, entries: vec![Rational::zero(); d * d] }
    }

    pub fn identity(level: u32) -> Self {
        Self::scalar(level, rational::one())
    }

    pub fn scalar(level: u32, t: Rational) -> Self {
        let mut m = Self::zero(level);
        let d = m.dim();
        for i in 0..d {
            m.entries[i * d + i] = t.clone();
        }
        m
    }

    /// Matrix whose `j`-th column is `f(e_j)`.
    pub fn from_columns<F>(level: u32, mut f: F) -> Result<Self>
    where
        F: FnMut(&CDElement) -> Result<CDElement>,
    {
        let d = dim_of(level);
        let mut m = Self::zero(level);
        for j in 0..d {
            let col = f(&CDElement::e(level, j)?)?;
            if col.level() != level {
                return Err(AlgebraError::LevelMismatch { left: level, right: col.level() });
            }
            for (i, c) in col.into_coeffs().into_iter().enumerate() {
                m.entries[i * d + j] = c;
            }
        }
        Ok(m)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        dim_of(self.level)
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim() + col]
    }

    pub fn column(&self, j: usize) -> CDElement {
        let d = self.dim();
        let coeffs = (0..d).map(|i| self.entries[i * d + j].clone()).collect();
        CDElement::from_coeffs(self.level, coeffs).expect("column length")
    }

    fn same_level(&self, level: u32) -> Result<()> {
        if self.level != level {
            return Err(AlgebraError::LevelMismatch { left: self.level, right: level });
        }
        Ok(())
    }

    pub fn apply(&self, x: &CDElement) -> Result<CDElement> {
        self.same_level(x.level())?;
        let d = self.dim();
        let support: Vec<usize> = x.support().collect();
        let coeffs = (0..d)
            .map(|i| {
                let row = &self.entries[i * d..(i + 1) * d];
                support.iter().map(|&j| &row[j] * x.coeff(j)).sum()
            })
            .collect();
        CDElement::from_coeffs(self.level, coeffs)
    }

    /// Matrix product `self * other`, i.e. the composition "`other` first".
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_level(other.level)?;
        let d = self.dim();
        let mut out = Self::zero(self.level);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if !b.is_zero() {
                        out.entries[i * d + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_level(other.level)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(MatrixRep { level: self.level, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_level(other.level)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(MatrixRep { level: self.level, entries })
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim();
        let mut out = Self::zero(self.level);
        for i in 0..d {
            for j in 0..d {
                out.entries[j * d + i] = self.entries[i * d + j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i..d).all(|j| self.entries[i * d + j] == -&self.entries[j * d + i]))
    }

    /// `Some(t)` when the matrix equals `t I`.
    pub fn is_scalar(&self) -> Option<Rational> {
        let d = self.dim();
        let t = self.entries[0].clone();
        let ok = (0..d).all(|i| {
            (0..d).all(|j| {
                let v = &self.entries[i * d + j];
                if i == j {
                    *v == t
                } else {
                    v.is_zero()
                }
            })
        });
        ok.then_some(t)
    }

    /// Row-major CSV with every entry as `p/q`.
    pub fn to_csv(&self) -> String {
        let d = self.dim();
        let mut out = String::new();
        for i in 0..d {
            let row: Vec<String> = (0..d).map(|j| rational::to_pq(&self.entries[i * d + j])).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `L_a`: column `j` is `a e_j`.
pub fn left_mult_matrix(a: &CDElement) -> MatrixRep {
    MatrixRep::from_columns(a.level(), |e| a.multiply(e)).expect("same level")
}

/// `R_b`: column `j` is `e_j b`.
pub fn right_mult_matrix(b: &CDElement) -> MatrixRep {
    MatrixRep::from_columns(b.level(), |e| e.multiply(b)).expect("same level")
}

fn require_pure_pair(op: &'static str, a: &CDElement, b: &CDElement) -> Result<()> {
    if a.level() != b.level() {
        return Err(AlgebraError::LevelMismatch { left: a.level(), right: b.level() });
    }
    if !a.is_pure() {
        return Err(AlgebraError::NotPure { op, arg: "a" });
    }
    if !b.is_pure() {
        return Err(AlgebraError::NotPure { op, arg: "b" });
    }
    Ok(())
}

/// `A = L_a^2 + R_b^2` for pure `a`, `b`.
pub fn op_a(a: &CDElement, b: &CDElement) -> Result<MatrixRep> {
    require_pure_pair("op_A", a, b)?;
    let la = left_mult_matrix(a);
    let rb = right_mult_matrix(b);
    la.compose(&la)?.add(&rb.compose(&rb)?)
}

/// `S = R_b L_a - L_a R_b`, the operator `x -> (a, x, b)`.
pub fn op_s(a: &CDElement, b: &CDElement) -> Result<MatrixRep> {
    require_pure_pair("op_S", a, b)?;
    let la = left_mult_matrix(a);
    let rb = right_mult_matrix(b);
    rb.compose(&la)?.sub(&la.compose(&rb)?)
}

/// Compares `(a,b)((a,b)(x,y))`, computed one level up with the algebra
/// product, against `(A x - S y, A y + S x)` assembled from the level-`n`
/// operators.
pub fn check_lemma_3_2(a: &CDElement, b: &CDElement, x: &CDElement, y: &CDElement) -> Result<bool> {
    require_pure_pair("check_lemma_3_2", a, b)?;
    for v in [x, y] {
        if v.level() != a.level() {
            return Err(AlgebraError::LevelMismatch { left: a.level(), right: v.level() });
        }
    }
    let ab = CDElement::from_halves(a, b)?;
    let xy = CDElement::from_halves(x, y)?;
    let lhs = ab.multiply(&ab.multiply(&xy)?)?;

    let big_a = op_a(a, b)?;
    let s = op_s(a, b)?;
    let lo = big_a.apply(x)?.sub(&s.apply(y)?)?;
    let hi = big_a.apply(y)?.add(&s.apply(x)?)?;
    Ok(lhs == CDElement::from_halves(&lo, &hi)?)
}

/// `L_a^2` as a matrix.
pub fn left_square(a: &CDElement) -> MatrixRep {
    let la = left_mult_matrix(a);
    la.compose(&la).expect("same level")
}

/// `L_a^2 = -||a||^2 I`.
pub fn has_scalar_left_square(a: &CDElement) -> bool {
    left_square(a).is_scalar() == Some(-a.norm_sq())
}

impl MatrixRep {
    pub fn is_identity(&self) -> bool {
        self.is_scalar().is_some_and(|t| t.is_one())
    }
}
