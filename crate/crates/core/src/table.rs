//! Structure constants of the basis: `e_i * e_j = ±e_(i xor j)`.
//!
//! Signs come from an index-level replay of the doubling formula. Tables are
//! cached per level; any table for level <= [`VERIFIED_LEVEL`] is checked
//! against the coefficient-level recursion in [`crate::element`] before it
//! is handed out.

use std::fmt;
use std::sync::OnceLock;

use crate::element::multiply_recursive;
use crate::rational::{one, zero, Rational};

/// Highest level whose sign table is cached (4^10 entries).
pub const MAX_CACHED_LEVEL: u32 = 10;
/// Tables up to this level are verified against the recursive product.
pub const VERIFIED_LEVEL: u32 = 5;

static TABLES: [OnceLock<SignTable>; MAX_CACHED_LEVEL as usize + 1] =
    [const { OnceLock::new() }; MAX_CACHED_LEVEL as usize + 1];

/// A signed basis element `±e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedBasis {
    pub negative: bool,
    pub index: usize,
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-e{}", self.index)
        } else {
            write!(f, "e{}", self.index)
        }
    }
}

struct SignTable {
    dim: usize,
    negative: Vec<bool>,
}

/// Sign of `e_i e_j` obtained by walking the doubling formula down the
/// levels. At each level with half-width `h`:
///
/// * `(x1,0)(y1,0) = (x1 y1, 0)`
/// * `(x1,0)(0,y2) = (0, y2 x1)`
/// * `(0,x2)(y1,0) = (0, x2 conj(y1))`
/// * `(0,x2)(0,y2) = (-conj(y2) x2, 0)`
pub fn sign_by_index(level: u32, mut i: usize, mut j: usize) -> bool {
    let mut negative = false;
    for n in (1..=level).rev() {
        let h = 1usize << (n - 1);
        match (i >= h, j >= h) {
            (false, false) => {}
            (false, true) => (i, j) = (j - h, i),
            (true, false) => {
                negative ^= j != 0;
                i -= h;
            }
            (true, true) => {
                let j2 = j - h;
                negative ^= j2 == 0;
                (i, j) = (j2, i - h);
            }
        }
    }
    negative
}

fn build(level: u32) -> SignTable {
    let dim = 1usize << level;
    let mut negative = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            negative.push(sign_by_index(level, i, j));
        }
    }
    if level <= VERIFIED_LEVEL {
        verify(level, dim, &negative);
    }
    SignTable { dim, negative }
}

fn verify(level: u32, dim: usize, negative: &[bool]) {
    let basis = |k: usize| {
        let mut v = vec![zero(); dim];
        v[k] = one();
        v
    };
    for i in 0..dim {
        let ei = basis(i);
        for j in 0..dim {
            let product = multiply_recursive(&ei, &basis(j));
            let k = i ^ j;
            let expected: Rational = if negative[i * dim + j] { -one() } else { one() };
            let ok = product
                .iter()
                .enumerate()
                .all(|(m, c)| if m == k { *c == expected } else { *c == zero() });
            assert!(
                ok,
                "structure table disagrees with recursive product at level {level}: e{i} e{j}"
            );
        }
    }
}

fn table(level: u32) -> Option<&'static SignTable> {
    TABLES
        .get(level as usize)
        .map(|cell| cell.get_or_init(|| build(level)))
}

/// Force construction (and verification) of the table for `level`.
pub fn warm(level: u32) {
    let _ = table(level);
}

/// `true` when `e_i e_j = -e_(i^j)` at `level`.
#[inline]
pub fn is_negative(level: u32, i: usize, j: usize) -> bool {
    match table(level) {
        Some(t) => t.negative[i * t.dim + j],
        None => sign_by_index(level, i, j),
    }
}

pub fn basis_product(level: u32, i: usize, j: usize) -> SignedBasis {
    SignedBasis { negative: is_negative(level, i, j), index: i ^ j }
}

/// Full `2^n x 2^n` table of signed basis products.
pub fn structure_table(level: u32) -> Vec<Vec<SignedBasis>> {
    let dim = 1usize << level;
    (0..dim)
        .map(|i| (0..dim).map(|j| basis_product(level, i, j)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_signs() {
        let t = structure_table(2);
        let rendered: Vec<Vec<String>> = t
            .iter()
            .map(|row| row.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(rendered[1], ["e1", "-e0", "e3", "-e2"]);
        assert_eq!(rendered[2], ["e2", "-e3", "-e0", "e1"]);
        assert_eq!(rendered[3], ["e3", "e2", "-e1", "-e0"]);
    }

    #[test]
    fn tables_verify_up_to_level_five() {
        for level in 0..=VERIFIED_LEVEL {
            warm(level);
        }
    }

    #[test]
    fn uncached_levels_fall_back_to_index_walk() {
        let level = MAX_CACHED_LEVEL + 1;
        assert!(!is_negative(level, 0, 5));
        assert!(is_negative(level, 5, 5));
    }
}
