//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

/// Row-reduce `rows` in place; returns the pivot column of each nonzero row.
fn row_reduce(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let Some(cols) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows, cols).len()
}

/// Coefficients `c` with `sum_k c_k * columns[k] = target`, if any exist.
/// With dependent columns an arbitrary particular solution is returned.
pub fn solve_combination(columns: &[&[Rational]], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let n = target.len();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|col| col[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut solution = vec![Rational::zero(); k];
    for (row, &c) in rows.iter().zip(&pivots) {
        solution[c] = row[k].clone();
    }
    Some(solution)
}

/// Rank of the `2 x n` matrix `[u; v]` is at most one.
pub fn dependent_pair(u: &[Rational], v: &[Rational]) -> bool {
    let n = u.len();
    (0..n).all(|i| (i + 1..n).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[v(&[1, 2, 3]), v(&[2, 4, 6])]), 1);
        assert_eq!(rank(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 0])]), 2);
        assert_eq!(rank(&[v(&[0, 0]), v(&[0, 0])]), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn combinations() {
        let a = v(&[1, 0, 1]);
        let b = v(&[0, 1, 1]);
        let t = vec![int(2), ratio(1, 2), ratio(5, 2)];
        assert_eq!(solve_combination(&[&a, &b], &t), Some(vec![int(2), ratio(1, 2)]));
        assert_eq!(solve_combination(&[&a, &b], &v(&[1, 1, 0])), None);
        assert_eq!(solve_combination(&[], &v(&[0, 0])), Some(vec![]));
    }

    #[test]
    fn pairs() {
        assert!(dependent_pair(&v(&[0, 1, 2]), &v(&[0, -2, -4])));
        assert!(dependent_pair(&v(&[0, 0, 0]), &v(&[3, 1, 2])));
        assert!(!dependent_pair(&v(&[1, 0, 0]), &v(&[0, 1, 0])));
    }
}
