//! Exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QVec = Vec<BigRational>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn rref(rows: &[QVec]) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..ncols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[QVec]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : row . x = 0 for every row}` in `ncols` dimensions.
pub fn nullspace(rows: &[QVec], ncols: usize) -> Vec<QVec> {
    let (m, pivots) = if rows.is_empty() { (Vec::new(), Vec::new()) } else { rref(rows) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of the square system `a x = b`, or `None` when singular.
pub fn solve(a: &[QVec], b: &[BigRational]) -> Option<QVec> {
    let n = a.len();
    let aug: Vec<QVec> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (m, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |acc, t| acc + t)
}
