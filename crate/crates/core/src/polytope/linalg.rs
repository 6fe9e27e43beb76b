//! Small exact linear algebra over integers and rationals.
//!
//! Sizes here are the ambient dimension (at most ~10), so plain Gaussian
//! elimination over rationals and Bareiss elimination over integers are all
//! that is needed.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Signed, Zero};

use crate::rational::{rat_int, Int, Rational};

/// Determinant of a square integer matrix (rows) by fraction-free Bareiss
/// elimination.
pub fn det_int(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        return Int::one();
    }
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut prev = Int::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        for row in m.iter_mut().skip(k + 1) {
            row[k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Solves the square rational system `a x = b`. Returns `None` when the
/// matrix is singular.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot);
        let p = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &p;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            for j in k..=n {
                m[i][j] = &m[i][j] - &f * &m[k][j];
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Solves the integer system `a x = b` exactly, returning `None` when the
/// matrix is singular and an explicit flag for non-integral solutions.
pub fn solve_int(a: &[Vec<Int>], b: &[Int]) -> Option<Vec<Rational>> {
    let ar: Vec<Vec<Rational>> = a
        .iter()
        .map(|row| row.iter().map(rat_int).collect())
        .collect();
    let br: Vec<Rational> = b.iter().map(rat_int).collect();
    solve_rational(&ar, &br)
}

/// For a rank-deficient stack of integer rows, a nonzero rational direction
/// in the common kernel; `None` when the rows have full column rank.
pub fn kernel_direction(rows: &[Vec<Int>], dim: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(rat_int).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let pivot = (row..m.len()).find(|&i| !m[i][col].is_zero());
        let Some(pivot) = pivot else { continue };
        m.swap(row, pivot);
        let p = m[row][col].clone();
        for j in col..dim {
            m[row][j] = &m[row][j] / &p;
        }
        for i in 0..m.len() {
            if i == row || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..dim {
                m[i][j] = &m[i][j] - &f * &m[row][j];
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free_col = (0..dim).find(|c| !pivot_cols.contains(c))?;
    // back-substitute with the free variable set to 1
    let mut dir = vec![Rational::zero(); dim];
    dir[free_col] = Rational::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        dir[pc] = -m[r][free_col].clone();
    }
    Some(dir)
}

/// Signed magnitude check helper: true iff `v` is `+1` or `-1`.
pub fn is_unit(v: &Int) -> bool {
    v.abs().is_one()
}
