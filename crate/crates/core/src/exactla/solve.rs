//! Rational Gaussian elimination: rank, pivot structure and particular
//! solutions of linear systems. Pivots are always the first nonzero entry
//! scanning top-down in the leftmost unfinished column, so every output is
//! deterministic.

use super::{IntMatrix, Rat, RatVector};
use num::Zero;

/// Row echelon reduction in place; returns the pivot (row, col) pairs.
fn echelon(rows: &mut [RatVector], cols: usize) -> Vec<(usize, usize)> {
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
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..rows[i].len() {
                let sub = &f * &rows[r][j];
                rows[i][j] = &rows[i][j] - &sub;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

/// Columns in which the leftmost-pivot elimination places pivots.
pub fn pivot_columns(rows: &[RatVector], cols: usize) -> Vec<usize> {
    let mut work = rows.to_vec();
    echelon(&mut work, cols).into_iter().map(|(_, c)| c).collect()
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[RatVector], cols: usize) -> usize {
    pivot_columns(rows, cols).len()
}

/// One exact solution of A·x = b, or None if the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic and has
/// zeros in all non-pivot positions.
pub fn solve_particular(a: &IntMatrix, b: &[Rat]) -> Option<RatVector> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    solve_particular_rat(&a.to_rat_rows(), a.cols(), b)
}

/// Same as [`solve_particular`] for a rational coefficient matrix.
pub fn solve_particular_rat(rows: &[RatVector], cols: usize, b: &[Rat]) -> Option<RatVector> {
    assert_eq!(rows.len(), b.len());
    let mut aug: Vec<RatVector> = rows
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug, cols);
    // inconsistent row: all coefficient entries zero but rhs nonzero
    for row in &aug {
        if row[..cols].iter().all(|x| x.is_zero()) && !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, c) in pivots {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat_int, rat_vec, IntMatrix};

    #[test]
    fn identity_solve() {
        let a = IntMatrix::identity(3);
        let b = rat_vec(&[5, -2, 7]);
        assert_eq!(solve_particular(&a, &b), Some(b));
    }

    #[test]
    fn underdetermined_picks_pivot_solution() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1]]);
        let b = rat_vec(&[1]);
        let x = solve_particular(&a, &b).unwrap();
        assert_eq!(x, rat_vec(&[1, 0]));
        assert_eq!(a.mul_rat_vec(&x), b);
    }

    #[test]
    fn inconsistent_detected() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        let b = rat_vec(&[1, 3]);
        assert_eq!(solve_particular(&a, &b), None);
    }

    #[test]
    fn weight_matrix_lift() {
        // columns are the quadrilateral-fan weights (1,0),(1,1),(1,0),(0,1)
        let a = IntMatrix::from_i64_rows(&[&[1, 1, 1, 0], &[0, 1, 0, 1]]);
        let b = rat_vec(&[3, 2]);
        let x = solve_particular(&a, &b).unwrap();
        assert_eq!(a.mul_rat_vec(&x), b);
        // (1,1,1,1) is another valid witness
        assert_eq!(a.mul_rat_vec(&rat_vec(&[1, 1, 1, 1])), b);
        // free positions are zero
        assert_eq!(x[2], rat_int(0));
        assert_eq!(x[3], rat_int(0));
    }

    #[test]
    fn rank_and_pivots() {
        let rows = vec![rat_vec(&[0, 2, 1]), rat_vec(&[0, 4, 2])];
        assert_eq!(rank(&rows, 3), 1);
        assert_eq!(pivot_columns(&rows, 3), vec![1]);
    }
}
