//! A small dense exact simplex over the rationals.
//!
//! Solves max c·x subject to A x = b, x ≥ 0. Two phases, Bland's rule for
//! both the entering and the leaving variable, so the run terminates and is
//! fully deterministic. Problem sizes here are tiny (cone feasibility and
//! chamber witnesses), so no effort is spent on sparsity or factorization.

use super::{Rat, RatVector};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, x: RatVector },
}

struct Tableau {
    rows: Vec<RatVector>, // each of length nvars + 1, last entry = rhs
    basis: Vec<usize>,
    nvars: usize,
}

impl Tableau {
    fn reduced_costs(&self, c: &[Rat]) -> RatVector {
        let mut red = c.to_vec();
        for (i, &bi) in self.basis.iter().enumerate() {
            if c[bi].is_zero() {
                continue;
            }
            for j in 0..self.nvars {
                let sub = &c[bi] * &self.rows[i][j];
                red[j] = &red[j] - &sub;
            }
        }
        red
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for j in 0..=self.nvars {
                let sub = &f * &self.rows[row][j];
                self.rows[i][j] = &self.rows[i][j] - &sub;
            }
        }
        self.basis[row] = col;
    }

    /// Bland-rule simplex on the current basis; returns false on unbounded.
    fn run(&mut self, c: &[Rat]) -> bool {
        loop {
            let red = self.reduced_costs(c);
            let Some(enter) = (0..self.nvars).find(|&j| red[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][enter].is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][self.nvars] / &self.rows[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return false;
            };
            self.pivot(row, enter);
        }
    }

    fn solution(&self, n: usize) -> RatVector {
        let mut x = vec![Rat::zero(); n];
        for (i, &bi) in self.basis.iter().enumerate() {
            if bi < n {
                x[bi] = self.rows[i][self.nvars].clone();
            }
        }
        x
    }
}

/// max c·x  s.t.  a·x = b, x ≥ 0.
pub fn simplex_max(c: &[Rat], a: &[RatVector], b: &[Rat]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m);
    for row in a {
        assert_eq!(row.len(), n);
    }

    // phase 1 with artificial variables n..n+m
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let negate = b[i].is_negative();
        let mut row: RatVector = Vec::with_capacity(n + m + 1);
        for j in 0..n {
            row.push(if negate { -&a[i][j] } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if negate { -&b[i] } else { b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        nvars: n + m,
    };
    let mut c1 = vec![Rat::zero(); n + m];
    for item in c1.iter_mut().skip(n) {
        *item = -Rat::one();
    }
    let ok = t.run(&c1);
    debug_assert!(ok, "phase 1 is bounded by construction");
    let phase1_value: Rat = t
        .basis
        .iter()
        .enumerate()
        .map(|(i, &bi)| if bi >= n { t.rows[i][t.nvars].clone() } else { Rat::zero() })
        .sum();
    if !phase1_value.is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive artificials out of the basis; rows that cannot pivot are redundant
    let mut drop_rows = Vec::new();
    for i in 0..t.rows.len() {
        if t.basis[i] < n {
            continue;
        }
        match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
            Some(j) => t.pivot(i, j),
            None => drop_rows.push(i),
        }
    }
    for &i in drop_rows.iter().rev() {
        t.rows.remove(i);
        t.basis.remove(i);
    }

    // phase 2 on the original columns
    let rows2: Vec<RatVector> = t
        .rows
        .iter()
        .map(|row| {
            let mut r: RatVector = row[..n].to_vec();
            r.push(row[n + m].clone());
            r
        })
        .collect();
    let mut t2 = Tableau {
        rows: rows2,
        basis: t.basis.clone(),
        nvars: n,
    };
    if !t2.run(c) {
        return LpOutcome::Unbounded;
    }
    let x = t2.solution(n);
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    LpOutcome::Optimal { value, x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat_int, rat_vec};

    #[test]
    fn feasible_system() {
        // x1 + x2 = 2, maximize x1
        let out = simplex_max(&rat_vec(&[1, 0]), &[rat_vec(&[1, 1])], &rat_vec(&[2]));
        match out {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rat_int(2));
                assert_eq!(x, rat_vec(&[2, 0]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_system() {
        // x1 = -1 with x1 >= 0
        let out = simplex_max(&rat_vec(&[0]), &[rat_vec(&[1])], &rat_vec(&[-1]));
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_objective() {
        // x1 - x2 = 0, maximize x1
        let out = simplex_max(&rat_vec(&[1, 0]), &[rat_vec(&[1, -1])], &rat_vec(&[0]));
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let out = simplex_max(
            &rat_vec(&[1, 1]),
            &[rat_vec(&[1, 1]), rat_vec(&[2, 2])],
            &rat_vec(&[3, 6]),
        );
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn no_constraints() {
        let out = simplex_max(&rat_vec(&[-1, -2]), &[], &[]);
        match out {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rat_int(0));
                assert_eq!(x, rat_vec(&[0, 0]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(simplex_max(&rat_vec(&[1]), &[], &[]), LpOutcome::Unbounded);
    }
}
