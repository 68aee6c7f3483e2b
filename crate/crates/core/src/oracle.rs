//! Independent reference procedures used by the test suites.
//!
//! Nothing in the production code paths calls into this module; it exists so
//! that the cone-membership simplex and the polytope vertex enumerator can be
//! cross-checked against implementations that share no code with them.

use crate::exactla::{Rat, RatVector};
use num::{Signed, Zero};

/// A linear constraint Σ coeff_i·x_i (≤ | <) rhs.
#[derive(Debug, Clone)]
struct FmRow {
    coeffs: RatVector,
    rhs: Rat,
    strict: bool,
}

/// Fourier–Motzkin feasibility for a system of ≤ / < constraints.
fn fm_feasible(mut rows: Vec<FmRow>, mut nvars: usize) -> bool {
    while nvars > 0 {
        let var = nvars - 1;
        let mut uppers = Vec::new();
        let mut lowers = Vec::new();
        let mut rest = Vec::new();
        for row in rows {
            let c = row.coeffs[var].clone();
            if c.is_zero() {
                rest.push(row);
            } else if c.is_positive() {
                uppers.push(row);
            } else {
                lowers.push(row);
            }
        }
        for up in &uppers {
            for lo in &lowers {
                // eliminate var: up scaled by |lo_c|, lo scaled by up_c
                let a = up.coeffs[var].clone();
                let b = -lo.coeffs[var].clone();
                let coeffs: RatVector = (0..var)
                    .map(|j| &b * &up.coeffs[j] + &a * &lo.coeffs[j])
                    .collect();
                let rhs = &b * &up.rhs + &a * &lo.rhs;
                rest.push(FmRow {
                    coeffs,
                    rhs,
                    strict: up.strict || lo.strict,
                });
            }
        }
        for row in rest.iter_mut() {
            row.coeffs.truncate(var);
        }
        rows = rest;
        nvars = var;
    }
    rows.iter().all(|row| {
        if row.strict {
            row.rhs.is_positive()
        } else {
            !row.rhs.is_negative()
        }
    })
}

/// Brute-force cone membership: is `point` in the span of `gens` with
/// nonnegative (resp. strictly positive) coefficients? Decided by
/// Fourier–Motzkin elimination over the coefficient variables.
pub fn fm_cone_feasible(point: &[Rat], gens: &[RatVector], strict: bool) -> bool {
    let k = gens.len();
    let dim = point.len();
    let mut rows = Vec::new();
    // sign constraints: -c_i <= 0 (or < 0 in strict mode)
    for i in 0..k {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs[i] = -Rat::from_integer(1.into());
        rows.push(FmRow {
            coeffs,
            rhs: Rat::zero(),
            strict,
        });
    }
    // equalities G c = p as two inequalities each
    for r in 0..dim {
        let coeffs: RatVector = gens.iter().map(|g| g[r].clone()).collect();
        rows.push(FmRow {
            coeffs: coeffs.clone(),
            rhs: point[r].clone(),
            strict: false,
        });
        rows.push(FmRow {
            coeffs: coeffs.iter().map(|c| -c).collect(),
            rhs: -&point[r],
            strict: false,
        });
    }
    if k == 0 {
        return point.iter().all(|x| x.is_zero());
    }
    fm_feasible(rows, k)
}

/// Naive vertex enumeration for low dimension: solve every n-subset of tight
/// constraints with a hand-rolled Cramer solver and keep the feasible
/// solutions. Constraints are ⟨normal, x⟩ + offset ≥ 0. Supports n ≤ 2.
pub fn brute_force_vertices(normals: &[RatVector], offsets: &[Rat]) -> Vec<RatVector> {
    let d = normals.len();
    assert_eq!(offsets.len(), d);
    let n = normals.first().map_or(0, |v| v.len());
    assert!(n <= 2, "oracle supports dimension <= 2");
    let mut found: Vec<RatVector> = Vec::new();
    let feasible = |x: &RatVector| {
        (0..d).all(|i| {
            let mut acc = offsets[i].clone();
            for (a, b) in normals[i].iter().zip(x) {
                acc += a * b;
            }
            !acc.is_negative()
        })
    };
    match n {
        0 => {
            if feasible(&Vec::new()) {
                found.push(Vec::new());
            }
        }
        1 => {
            for i in 0..d {
                if normals[i][0].is_zero() {
                    continue;
                }
                let x = vec![-&offsets[i] / &normals[i][0]];
                if feasible(&x) {
                    found.push(x);
                }
            }
        }
        2 => {
            for i in 0..d {
                for j in i + 1..d {
                    let (a, b) = (&normals[i][0], &normals[i][1]);
                    let (c, e) = (&normals[j][0], &normals[j][1]);
                    let det = a * e - b * c;
                    if det.is_zero() {
                        continue;
                    }
                    // a x + b y = -o_i ; c x + e y = -o_j
                    let r1 = -&offsets[i];
                    let r2 = -&offsets[j];
                    let x = (&r1 * e - b * &r2) / &det;
                    let y = (a * &r2 - &r1 * c) / &det;
                    let v = vec![x, y];
                    if feasible(&v) {
                        found.push(v);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    found.sort();
    found.dedup();
    found
}
