//! Exact cone membership with certificates.
//!
//! A query point lies in the nonnegative (resp. strictly positive) span of a
//! generator list iff the corresponding feasibility problem has a solution;
//! the returned certificate re-multiplies to the point exactly and is the
//! witness the stability layer stores.

use super::{dot_rat, simplex_max, LpOutcome, Rat, RatVector};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeMode {
    /// coefficients ≥ 0
    NonNegative,
    /// every listed generator carries a coefficient > 0
    StrictlyPositive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCertificate {
    pub coefficients: RatVector,
    pub mode: ConeMode,
}

impl ConeCertificate {
    /// Exact re-multiplication check: Σ c_i·g_i = p and the mode's sign
    /// constraint holds for every coefficient.
    pub fn verifies(&self, point: &[Rat], gens: &[RatVector]) -> bool {
        if self.coefficients.len() != gens.len() {
            return false;
        }
        let sign_ok = match self.mode {
            ConeMode::NonNegative => self.coefficients.iter().all(|c| !c.is_negative()),
            ConeMode::StrictlyPositive => self.coefficients.iter().all(|c| c.is_positive()),
        };
        if !sign_ok {
            return false;
        }
        for (k, target) in point.iter().enumerate() {
            let mut acc = Rat::zero();
            for (c, g) in self.coefficients.iter().zip(gens) {
                acc += c * &g[k];
            }
            if &acc != target {
                return false;
            }
        }
        true
    }
}

/// Certificate that `point` lies in the span of `gens` under `mode`, or None.
///
/// Strict positivity is decided by maximizing a uniform slack t with
/// coefficients c_i = t + s_i, s_i ≥ 0, capped at t ≤ 1; the threshold is
/// exact positivity of the optimum, no epsilon.
pub fn cone_membership(
    point: &[Rat],
    gens: &[RatVector],
    mode: ConeMode,
) -> Option<ConeCertificate> {
    let dim = point.len();
    for g in gens {
        assert_eq!(g.len(), dim, "generator dimension mismatch");
    }
    let k = gens.len();
    match mode {
        ConeMode::NonNegative => {
            // feasibility of G c = p, c >= 0
            let c_obj = vec![Rat::zero(); k];
            let rows: Vec<RatVector> = (0..dim)
                .map(|r| gens.iter().map(|g| g[r].clone()).collect())
                .collect();
            match simplex_max(&c_obj, &rows, point) {
                LpOutcome::Optimal { x, .. } => {
                    let cert = ConeCertificate {
                        coefficients: x,
                        mode,
                    };
                    debug_assert!(cert.verifies(point, gens));
                    Some(cert)
                }
                LpOutcome::Infeasible => None,
                LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
            }
        }
        ConeMode::StrictlyPositive => {
            if k == 0 {
                // empty generator list: the strict condition is vacuous and
                // only the origin is representable
                return if point.iter().all(|x| x.is_zero()) {
                    Some(ConeCertificate {
                        coefficients: Vec::new(),
                        mode,
                    })
                } else {
                    None
                };
            }
            // variables: t, s_1..s_k, cap slack w; maximize t subject to
            // t·Σg + G s = p and t + w = 1
            let nv = 1 + k + 1;
            let mut obj = vec![Rat::zero(); nv];
            obj[0] = Rat::one();
            let mut rows: Vec<RatVector> = Vec::with_capacity(dim + 1);
            let mut rhs: RatVector = Vec::with_capacity(dim + 1);
            for r in 0..dim {
                let mut row = vec![Rat::zero(); nv];
                row[0] = gens.iter().map(|g| g[r].clone()).sum();
                for (j, g) in gens.iter().enumerate() {
                    row[1 + j] = g[r].clone();
                }
                rows.push(row);
                rhs.push(point[r].clone());
            }
            let mut cap = vec![Rat::zero(); nv];
            cap[0] = Rat::one();
            cap[nv - 1] = Rat::one();
            rows.push(cap);
            rhs.push(Rat::one());
            match simplex_max(&obj, &rows, &rhs) {
                LpOutcome::Optimal { value, x } if value.is_positive() => {
                    let t = x[0].clone();
                    let coefficients: RatVector =
                        (0..k).map(|j| &t + &x[1 + j]).collect();
                    let cert = ConeCertificate { coefficients, mode };
                    debug_assert!(cert.verifies(point, gens));
                    Some(cert)
                }
                LpOutcome::Optimal { .. } | LpOutcome::Infeasible => None,
                LpOutcome::Unbounded => unreachable!("t is capped at 1"),
            }
        }
    }
}

/// Convenience: sign of ⟨point, normal⟩ as -1/0/+1.
pub fn pairing_sign(point: &[Rat], normal: &[Rat]) -> i8 {
    let v = dot_rat(point, normal);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat_vec;

    fn gens4() -> Vec<RatVector> {
        vec![
            rat_vec(&[1, 0]),
            rat_vec(&[1, 1]),
            rat_vec(&[1, 0]),
            rat_vec(&[0, 1]),
        ]
    }

    #[test]
    fn nonneg_membership_on_axis() {
        let p = rat_vec(&[1, 0]);
        let cert = cone_membership(&p, &gens4(), ConeMode::NonNegative).unwrap();
        assert!(cert.verifies(&p, &gens4()));
    }

    #[test]
    fn origin_is_always_nonneg_member() {
        let p = rat_vec(&[0, 0]);
        let cert = cone_membership(&p, &gens4(), ConeMode::NonNegative).unwrap();
        assert!(cert.coefficients.iter().all(|c| !c.is_negative()));
        assert!(cert.verifies(&p, &gens4()));

        let cert = cone_membership(&p, &[], ConeMode::NonNegative).unwrap();
        assert!(cert.coefficients.is_empty());
    }

    #[test]
    fn strict_fails_on_axis_point() {
        // any positive coefficient on (1,1) or (0,1) forces a positive
        // second coordinate
        let p = rat_vec(&[1, 0]);
        assert!(cone_membership(&p, &gens4(), ConeMode::StrictlyPositive).is_none());
    }

    #[test]
    fn strict_succeeds_inside() {
        let p = rat_vec(&[3, 2]);
        let cert = cone_membership(&p, &gens4(), ConeMode::StrictlyPositive).unwrap();
        assert!(cert.verifies(&p, &gens4()));
        assert!(cert.coefficients.iter().all(|c| c.is_positive()));
    }

    #[test]
    fn outside_cone_rejected() {
        let p = rat_vec(&[-1, 0]);
        assert!(cone_membership(&p, &gens4(), ConeMode::NonNegative).is_none());
    }
}
