//! Quotient data of a fan map: the subtorus lattice, its weights, and fan
//! regularity.
//!
//! A fan map sends the standard lattice Z^d onto Z^n via primitive rays u_i.
//! Its kernel m ⊂ Z^d is the Lie lattice of the subtorus doing the quotient;
//! the weights a_i ∈ Z^m are the coordinates of the kernel basis, i.e. the
//! images of the coordinate functionals in m*.

use crate::error::Error;
use crate::exactla::{
    combinations, determinant, is_primitive, kernel_basis, Int, IntMatrix, IntVector,
};
use crate::Result;
use num::{One, Signed, Zero};

/// Primitive integer rays u_1..u_d in Z^n, spanning Q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanInput {
    n: usize,
    rays: Vec<IntVector>,
}

impl FanInput {
    /// Validates primitivity of every ray. Rays must span Q^n; that is
    /// checked when the quotient data is built (RankDeficientFan).
    pub fn new(n: usize, rays: Vec<IntVector>) -> Result<Self> {
        if rays.is_empty() {
            return Err(Error::Invalid("fan needs at least one ray".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: ray.len(),
                });
            }
            if n > 0 && !is_primitive(ray) {
                return Err(Error::NonPrimitiveGenerator { index: i });
            }
        }
        Ok(FanInput { n, rays })
    }

    pub fn from_i64(n: usize, rays: &[&[i64]]) -> Result<Self> {
        Self::new(
            n,
            rays.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.rays.len()
    }

    pub fn ray(&self, i: usize) -> &IntVector {
        &self.rays[i]
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// The fan map as an n×d matrix whose i-th column is u_i.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_cols(self.rays.clone(), self.n)
    }

    /// Flip the orientation of the rays where sign is -1.
    pub fn reoriented(&self, signs: &[i8]) -> Result<Self> {
        if signs.len() != self.d() {
            return Err(Error::LengthMismatch {
                expected: self.d(),
                got: signs.len(),
            });
        }
        let rays = self
            .rays
            .iter()
            .zip(signs)
            .map(|(r, &s)| {
                if s < 0 {
                    r.iter().map(|x| -x).collect()
                } else {
                    r.clone()
                }
            })
            .collect();
        Ok(FanInput { n: self.n, rays })
    }
}

/// Fan map together with a canonical saturated kernel basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    fan: FanInput,
    /// m_rank × d; row k is the kernel basis vector θ_k.
    kernel: IntMatrix,
}

impl QuotientData {
    pub fn fan(&self) -> &FanInput {
        &self.fan
    }

    pub fn kernel(&self) -> &IntMatrix {
        &self.kernel
    }

    pub fn n(&self) -> usize {
        self.fan.n()
    }

    pub fn d(&self) -> usize {
        self.fan.d()
    }

    pub fn m_rank(&self) -> usize {
        self.kernel.rows()
    }

    /// Weight a_i ∈ Z^m: the i-th coordinates of the kernel basis vectors.
    pub fn weight(&self, i: usize) -> IntVector {
        self.kernel.col(i)
    }

    pub fn weights(&self) -> Vec<IntVector> {
        (0..self.d()).map(|i| self.weight(i)).collect()
    }

    /// The m×d matrix whose i-th column is a_i (this is the kernel basis
    /// matrix itself).
    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.kernel
    }
}

/// Build quotient data from a fan: kernel via a saturated Smith-form basis,
/// Hermite-canonicalized with free columns first so the basis (and hence
/// the weights) is reproducible and matches the free-variable convention.
pub fn build_quotient(fan: FanInput) -> Result<QuotientData> {
    let kernel = kernel_basis(&fan.matrix())?;
    let q = QuotientData { fan, kernel };
    debug_assert!({
        let a = q.fan.matrix();
        (0..q.m_rank()).all(|k| a.mul_int_vec(q.kernel.row(k)).iter().all(|x| x.is_zero()))
    });
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityFlags {
    pub regular_fan: bool,
    /// Index subsets of linearly independent rays with |det| ≥ 2.
    pub offending: Vec<Vec<usize>>,
}

/// Exhaustive determinant check: the fan is regular iff every n linearly
/// independent rays form a Z-basis of Z^n.
pub fn check_regular_fan(fan: &FanInput) -> RegularityFlags {
    let n = fan.n();
    let mut offending = Vec::new();
    for subset in combinations(fan.d(), n) {
        let m = IntMatrix::from_rows(subset.iter().map(|&i| fan.ray(i).clone()).collect());
        let det = determinant(&m);
        if !det.is_zero() && !det.abs().is_one() {
            offending.push(subset);
        }
    }
    RegularityFlags {
        regular_fan: offending.is_empty(),
        offending,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int_vec;

    pub(crate) fn segment_fan() -> FanInput {
        FanInput::from_i64(1, &[&[-1], &[1], &[1]]).unwrap()
    }

    pub(crate) fn quadrilateral_fan() -> FanInput {
        FanInput::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1], &[0, -1]]).unwrap()
    }

    #[test]
    fn segment_fan_weights() {
        let q = build_quotient(segment_fan()).unwrap();
        assert_eq!(q.m_rank(), 2);
        assert_eq!(
            q.kernel().row_vecs(),
            vec![int_vec(&[1, 1, 0]), int_vec(&[1, 0, 1])]
        );
        assert_eq!(
            q.weights(),
            vec![int_vec(&[1, 1]), int_vec(&[1, 0]), int_vec(&[0, 1])]
        );
    }

    #[test]
    fn quadrilateral_fan_weights() {
        let q = build_quotient(quadrilateral_fan()).unwrap();
        // a1 = a3 = θ1*, a2 = θ1* + θ2*, a4 = θ2*
        assert_eq!(
            q.weights(),
            vec![
                int_vec(&[1, 0]),
                int_vec(&[1, 1]),
                int_vec(&[1, 0]),
                int_vec(&[0, 1])
            ]
        );
    }

    #[test]
    fn trivial_subtorus() {
        let fan = FanInput::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        let q = build_quotient(fan).unwrap();
        assert_eq!(q.m_rank(), 0);
        assert!(q.weights().iter().all(|w| w.is_empty()));
    }

    #[test]
    fn primitivity_enforced() {
        assert!(matches!(
            FanInput::from_i64(2, &[&[1, 0], &[0, 2]]),
            Err(Error::NonPrimitiveGenerator { index: 1 })
        ));
    }

    #[test]
    fn rank_deficiency_rejected() {
        let fan = FanInput::from_i64(2, &[&[1, 0], &[-1, 0], &[1, 0]]).unwrap();
        assert!(matches!(
            build_quotient(fan),
            Err(Error::RankDeficientFan { rank: 1, n: 2 })
        ));
    }

    #[test]
    fn regularity_of_paper_fans() {
        assert!(check_regular_fan(&segment_fan()).regular_fan);
        assert!(check_regular_fan(&quadrilateral_fan()).regular_fan);
    }

    #[test]
    fn irregular_pair_detected() {
        let fan = FanInput::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap();
        let flags = check_regular_fan(&fan);
        assert!(!flags.regular_fan);
        assert_eq!(flags.offending, vec![vec![0, 1]]);
    }

    #[test]
    fn reorientation_flips_kernel_coordinate() {
        // flipping ray i maps the kernel lattice by negating coordinate i
        let q = build_quotient(quadrilateral_fan()).unwrap();
        for i in 0..q.d() {
            let mut signs = vec![1i8; q.d()];
            signs[i] = -1;
            let fan2 = q.fan().reoriented(&signs).unwrap();
            let q2 = build_quotient(fan2).unwrap();
            // compare lattices: negate column i of one basis and check the
            // Hermite forms agree
            let mut flipped = q.kernel().clone();
            flipped.negate_col(i);
            let h1 = crate::exactla::hermite_normal_form(&flipped);
            let h2 = crate::exactla::hermite_normal_form(q2.kernel());
            assert_eq!(h1, h2, "flip of ray {i} must flip kernel coordinate {i}");
        }
    }

    #[test]
    fn reoriented_quadrilateral_weights_match_lines() {
        // flipping u2 sends a2 = θ1*+θ2* to −θ1*−θ2* and fixes the others
        let q = build_quotient(quadrilateral_fan()).unwrap();
        let fan2 = q.fan().reoriented(&[1, -1, 1, 1]).unwrap();
        let q2 = build_quotient(fan2).unwrap();
        assert_eq!(
            q2.weights(),
            vec![
                int_vec(&[1, 0]),
                int_vec(&[-1, -1]),
                int_vec(&[1, 0]),
                int_vec(&[0, 1])
            ]
        );
        let lines = |ws: &[crate::exactla::IntVector]| {
            let mut ls: Vec<_> = ws
                .iter()
                .map(|w| crate::exactla::canonical_sign(w))
                .collect();
            ls.sort();
            ls
        };
        assert_eq!(lines(&q.weights()), lines(&q2.weights()));
    }
}
