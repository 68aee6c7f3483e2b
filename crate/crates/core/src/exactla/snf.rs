//! Smith and Hermite normal forms over the integers, and the lattice
//! computations built on them (kernels, saturations).

use super::{pivot_columns, Int, IntMatrix};
use crate::error::Error;
use num::{Integer, One, Signed, Zero};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... ,
/// diagonal entries nonnegative.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        let k = self.d.rows().min(self.d.cols());
        (0..k).filter(|&i| !self.d.at(i, i).is_zero()).count()
    }
}

/// Pivot choice: smallest absolute value among nonzero entries of the
/// trailing block, ties broken by lowest (row, col). Fixed for determinism.
fn pivot_position(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for r in t..m.rows() {
        for c in t..m.cols() {
            let v = m.at(r, c);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((ba, _, _)) if *ba <= a => {}
                _ => best = Some((a, r, c)),
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows && t < cols {
        let Some((pr, pc)) = pivot_position(&d, t) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            // reduce column t below the pivot
            let mut clean = true;
            for r in t + 1..rows {
                if !d.at(r, t).is_zero() {
                    let q = d.at(r, t) / d.at(t, t); // truncated division
                    if !q.is_zero() {
                        d.add_row_mul(r, t, &-q.clone());
                        u.add_row_mul(r, t, &-q);
                    }
                    if !d.at(r, t).is_zero() {
                        clean = false;
                    }
                }
            }
            // reduce row t right of the pivot
            for c in t + 1..cols {
                if !d.at(t, c).is_zero() {
                    let q = d.at(t, c) / d.at(t, t);
                    if !q.is_zero() {
                        d.add_col_mul(c, t, &-q.clone());
                        v.add_col_mul(c, t, &-q);
                    }
                    if !d.at(t, c).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // pivot divides its whole row and column; check the trailing
                // block for the divisibility chain
                let mut fixed = true;
                'block: for r in t + 1..rows {
                    for c in t + 1..cols {
                        if !d.at(r, c).mod_floor(d.at(t, t)).is_zero() {
                            d.add_row_mul(t, r, &Int::one());
                            u.add_row_mul(t, r, &Int::one());
                            fixed = false;
                            break 'block;
                        }
                    }
                }
                if fixed {
                    break;
                }
            } else {
                // remainders became new smaller entries; re-center the pivot
                if let Some((pr, pc)) = pivot_position(&d, t) {
                    d.swap_rows(t, pr);
                    u.swap_rows(t, pr);
                    d.swap_cols(t, pc);
                    v.swap_cols(t, pc);
                }
            }
        }
        t += 1;
    }

    for i in 0..rows.min(cols) {
        if d.at(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    SnfDecomposition { u, d, v }
}

/// Integer determinant by fraction-free Bareiss elimination.
pub fn determinant(a: &IntMatrix) -> Int {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Int::one();
    }
    let mut m = a.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                return Int::zero();
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                *m.at_mut(i, j) = &num / &prev;
            }
            *m.at_mut(i, k) = Int::zero();
        }
        prev = m.at(k, k).clone();
    }
    sign * m.at(n - 1, n - 1).clone()
}

/// Row Hermite form with pivots chosen along the natural column order.
/// Pivots positive, entries above a pivot reduced into [0, pivot).
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let order: Vec<usize> = (0..m.cols()).collect();
    hermite_normal_form_ordered(m, &order)
}

/// Row Hermite form with pivot columns searched in the given order.
///
/// The result h satisfies h = u * m for a unimodular u (not returned). The
/// column order parameter makes the form canonical with respect to a custom
/// column priority, which the quotient layer uses to reproduce free-variable
/// kernel bases.
pub fn hermite_normal_form_ordered(m: &IntMatrix, order: &[usize]) -> IntMatrix {
    assert_eq!(order.len(), m.cols());
    let mut h = m.clone();
    let rows = h.rows();
    let mut r = 0;
    for &c in order {
        if r == rows {
            break;
        }
        // gcd-reduce column c among rows >= r until a single nonzero remains
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| !h.at(i, c).is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                h.swap_rows(r, nz[0]);
                break;
            }
            let &imin = nz
                .iter()
                .min_by(|&&a, &&b| {
                    h.at(a, c)
                        .abs()
                        .cmp(&h.at(b, c).abs())
                        .then(a.cmp(&b))
                })
                .unwrap();
            for &i in &nz {
                if i == imin {
                    continue;
                }
                let q = h.at(i, c) / h.at(imin, c);
                h.add_row_mul(i, imin, &-q);
            }
        }
        if h.at(r, c).is_zero() {
            continue;
        }
        if h.at(r, c).is_negative() {
            h.negate_row(r);
        }
        let p = h.at(r, c).clone();
        for i in 0..r {
            let q = h.at(i, c).div_floor(&p);
            if !q.is_zero() {
                h.add_row_mul(i, r, &-q);
            }
        }
        r += 1;
    }
    h
}

/// Inverse of a unimodular integer matrix.
fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols());
    // exact rational elimination; entries of the inverse are integers
    use super::Rat;
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|r| super::int_to_rat_vec(m.row(r)))
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        super::rat_int(1)
                    } else {
                        super::rat_int(0)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("unimodular matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for x in inv[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let sub = &f * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
                let sub = &f * &inv[col][c];
                inv[r][c] = &inv[r][c] - &sub;
            }
        }
    }
    IntMatrix::from_rows(
        inv.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        assert!(x.is_integer(), "inverse of a unimodular matrix is integral");
                        x.to_integer()
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Saturated basis of ker(A) ∩ Z^cols as rows of a matrix, via the Smith
/// decomposition: the kernel is spanned by the columns of V past the rank.
/// Rows come back Hermite-reduced in the natural column order.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let d = a.cols();
    if r == d {
        return IntMatrix::zero(0, d);
    }
    let rows: Vec<Vec<Int>> = (r..d).map(|j| snf.v.col(j)).collect();
    hermite_normal_form(&IntMatrix::from_rows(rows))
}

/// Lattice kernel of a fan map: A is n×d of rank n, the result is a
/// saturated basis of ker(A) ∩ Z^d with d−n rows.
///
/// Canonical form: Hermite reduction with the non-pivot (free) columns of A
/// taking priority over the pivot columns. On a regular fan this reproduces
/// the free-variable basis, i.e. the basis whose restriction to the free
/// columns is the identity.
pub fn kernel_basis(a: &IntMatrix) -> Result<IntMatrix, Error> {
    let pivots = pivot_columns(&a.to_rat_rows(), a.cols());
    if pivots.len() < a.rows() {
        return Err(Error::RankDeficientFan {
            rank: pivots.len(),
            n: a.rows(),
        });
    }
    let raw = integer_kernel(a);
    if raw.rows() == 0 {
        return Ok(raw);
    }
    let mut order: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    order.extend(pivots.iter().copied());
    Ok(hermite_normal_form_ordered(&raw, &order))
}

/// Saturation of the lattice generated by the rows of `gens`: the smallest
/// saturated sublattice of Z^cols containing them, as Hermite-reduced rows.
pub fn saturation_basis(gens: &IntMatrix) -> IntMatrix {
    let d = gens.cols();
    if gens.rows() == 0 {
        return IntMatrix::zero(0, d);
    }
    let snf = smith_normal_form(gens);
    let r = snf.rank();
    if r == 0 {
        return IntMatrix::zero(0, d);
    }
    // gens = U^{-1} D V^{-1}; the rational row span is spanned over Z by the
    // first r rows of V^{-1}, which are saturated since V is unimodular.
    let vinv = unimodular_inverse(&snf.v);
    let rows: Vec<Vec<Int>> = (0..r).map(|i| vinv.row(i).to_vec()).collect();
    hermite_normal_form(&IntMatrix::from_rows(rows))
}

/// A surjection Z^d -> Z^(d−r) whose kernel is exactly the saturated lattice
/// spanned by the rows of `basis` (which must be saturated of full row rank).
/// Returned as a (d−r)×d matrix applied to column vectors; its value on e_i
/// is the i-th column.
pub fn cokernel_map(basis: &IntMatrix) -> IntMatrix {
    let d = basis.cols();
    let r = basis.rows();
    if r == 0 {
        return IntMatrix::identity(d);
    }
    let snf = smith_normal_form(basis);
    assert_eq!(snf.rank(), r, "cokernel_map needs a full-rank basis");
    for i in 0..r {
        assert!(
            snf.d.at(i, i).is_one(),
            "cokernel_map needs a saturated basis"
        );
    }
    // x ∈ lattice ⟺ the last d−r coordinates of x·V vanish, so the
    // projection is x ↦ (x·V)[r..], i.e. the matrix V[:, r..] transposed.
    let cols: Vec<usize> = (r..d).collect();
    snf.v.select_cols(&cols).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int_vec, IntMatrix};

    fn check_snf(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "U*A*V = D");
        assert!(determinant(&snf.u).abs().is_one(), "U unimodular");
        assert!(determinant(&snf.v).abs().is_one(), "V unimodular");
        let k = snf.d.rows().min(snf.d.cols());
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero(), "D diagonal");
                }
            }
        }
        for i in 0..k.saturating_sub(1) {
            let di = snf.d.at(i, i);
            let dj = snf.d.at(i + 1, i + 1);
            if di.is_zero() {
                assert!(dj.is_zero(), "zeros trail the chain");
            } else {
                assert!(dj.mod_floor(di).is_zero(), "d{} | d{}", i, i + 1);
            }
        }
    }

    #[test]
    fn snf_scalar() {
        let a = IntMatrix::from_i64_rows(&[&[2]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.d, IntMatrix::from_i64_rows(&[&[2]]));
        assert_eq!(snf.u, IntMatrix::identity(1));
        assert_eq!(snf.v, IntMatrix::identity(1));
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.d, IntMatrix::identity(3));
        check_snf(&a);
    }

    #[test]
    fn snf_row_fan() {
        // one-row fan map: invariant factor 1, padded with zeros
        let a = IntMatrix::from_i64_rows(&[&[-1, 1, 1]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.d, IntMatrix::from_i64_rows(&[&[1, 0, 0]]));
        check_snf(&a);
    }

    #[test]
    fn snf_divisibility_example() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith_normal_form(&a);
        check_snf(&a);
        assert_eq!(snf.d.at(0, 0), &super::Int::from(2));
        assert_eq!(snf.d.at(1, 1), &super::Int::from(2));
        assert_eq!(snf.d.at(2, 2), &super::Int::from(156));
    }

    #[test]
    fn kernel_of_segment_fan() {
        // rays (-1), (1), (1): kernel spanned by (1,1,0) and (1,0,1)
        let a = IntMatrix::from_i64_rows(&[&[-1, 1, 1]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(
            k,
            IntMatrix::from_rows(vec![int_vec(&[1, 1, 0]), int_vec(&[1, 0, 1])])
        );
        for r in 0..k.rows() {
            assert!(a.mul_int_vec(k.row(r)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kernel_of_quadrilateral_fan() {
        let a = IntMatrix::from_i64_rows(&[&[1, 0, -1, 0], &[0, 1, -1, -1]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(
            k,
            IntMatrix::from_rows(vec![int_vec(&[1, 1, 1, 0]), int_vec(&[0, 1, 0, 1])])
        );
    }

    #[test]
    fn kernel_trivial_when_square_invertible() {
        let a = IntMatrix::identity(2);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn kernel_rejects_rank_deficient() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            kernel_basis(&a),
            Err(Error::RankDeficientFan { rank: 1, n: 2 })
        ));
    }

    #[test]
    fn kernel_is_saturated() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1, 1], &[1, -1, 0]]);
        let k = kernel_basis(&a).unwrap();
        let snf = smith_normal_form(&k);
        for i in 0..k.rows() {
            assert!(snf.d.at(i, i).is_one(), "invariant factors all 1");
        }
        // free-variable convention: the free column (here column 2) carries
        // the positive pivot
        assert_eq!(k, IntMatrix::from_rows(vec![int_vec(&[-1, -1, 2])]));
    }

    #[test]
    fn saturation_of_scaled_lattice() {
        let gens = IntMatrix::from_i64_rows(&[&[2, 0, 4], &[0, 6, 0]]);
        let sat = saturation_basis(&gens);
        assert_eq!(
            sat,
            IntMatrix::from_rows(vec![int_vec(&[1, 0, 2]), int_vec(&[0, 1, 0])])
        );
    }

    #[test]
    fn cokernel_map_kills_exactly_the_lattice() {
        let basis = IntMatrix::from_i64_rows(&[&[1, 1]]);
        let pi = cokernel_map(&basis);
        assert_eq!(pi.rows(), 1);
        assert_eq!(pi.cols(), 2);
        assert!(pi.mul_int_vec(&int_vec(&[1, 1])).iter().all(|x| x.is_zero()));
        assert!(!pi.mul_int_vec(&int_vec(&[1, 0])).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn hermite_reduces_above_pivots() {
        let m = IntMatrix::from_i64_rows(&[&[2, 3, 1], &[4, 1, 2]]);
        let h = hermite_normal_form(&m);
        // pivots positive, entry above second pivot reduced into [0, pivot)
        assert!(h.at(0, 0) > &Int::zero());
        let p = h.at(1, 1).clone();
        assert!(h.at(0, 1) >= &Int::zero() && h.at(0, 1) < &p);
    }
}
