//! Exact integer and rational linear algebra.
//!
//! Everything in this module is arbitrary precision: `Int` is a big integer,
//! `Rat` a reduced big rational (positive denominator, canonical by
//! construction). There is no floating point anywhere in the crate; sign
//! decisions in the chamber layer are only sound with exact arithmetic.

mod cone;
mod lp;
mod snf;
mod solve;

pub use cone::{cone_membership, ConeCertificate, ConeMode};
pub use lp::{simplex_max, LpOutcome};
pub use snf::{
    cokernel_map, determinant, hermite_normal_form, hermite_normal_form_ordered, integer_kernel,
    kernel_basis, saturation_basis, smith_normal_form, SnfDecomposition,
};
pub use solve::{pivot_columns, rank, solve_particular, solve_particular_rat};

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Rational vector; entries are canonical reduced rationals.
pub type RatVector = Vec<Rat>;

/// Integer vector in some lattice `Z^k`.
pub type IntVector = Vec<Int>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn int_vec(v: &[i64]) -> IntVector {
    v.iter().map(|&x| int(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> RatVector {
    v.iter().map(|&x| rat_int(x)).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// gcd of a slice, nonnegative; 0 for the empty slice or all zeros.
pub fn gcd_all(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        g = num::Integer::gcd(&g, x);
    }
    g
}

pub fn is_primitive(v: &[Int]) -> bool {
    gcd_all(v).is_one()
}

/// Divide an integer vector by the gcd of its entries, keeping the direction.
/// Zero vectors are returned unchanged.
pub fn make_primitive(v: &[Int]) -> IntVector {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Scale a rational vector to a primitive integer vector with the same
/// direction. The input must be nonzero.
pub fn primitive_direction(v: &[Rat]) -> IntVector {
    let mut lcm = Int::one();
    for x in v {
        lcm = num::Integer::lcm(&lcm, x.denom());
    }
    let ints: IntVector = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    make_primitive(&ints)
}

/// Canonical sign: first nonzero coordinate positive. Zero vectors unchanged.
pub fn canonical_sign(v: &[Int]) -> IntVector {
    for x in v {
        if x.is_positive() {
            return v.to_vec();
        }
        if x.is_negative() {
            return v.iter().map(|y| -y).collect();
        }
    }
    v.to_vec()
}

pub fn int_to_rat_vec(v: &[Int]) -> RatVector {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Dense integer matrix, row-major. Entry magnitudes are unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| int_vec(r)).collect())
    }

    /// A matrix with the given columns.
    pub fn from_cols(cols: Vec<Vec<Int>>, rows: usize) -> Self {
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows), "ragged columns");
        let mut m = Self::zero(rows, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<IntVector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> IntVector {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn mul_int_vec(&self, v: &[Int]) -> IntVector {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| dot_int(self.row(r), v)).collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> RatVector {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| dot_int_rat(self.row(r), v)).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let ia = a * self.cols + c;
            let ib = b * self.cols + c;
            self.data.swap(ia, ib);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let ia = r * self.cols + a;
            let ib = r * self.cols + b;
            self.data.swap(ia, ib);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_mul(&mut self, dst: usize, src: usize, k: &Int) {
        for c in 0..self.cols {
            let v = self.at(src, c) * k;
            *self.at_mut(dst, c) += v;
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_mul(&mut self, dst: usize, src: usize, k: &Int) {
        for r in 0..self.rows {
            let v = self.at(r, src) * k;
            *self.at_mut(r, dst) += v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Select a subset of rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// Select a subset of columns, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rows, idx.len());
        for r in 0..self.rows {
            for (jc, &c) in idx.iter().enumerate() {
                *m.at_mut(r, jc) = self.at(r, c).clone();
            }
        }
        m
    }

    pub fn to_rat_rows(&self) -> Vec<RatVector> {
        (0..self.rows).map(|r| int_to_rat_vec(self.row(r))).collect()
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// All k-element subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_lex() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn primitive_direction_clears_denominators() {
        let v = vec![rat(1, 2), rat(-1, 3)];
        assert_eq!(primitive_direction(&v), int_vec(&[3, -2]));
    }

    #[test]
    fn canonical_sign_flips() {
        assert_eq!(canonical_sign(&int_vec(&[0, -2, 1])), int_vec(&[0, 2, -1]));
        assert_eq!(canonical_sign(&int_vec(&[1, -5])), int_vec(&[1, -5]));
    }

    #[test]
    fn matrix_mul_identity() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let i = IntMatrix::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(i.mul(&a), a);
    }
}
