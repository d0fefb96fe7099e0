//! Exact dense linear algebra over ℚ and prime fields.
//!
//! Fields are small context values (the "structure" pattern): a matrix carries
//! its field so mixed-field operations fail loudly instead of silently.

use num::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// An exact field given as a context object.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + std::hash::Hash + Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// None exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// None for characteristic zero.
    fn characteristic(&self) -> Option<u64>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct QQ;

impl Field for QQ {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn characteristic(&self) -> Option<u64> {
        None
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// The prime field with `p` elements, `p` a prime below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> crate::Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(crate::Error::InvalidInput(format!(
                "{p} is not a supported prime"
            )));
        }
        Ok(Fp { p })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// Dense matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:?} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Mat {
            field,
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Mat::zero(field.clone(), n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Mat {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut F::Elem {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.field.clone(), self.cols, self.rows, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.add(self.at(r, c), other.at(r, c))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.sub(self.at(r, c), other.at(r, c))
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        Mat::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.mul(self.at(r, c), s)
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = Mat::zero(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let t = f.mul(a, other.at(k, c));
                    let cur = out.at(r, c).clone();
                    *out.at_mut(r, c) = f.add(&cur, &t);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), &inv);
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let t = f.mul(&factor, self.at(row, c));
                        let cur = self.at(r, c).clone();
                        *self.at_mut(r, c) = f.sub(&cur, &t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, one column vector per element.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = f.neg(m.at(prow, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field.clone();
        let mut aug = Mat::from_fn(f.clone(), self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut aug = Mat::from_fn(f.clone(), n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(f, n, n, |r, c| aug.at(r, n + c).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Determinant by fraction-free elimination on a working copy.
    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !f.is_zero(m.at(r, col))) else {
                return f.zero();
            };
            if pr != col {
                for c in 0..n {
                    m.data.swap(pr * n + c, col * n + c);
                }
                det = f.neg(&det);
            }
            det = f.mul(&det, m.at(col, col));
            let inv = f.inv(m.at(col, col)).expect("pivot is nonzero");
            for r in col + 1..n {
                if f.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = f.mul(m.at(r, col), &inv);
                for c in col..n {
                    let t = f.mul(&factor, m.at(col, c));
                    let cur = m.at(r, c).clone();
                    *m.at_mut(r, c) = f.sub(&cur, &t);
                }
            }
        }
        det
    }

    /// A basis of the column space, as column vectors.
    pub fn column_space_basis(&self) -> Vec<Vec<F::Elem>> {
        let mut m = self.clone();
        let pivots = m.rref();
        pivots
            .iter()
            .map(|&c| (0..self.rows).map(|r| self.at(r, c).clone()).collect())
            .collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        Mat::from_fn(field, rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(r, c), &v[c]));
                }
                acc
            })
            .collect()
    }
}

/// Rational helper: |x| as f64 is never needed; keep sign checks exact.
pub fn rat_is_positive(x: &BigRational) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: Vec<Vec<i64>>) -> Mat<QQ> {
        Mat::from_rows(
            QQ,
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| QQ.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank() {
        let m = qmat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let kern = m.kernel_basis();
        assert_eq!(kern.len(), 1);
        for v in &kern {
            assert!(m.apply(v).iter().all(|x| QQ.is_zero(x)));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = qmat(vec![vec![2, 1], vec![1, 1]]);
        let b = vec![QQ.from_i64(3), QQ.from_i64(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(QQ, 2));
        assert_eq!(m.det(), QQ.from_i64(1));
        let sing = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.det(), QQ.from_i64(0));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f2 = Fp::new(2).unwrap();
        assert_eq!(f2.add(&1, &1), 0);
        assert_eq!(f2.inv(&1), Some(1));
        let f7 = Fp::new(7).unwrap();
        for a in 1..7 {
            let inv = f7.inv(&a).unwrap();
            assert_eq!(f7.mul(&a, &inv), 1);
        }
        assert!(Fp::new(6).is_err());
        assert!(Fp::new(1).is_err());
    }

    #[test]
    fn kernel_over_f2() {
        let f2 = Fp::new(2).unwrap();
        let m = Mat::from_rows(f2, vec![vec![1, 1, 0], vec![0, 0, 0]]);
        let kern = m.kernel_basis();
        assert_eq!(kern.len(), 2);
        for v in &kern {
            assert!(m.apply(v).iter().all(|x| *x == 0));
        }
    }
}
