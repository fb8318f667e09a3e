//! Dense exact linear algebra, generic over the scalar ring.
//!
//! Elimination is fraction-free (Bareiss style), so it only needs exact division of
//! known multiples: it runs over `BigInt` without ever leaving the integers, and over
//! `BigRational` or `Ratio<i64>` unchanged.

use std::fmt;
use std::ops::Neg;

use num_traits::Num;

/// Scalars the elimination routines work over: an exact integral domain.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    let cell: &mut T = &mut out[(i, j)];
                    *cell = cell.clone() + prod;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|a| a.clone() * c.clone())
    }

    /// `self - c·I`
    pub fn shift(&self, c: &T) -> Matrix<T> {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = m[(i, i)].clone() - c.clone();
        }
        m
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn pow(&self, exp: u32) -> Matrix<T> {
        (0..exp).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows)
    }

    /// Stacks `blocks` vertically; all must share a column count.
    pub fn vstack(cols: usize, blocks: &[Matrix<T>]) -> Matrix<T> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    /// Fraction-free Gauss–Jordan reduction.
    ///
    /// Returns the reduced matrix and its pivot columns. In the result every pivot entry
    /// equals the same nonzero value `d` (the last leading minor), pivot columns are zero
    /// off the pivot, and rows below the rank are zero.
    pub fn fraction_free_rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let pivot = a[(r, c)].clone();
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let factor = a[(i, c)].clone();
                for j in 0..a.cols {
                    let v = (pivot.clone() * a[(i, j)].clone()
                        - factor.clone() * a[(r, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.fraction_free_rref().1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`. Over `BigInt` the basis is integral.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (rref, pivots) = self.fraction_free_rref();
        let d = pivots
            .first()
            .map_or_else(T::one, |&c| rref[(0, c)].clone());
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = d.clone();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Bareiss determinant.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut prev = T::one();
        let mut sign = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return T::zero();
            };
            if p != k {
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a[(k, k)].clone() * a[(i, j)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Inverse over a field; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<T>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (rref, pivots) = aug.fraction_free_rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let d = rref[(0, 0)].clone();
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = rref[(i, n + j)].clone() / d.clone();
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from degree 0 upward,
    /// by the Faddeev–LeVerrier recursion.
    pub fn characteristic_polynomial(&self) -> Vec<T> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Matrix::zeros(n, n);
        let mut k_scalar = T::zero();
        for k in 1..=n {
            k_scalar = k_scalar + T::one();
            // M_k = A M_{k-1} + c_{n-k+1} I
            m = self.mul(&m).shift(&-coeffs[n - k + 1].clone());
            coeffs[n - k] = -self.mul(&m).trace() / k_scalar.clone();
        }
        coeffs
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Intersection of the kernels of all `blocks`.
pub fn common_kernel<T: Scalar>(cols: usize, blocks: &[Matrix<T>]) -> Vec<Vec<T>> {
    if blocks.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut v = vec![T::zero(); cols];
                v[i] = T::one();
                v
            })
            .collect();
    }
    Matrix::vstack(cols, blocks).kernel()
}

/// Polynomials as coefficient vectors, lowest degree first.
pub mod poly {
    use super::Scalar;

    pub fn trim<T: Scalar>(mut p: Vec<T>) -> Vec<T> {
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn degree<T: Scalar>(p: &[T]) -> usize {
        trim(p.to_vec()).len().saturating_sub(1)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic<T: Scalar>(p: &[T], divisor: &[T]) -> (Vec<T>, Vec<T>) {
        let divisor = trim(divisor.to_vec());
        let dd = divisor.len() - 1;
        assert!(divisor[dd].is_one(), "divisor must be monic");
        let mut rem = trim(p.to_vec());
        if rem.len() <= dd {
            return (vec![T::zero()], rem);
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let lead = rem[shift + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in divisor.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - lead.clone() * c.clone();
            }
            quot[shift] = lead;
        }
        rem.truncate(dd.max(1));
        (trim(quot), trim(rem))
    }

    pub fn is_zero<T: Scalar>(p: &[T]) -> bool {
        p.iter().all(|c| c.is_zero())
    }

    /// The `k`-th cyclotomic polynomial, built as `(x^k - 1) / ∏_{d | k, d < k} Φ_d`.
    pub fn cyclotomic<T: Scalar>(k: usize) -> Vec<T> {
        assert!(k >= 1);
        let mut p = vec![T::zero(); k + 1];
        p[0] = -T::one();
        p[k] = T::one();
        for d in (1..k).filter(|d| k % d == 0) {
            let (q, r) = div_rem_monic(&p, &cyclotomic::<T>(d));
            debug_assert!(is_zero(&r));
            p = q;
        }
        p
    }
}

/// Euler's totient, the degree of the `k`-th cyclotomic polynomial.
pub fn totient(k: usize) -> usize {
    (1..=k).filter(|&i| num_integer::gcd(i, k) == 1).count()
}

/// Splits a monic polynomial into cyclotomic factors `Φ_k` with `k` dividing `period`.
///
/// Returns `(k, multiplicity)` pairs and whatever cofactor is left over (constant 1
/// when the polynomial is a product of such factors).
pub fn cyclotomic_factors<T: Scalar>(p: &[T], period: usize) -> (Vec<(usize, usize)>, Vec<T>) {
    let mut rest = poly::trim(p.to_vec());
    let mut factors = Vec::new();
    for k in (1..=period).filter(|k| period % k == 0) {
        let phi = poly::cyclotomic::<T>(k);
        let mut mult = 0;
        loop {
            if poly::degree(&rest) < poly::degree(&phi) {
                break;
            }
            let (q, r) = poly::div_rem_monic(&rest, &phi);
            if !poly::is_zero(&r) {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((k, mult));
        }
    }
    (factors, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Ratio};
    use num_traits::Zero;

    fn int(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_pivots_share_one_value() {
        let a = int(vec![vec![2, 4, 1], vec![1, 3, 0], vec![3, 7, 1]]);
        let (r, pivots) = a.fraction_free_rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r[(0, 0)], r[(1, 1)]);
        assert!(r.row(2).iter().all(Zero::is_zero));
    }

    #[test]
    fn integral_kernel() {
        let a = int(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let a = int(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        // 2·(6 - 2) + 1·(1 - 3)
        assert_eq!(a.determinant(), BigInt::from(6));
        let q: Matrix<BigRational> = a.map(|v| BigRational::from_integer(v.clone()));
        let inv = q.inverse().unwrap();
        assert!(q.mul(&inv).is_identity());
        let singular = int(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.determinant().is_zero());
        assert!(singular.map(|v| Ratio::from_integer(v.clone())).inverse().is_none());
    }

    #[test]
    fn characteristic_polynomial_of_rotation() {
        // order-4 rotation: x² + 1
        let a = int(vec![vec![0, -1], vec![1, 0]]);
        let p = a.characteristic_polynomial();
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        let (factors, rest) = cyclotomic_factors(&p, 4);
        assert_eq!(factors, vec![(4, 1)]);
        assert_eq!(rest, vec![BigInt::from(1)]);
    }

    #[test]
    fn small_cyclotomics() {
        let phi = |k| poly::cyclotomic::<BigInt>(k);
        let as_i = |p: Vec<BigInt>| -> Vec<i64> {
            p.iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i(phi(1)), vec![-1, 1]);
        assert_eq!(as_i(phi(2)), vec![1, 1]);
        assert_eq!(as_i(phi(4)), vec![1, 0, 1]);
        assert_eq!(as_i(phi(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(as_i(phi(6)), vec![1, -1, 1]);
        for k in 1..=12 {
            assert_eq!(poly::degree(&phi(k)), totient(k));
        }
    }

    #[test]
    fn works_over_machine_rationals() {
        let a: Matrix<Ratio<i64>> = Matrix::from_rows(vec![
            vec![Ratio::new(1, 2), Ratio::from_integer(1)],
            vec![Ratio::from_integer(1), Ratio::from_integer(2)],
        ]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.determinant(), Ratio::new(0, 1));
        assert_eq!(a.kernel(), vec![vec![Ratio::from_integer(-1), Ratio::new(1, 2)]]);
    }
}
