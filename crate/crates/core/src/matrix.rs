//! Dense exact matrices.
//!
//! The generic [`Matrix`] only needs ring operations. Rank, determinant,
//! linear solves and kernels are provided for `Matrix<BigInt>` and use
//! fraction-free (Bareiss) elimination, so every intermediate stays an
//! integer.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::Fnv;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
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

    pub fn from_columns(rows: usize, columns: Vec<Vec<T>>) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, x) in col.into_iter().enumerate() {
                m.data[i * cols + j] = x;
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// First `(row, col)` where the two matrices differ; `None` if equal.
    /// Shapes must agree.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)>
    where
        T: PartialEq,
    {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        let k = self
            .data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)?;
        Some((k / self.cols, k % self.cols))
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T> + for<'a> Sub<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Matrix product; zero entries of `self` are skipped, so sparse left
    /// factors are cheap.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    let prod = a * rhs.get(k, j);
                    out.data[idx] = core::mem::replace(&mut out.data[idx], T::zero()) + &prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            self.cols,
            v.len(),
            "vector length differs from column count"
        );
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(T::zero(), |acc, (a, x)| acc + &(a * x))
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c * x)
    }

    /// `self + c * I`.
    pub fn add_diagonal(&self, c: &T) -> Self {
        assert!(self.is_square(), "diagonal shift of a non-square matrix");
        let mut out = self.clone();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            out.data[idx] = core::mem::replace(&mut out.data[idx], T::zero()) + c;
        }
        out
    }

    pub fn column_sums(&self) -> Vec<T> {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, j)))
            .collect()
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(T::zero(), |acc, x| acc + x))
            .collect()
    }
}

impl Matrix<BigInt> {
    /// Content hash of the shape and entries (FNV-1a over little-endian bytes).
    pub fn digest(&self) -> u64 {
        let mut h = Fnv::new();
        h.write(&(self.rows as u64).to_le_bytes());
        h.write(&(self.cols as u64).to_le_bytes());
        for x in &self.data {
            let bytes = x.to_signed_bytes_le();
            h.write(&(bytes.len() as u64).to_le_bytes());
            h.write(&bytes);
        }
        h.finish()
    }

    /// Bareiss forward elimination on a copy. Returns the echelon matrix,
    /// pivot columns, and the sign of the row permutation used.
    fn bareiss(&self) -> (Matrix<BigInt>, Vec<usize>, bool) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut swapped = false;
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
                swapped = !swapped;
            }
            let piv = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let lead = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = (&piv * a.get(i, j) - &lead * a.get(r, j)) / &prev;
                    a.set(i, j, v);
                }
                // entries left of c in row i are already zero
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots, swapped)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return BigInt::one();
        }
        let (a, pivots, swapped) = self.bareiss();
        if pivots.len() < self.rows {
            return BigInt::zero();
        }
        let d = a.get(self.rows - 1, self.cols - 1).clone();
        if swapped {
            -d
        } else {
            d
        }
    }

    /// Unique rational solution of `self * x = b` for a nonsingular square
    /// matrix; `None` if singular.
    #[allow(clippy::needless_range_loop)]
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigRational>> {
        assert!(self.is_square(), "solve needs a square matrix");
        assert_eq!(b.len(), self.rows, "right-hand side length differs");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, b[i].clone());
        }
        let (e, pivots, _) = aug.bareiss();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = BigRational::from_integer(e.get(i, n).clone());
            for j in i + 1..n {
                acc -= BigRational::from_integer(e.get(i, j).clone()) * &x[j];
            }
            x[i] = acc / BigRational::from_integer(e.get(i, i).clone());
        }
        Some(x)
    }

    /// Integer basis of the right kernel, one primitive vector per free column.
    #[allow(clippy::needless_range_loop)]
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let (e, pivots, _) = self.bareiss();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            // back-substitute with x_f = 1 and the other free variables 0
            let mut x = vec![BigRational::zero(); self.cols];
            x[f] = BigRational::one();
            for i in (0..rank).rev() {
                let pc = pivots[i];
                let mut acc = BigRational::zero();
                for j in pc + 1..self.cols {
                    acc -= BigRational::from_integer(e.get(i, j).clone()) * &x[j];
                }
                x[pc] = acc / BigRational::from_integer(e.get(i, pc).clone());
            }
            basis.push(primitive_integer_vector(&x));
        }
        basis
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer_vector(x: &[BigRational]) -> Vec<BigInt> {
    let lcm = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// True if every entry of a rational vector is a nonnegative integer.
pub fn is_nonnegative_integral(x: &[BigRational]) -> bool {
    x.iter().all(|q| q.is_integer() && !q.is_negative())
}
