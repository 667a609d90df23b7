//! Univariate polynomials with exact rational coefficients, evaluated at
//! integer matrices.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// `c_0 + c_1 t + ... + c_d t^d`, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OperatorPolynomial {
    coeffs: Vec<BigRational>,
}

impl OperatorPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(alloc::vec![c])
    }

    /// The variable `t`.
    pub fn var() -> Self {
        Self::new(alloc::vec![BigRational::zero(), BigRational::one()])
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        OperatorPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = alloc::vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            for (b, y) in other.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        Self::new(out)
    }

    /// `p(t) / t`, defined only when the constant term is zero.
    pub fn divide_by_var(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InexactDivision(format!(
                "{self} has a nonzero constant term"
            )));
        }
        Ok(Self::new(self.coeffs.iter().skip(1).cloned().collect()))
    }

    /// Common denominator `L` and integer coefficients of `L · p`.
    pub fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (lcm, ints)
    }

    /// `L · p(A)` and `L`, computed by Horner's rule in integer arithmetic.
    pub fn eval_scaled(&self, a: &Matrix<BigInt>) -> (Matrix<BigInt>, BigInt) {
        assert!(a.is_square(), "polynomial of a non-square matrix");
        let (lcm, ints) = self.integer_form();
        let mut acc = Matrix::<BigInt>::zeros(a.rows(), a.cols());
        for c in ints.iter().rev() {
            acc = acc.mul(a).add_diagonal(c);
        }
        (acc, lcm)
    }

    /// `p(A)` for an integer matrix. Every entry must come out integral; a
    /// remainder is an error.
    pub fn eval_matrix(&self, a: &Matrix<BigInt>) -> Result<Matrix<BigInt>> {
        let (scaled, lcm) = self.eval_scaled(a);
        if let Some(bad) = (0..scaled.rows())
            .flat_map(|i| (0..scaled.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| !scaled.get(i, j).is_multiple_of(&lcm))
        {
            return Err(Error::InexactDivision(format!(
                "entry {bad:?} of p(A) is {}/{lcm}",
                scaled.get(bad.0, bad.1)
            )));
        }
        Ok(scaled.map(|x| x / &lcm))
    }

    /// `p(A) v` as exact rationals, computed by Horner's rule on the vector.
    pub fn eval_on_vector(&self, a: &Matrix<BigInt>, v: &[BigInt]) -> Vec<BigRational> {
        let (lcm, ints) = self.integer_form();
        let mut acc = alloc::vec![BigInt::zero(); v.len()];
        for c in ints.iter().rev() {
            acc = a.mul_vec(&acc);
            for (x, vi) in acc.iter_mut().zip(v) {
                *x += c * vi;
            }
        }
        acc.into_iter()
            .map(|x| BigRational::new(x, lcm.clone()))
            .collect()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "({mag})")?,
            }
            match j {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{j}")?,
            }
        }
        Ok(())
    }
}
