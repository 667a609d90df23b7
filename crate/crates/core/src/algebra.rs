//! Linear relations between the deck operators, checked on matrices built
//! from raw deck enumeration, and the polynomials expressing `D_k` and `Δ_i`
//! through `Δ_1`.
//!
//! Every check builds both sides independently from decks; no identity is
//! used to produce the other side of another.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, pair_count};
use crate::deck::OperatorKind;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::OperatorPolynomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Identity {
    /// `Δ_k = Σ_i C(m-i, k-i) D_i`
    DeckSum,
    /// `D_1 D_i = (m-i+1)(N-m-i+1) D_{i-1} + i(N-2i) D_i + (i+1)^2 D_{i+1}`
    Recursion,
    /// `D_k = Σ_i (-1)^{k+i} C(m-i, k-i) Δ_i`
    Inversion,
    /// `p_i(Δ_1) = Δ_i`
    DeltaPolynomial,
    /// `L_k(Δ_1) + (-1)^k C(m, k) I = D_k`
    LkPolynomial,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::DeckSum,
        Identity::Recursion,
        Identity::Inversion,
        Identity::DeltaPolynomial,
        Identity::LkPolynomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::DeckSum => "deck-sum",
            Identity::Recursion => "recursion",
            Identity::Inversion => "inversion",
            Identity::DeltaPolynomial => "delta-polynomial",
            Identity::LkPolynomial => "lk-polynomial",
        }
    }

    /// Whether the check is defined at `(n, m, index)`.
    pub fn applies(self, n: usize, m: usize, index: usize) -> bool {
        if m > pair_count(n) {
            return false;
        }
        match self {
            Identity::DeckSum | Identity::Inversion | Identity::LkPolynomial => index <= m,
            Identity::Recursion => index >= 1 && index <= m,
            Identity::DeltaPolynomial => index >= 1 && index <= m,
        }
    }

    pub fn check(
        self,
        engine: &mut Engine,
        n: usize,
        m: usize,
        index: usize,
    ) -> Result<IdentityReport> {
        match self {
            Identity::DeckSum => verify_deck_sum(engine, n, m, index),
            Identity::Recursion => verify_recursion(engine, n, m, index),
            Identity::Inversion => verify_inversion(engine, n, m, index),
            Identity::DeltaPolynomial => verify_delta_polynomial(engine, n, m, index),
            Identity::LkPolynomial => verify_lk_polynomial(engine, n, m, index),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    ExactEqual,
    Mismatch {
        row: usize,
        col: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    pub n: usize,
    pub m: usize,
    pub index: usize,
    pub lhs_digest: u64,
    pub rhs_digest: u64,
    pub verdict: Verdict,
}

impl IdentityReport {
    fn compare(
        identity: Identity,
        n: usize,
        m: usize,
        index: usize,
        lhs: &Matrix<BigInt>,
        rhs: &Matrix<BigInt>,
    ) -> Self {
        let verdict = match lhs.first_difference(rhs) {
            None => Verdict::ExactEqual,
            Some((row, col)) => Verdict::Mismatch {
                row,
                col,
                lhs: lhs.get(row, col).clone(),
                rhs: rhs.get(row, col).clone(),
            },
        };
        IdentityReport {
            identity,
            n,
            m,
            index,
            lhs_digest: lhs.digest(),
            rhs_digest: rhs.digest(),
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::ExactEqual
    }
}

fn op(
    engine: &mut Engine,
    kind: OperatorKind,
    n: usize,
    m: usize,
    i: usize,
) -> Result<Matrix<BigInt>> {
    Ok(engine.operator(kind, n, m, i)?.entries.clone())
}

fn require(ok: bool, what: impl FnOnce() -> alloc::string::String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what()))
    }
}

fn signed(x: usize) -> i64 {
    x as i64
}

/// `Δ_k` against `Σ_{i=0}^{k} C(m-i, k-i) D_i`.
pub fn verify_deck_sum(
    engine: &mut Engine,
    n: usize,
    m: usize,
    k: usize,
) -> Result<IdentityReport> {
    require(k <= m, || {
        format!("deck sum needs k <= m, got k = {k}, m = {m}")
    })?;
    let lhs = op(engine, OperatorKind::Delta, n, m, k)?;
    let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
    for i in 0..=k {
        let c = binomial(signed(m) - signed(i), signed(k) - signed(i));
        rhs = rhs.add(&op(engine, OperatorKind::Perturbed, n, m, i)?.scale(&c));
    }
    Ok(IdentityReport::compare(
        Identity::DeckSum,
        n,
        m,
        k,
        &lhs,
        &rhs,
    ))
}

/// `D_1 D_i` against the three-term recursion. `D_{i+1}` is the zero matrix
/// when `i = m`.
pub fn verify_recursion(
    engine: &mut Engine,
    n: usize,
    m: usize,
    i: usize,
) -> Result<IdentityReport> {
    require(i >= 1 && i <= m, || {
        format!("recursion needs 1 <= i <= m, got i = {i}, m = {m}")
    })?;
    let total = signed(pair_count(n));
    let (mi, ii) = (signed(m), signed(i));
    let d1 = op(engine, OperatorKind::Perturbed, n, m, 1)?;
    let d_prev = op(engine, OperatorKind::Perturbed, n, m, i - 1)?;
    let d_cur = op(engine, OperatorKind::Perturbed, n, m, i)?;
    let d_next = op(engine, OperatorKind::Perturbed, n, m, i + 1)?;
    let lhs = d1.mul(&d_cur);
    let rhs = d_prev
        .scale(&BigInt::from((mi - ii + 1) * (total - mi - ii + 1)))
        .add(&d_cur.scale(&BigInt::from(ii * (total - 2 * ii))))
        .add(&d_next.scale(&BigInt::from((ii + 1) * (ii + 1))));
    Ok(IdentityReport::compare(
        Identity::Recursion,
        n,
        m,
        i,
        &lhs,
        &rhs,
    ))
}

/// `D_k` against `Σ_{i=0}^{k} (-1)^{k+i} C(m-i, k-i) Δ_i`.
pub fn verify_inversion(
    engine: &mut Engine,
    n: usize,
    m: usize,
    k: usize,
) -> Result<IdentityReport> {
    require(k <= m, || {
        format!("inversion needs k <= m, got k = {k}, m = {m}")
    })?;
    let lhs = op(engine, OperatorKind::Perturbed, n, m, k)?;
    let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
    for i in 0..=k {
        let mut c = binomial(signed(m) - signed(i), signed(k) - signed(i));
        if (k + i) % 2 == 1 {
            c = -c;
        }
        rhs = rhs.add(&op(engine, OperatorKind::Delta, n, m, i)?.scale(&c));
    }
    Ok(IdentityReport::compare(
        Identity::Inversion,
        n,
        m,
        k,
        &lhs,
        &rhs,
    ))
}

fn check_counts(total_pairs: usize, m: usize) -> Result<()> {
    require(m <= total_pairs, || {
        format!("m = {m} exceeds N = {total_pairs}")
    })
}

/// `D_0(t), .., D_k(t)` with `D_0 = 1`, `D_1 = t - m`, and
/// `(r+1)^2 D_{r+1} = (t - m) D_r - (m-r+1)(N-m-r+1) D_{r-1} - r(N-2r) D_r`,
/// where `t` stands for `Δ_1`.
pub fn perturbed_polynomials(
    total_pairs: usize,
    m: usize,
    k: usize,
) -> Result<Vec<OperatorPolynomial>> {
    check_counts(total_pairs, m)?;
    let (big_n, mi) = (signed(total_pairs), signed(m));
    let int = |x: i64| BigRational::from_integer(BigInt::from(x));
    let d1 = OperatorPolynomial::var().sub(&OperatorPolynomial::constant(int(mi)));
    let mut out = alloc::vec![OperatorPolynomial::constant(BigRational::one())];
    for r in 0..k {
        let ri = signed(r);
        let cur = &out[r];
        let mut next = d1.mul(cur).sub(&cur.scale(&int(ri * (big_n - 2 * ri))));
        if r >= 1 {
            next = next.sub(&out[r - 1].scale(&int((mi - ri + 1) * (big_n - mi - ri + 1))));
        }
        out.push(next.scale(&BigRational::new(
            BigInt::one(),
            BigInt::from((ri + 1) * (ri + 1)),
        )));
    }
    Ok(out)
}

/// `L_k` with `D_k = L_k(Δ_1) + (-1)^k C(m, k) I`; its constant term is zero.
pub fn lk_polynomial(total_pairs: usize, m: usize, k: usize) -> Result<OperatorPolynomial> {
    require(k <= m, || format!("L_k needs k <= m, got k = {k}, m = {m}"))?;
    let dk = perturbed_polynomials(total_pairs, m, k)?
        .pop()
        .expect("k + 1 polynomials");
    let lk = dk.sub(&OperatorPolynomial::constant(BigRational::from_integer(
        alternating_binomial(m, k),
    )));
    if !lk.coeff(0).is_zero() {
        return Err(Error::AssertionFailed(format!(
            "L_{k} for N = {total_pairs}, m = {m} keeps constant term {}",
            lk.coeff(0)
        )));
    }
    Ok(lk)
}

fn alternating_binomial(m: usize, k: usize) -> BigInt {
    let c = binomial(signed(m), signed(k));
    if k % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `p_i` with `Δ_i = p_i(Δ_1)`, from `Δ_i = Σ_k C(m-k, i-k) D_k` and the
/// `D_k` polynomials. The constant term cancels exactly for `i >= 1`; a
/// leftover constant is reported as an error.
pub fn delta_polynomial(total_pairs: usize, m: usize, i: usize) -> Result<OperatorPolynomial> {
    require(i >= 1, || "delta polynomial needs i >= 1".into())?;
    let dks = perturbed_polynomials(total_pairs, m, i)?;
    let mut p = OperatorPolynomial::zero();
    for (k, dk) in dks.iter().enumerate() {
        let c = binomial(signed(m) - signed(k), signed(i) - signed(k));
        p = p.add(&dk.scale(&BigRational::from_integer(c)));
    }
    if !p.coeff(0).is_zero() {
        return Err(Error::AssertionFailed(format!(
            "p_{i} for N = {total_pairs}, m = {m} keeps constant term {}",
            p.coeff(0)
        )));
    }
    Ok(p)
}

/// Built `Δ_i` against `p_i` evaluated at the built `Δ_1`.
pub fn verify_delta_polynomial(
    engine: &mut Engine,
    n: usize,
    m: usize,
    i: usize,
) -> Result<IdentityReport> {
    require(i >= 1 && i <= m, || {
        format!("delta polynomial check needs 1 <= i <= m, got i = {i}, m = {m}")
    })?;
    let p = delta_polynomial(pair_count(n), m, i)?;
    let delta1 = op(engine, OperatorKind::Delta, n, m, 1)?;
    let lhs = p.eval_matrix(&delta1)?;
    let rhs = op(engine, OperatorKind::Delta, n, m, i)?;
    Ok(IdentityReport::compare(
        Identity::DeltaPolynomial,
        n,
        m,
        i,
        &lhs,
        &rhs,
    ))
}

/// Built `D_k` against `L_k(Δ_1) + (-1)^k C(m, k) I`.
pub fn verify_lk_polynomial(
    engine: &mut Engine,
    n: usize,
    m: usize,
    k: usize,
) -> Result<IdentityReport> {
    let lk = lk_polynomial(pair_count(n), m, k)?;
    let delta1 = op(engine, OperatorKind::Delta, n, m, 1)?;
    let lhs = lk
        .eval_matrix(&delta1)?
        .add_diagonal(&alternating_binomial(m, k));
    let rhs = op(engine, OperatorKind::Perturbed, n, m, k)?;
    Ok(IdentityReport::compare(
        Identity::LkPolynomial,
        n,
        m,
        k,
        &lhs,
        &rhs,
    ))
}
