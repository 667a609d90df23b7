//! Recovering a collection from its modified one-deck, and its one-edge deck
//! from the same data.
//!
//! Above half density (`2m > N`) the alternating sum
//! `Δ_1 - Δ_2 + Δ_3 - ... ± Δ_m` is the identity, and each `Δ_i` is a
//! polynomial in `Δ_1`, so `X_P` is a fixed polynomial in `Δ_1` applied to
//! `Δ_1 X_P`. At or below half density the deck is complemented element-wise:
//! `(F - e + f)^c = (F - e)^c - f` turns `MD_1(P)` into the one-edge deck of
//! `P' = {F^c : F ∈ ED_1(P)}`, whose graphs have `N - m + 1 > N/2` edges.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::delta_polynomial;
use crate::arith::pair_count;
use crate::deck::{complement_vector, MultiVector, OperatorKind};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::matrix::is_nonnegative_integral;
use crate::poly::OperatorPolynomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// Exact linear solve against the built `Δ_1`.
    DirectSolve,
    /// The alternating polynomial in `Δ_1`.
    AlternatingFormula,
    /// Complement, lift, reconstruct above half density, complement back.
    ComplementPipeline,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::DirectSolve => "direct-solve",
            Route::AlternatingFormula => "alternating-formula",
            Route::ComplementPipeline => "complement-pipeline",
        }
    }
}

/// Exact checks performed before a result is returned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    /// The forward operator applied to the result reproduced the input.
    pub residual_zero: bool,
    /// The alternating formula and the linear solve gave the same vector.
    /// `None` when only one route ran.
    pub routes_agree: Option<bool>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReconstructionResult {
    pub recovered: MultiVector,
    pub route: Route,
    pub certificate: Certificate,
}

/// `R(t) = Σ_{i=1}^{m} (-1)^{i+1} p_i(t) / t`, so that `X_P = R(Δ_1) Δ_1 X_P`
/// when `2m > N`.
pub fn inverse_polynomial(total_pairs: usize, m: usize) -> Result<OperatorPolynomial> {
    let mut r = OperatorPolynomial::zero();
    for i in 1..=m {
        let q = delta_polynomial(total_pairs, m, i)?.divide_by_var()?;
        r = if i % 2 == 1 { r.add(&q) } else { r.sub(&q) };
    }
    Ok(r)
}

fn to_counts(x: &[BigRational]) -> Vec<BigInt> {
    x.iter().map(|q| q.to_integer()).collect()
}

fn describe(x: &[BigRational]) -> String {
    match x.iter().position(|q| !q.is_integer() || q.is_negative()) {
        Some(k) => format!("class {k} would need multiplicity {}", x[k]),
        None => String::from("all multiplicities integral"),
    }
}

/// Recovers `X_P` from `v = Δ_1 X_P` when `2m > N`, by the alternating
/// formula and by an exact solve; the two must agree.
pub fn reconstruct_from_delta1(
    engine: &mut Engine,
    v: &MultiVector,
) -> Result<ReconstructionResult> {
    let key = v.key();
    let (n, m) = (key.n, key.m);
    let total_pairs = pair_count(n);
    if 2 * m <= total_pairs {
        return Err(Error::OutOfRegime { m, total_pairs });
    }
    let per_graph = BigInt::from(m * (total_pairs - m + 1));
    if !(v.total() % &per_graph).is_zero() {
        return Err(Error::MalformedDeck(format!(
            "total {} is not a multiple of m(N-m+1) = {per_graph}",
            v.total()
        )));
    }
    let delta1 = engine.operator(OperatorKind::Delta, n, m, 1)?;

    let formula = inverse_polynomial(total_pairs, m)?.eval_on_vector(&delta1.entries, v.counts());
    let solved = delta1
        .entries
        .solve(v.counts())
        .ok_or_else(|| Error::AssertionFailed(format!("Δ_1 is singular at n = {n}, m = {m}")))?;
    if formula != solved {
        return Err(Error::AssertionFailed(format!(
            "alternating formula and linear solve disagree at n = {n}, m = {m}"
        )));
    }
    if !is_nonnegative_integral(&formula) {
        return Err(Error::NotRealizable(describe(&formula)));
    }
    let recovered = MultiVector::new(v.catalog().clone(), to_counts(&formula))?;
    if delta1.apply(&recovered)? != *v {
        return Err(Error::AssertionFailed(
            "residual of the recovered vector is nonzero".into(),
        ));
    }
    Ok(ReconstructionResult {
        recovered,
        route: Route::AlternatingFormula,
        certificate: Certificate {
            residual_zero: true,
            routes_agree: Some(true),
        },
    })
}

/// The one-edge deck of a collection of `r` graphs given its modified
/// one-deck `md` over the `(n, m)` catalog.
///
/// For `m = 0` both decks are empty; the result is the zero vector over the
/// `(n, 0)` catalog.
pub fn edge_deck_from_modified(
    engine: &mut Engine,
    md: &MultiVector,
    r: usize,
) -> Result<ReconstructionResult> {
    let key = md.key();
    let (n, m) = (key.n, key.m);
    let total_pairs = pair_count(n);
    let expected = BigInt::from(r) * BigInt::from(m * (total_pairs - m + 1));
    if md.total() != expected {
        return Err(Error::MalformedDeck(format!(
            "{r} graph(s) with n = {n}, m = {m} have {expected} modified one-deck members, found {}",
            md.total()
        )));
    }
    if m == 0 {
        return Ok(ReconstructionResult {
            recovered: MultiVector::zero(engine.catalog(n, 0)?),
            route: Route::DirectSolve,
            certificate: Certificate {
                residual_zero: true,
                routes_agree: None,
            },
        });
    }

    let lift = engine.operator(OperatorKind::Lift, n, m, 1)?;
    let (ed1, route, routes_agree) = if 2 * m > total_pairs {
        let x = reconstruct_from_delta1(engine, md)?;
        let d1 = engine.operator(OperatorKind::EdgeDeck, n, m, 1)?;
        (
            d1.apply(&x.recovered)?,
            Route::AlternatingFormula,
            x.certificate.routes_agree,
        )
    } else {
        // complements of MD_1 members form the one-edge deck of P'
        let w = complement_vector(engine, md)?;
        let m_prime = total_pairs - m + 1;
        let lifted = engine
            .operator(OperatorKind::Lift, n, m_prime, 1)?
            .apply(&w)?;
        let x_prime = reconstruct_from_delta1(engine, &lifted).map_err(|e| match e {
            Error::MalformedDeck(why) => Error::NotRealizable(why),
            other => other,
        })?;
        let d1_prime = engine.operator(OperatorKind::EdgeDeck, n, m_prime, 1)?;
        if d1_prime.apply(&x_prime.recovered)? != w {
            return Err(Error::NotRealizable(
                "complemented deck is not the one-edge deck of any collection".into(),
            ));
        }
        (
            complement_vector(engine, &x_prime.recovered)?,
            Route::ComplementPipeline,
            x_prime.certificate.routes_agree,
        )
    };
    if lift.apply(&ed1)? != *md {
        return Err(Error::NotRealizable(
            "adding an edge to the recovered deck does not give the input".into(),
        ));
    }
    Ok(ReconstructionResult {
        recovered: ed1,
        route,
        certificate: Certificate {
            residual_zero: true,
            routes_agree,
        },
    })
}

/// Exact ranks of `Δ_1` and `d_1` on the `(n, m)` catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelReport {
    pub n: usize,
    pub m: usize,
    pub classes: usize,
    pub delta1_rank: usize,
    /// `(rows, rank)` of `d_1`; `None` for `m = 0`.
    pub d1: Option<(usize, usize)>,
}

impl KernelReport {
    pub fn delta1_injective(&self) -> bool {
        self.delta1_rank == self.classes
    }

    pub fn d1_injective(&self) -> Option<bool> {
        self.d1.map(|(_, rank)| rank == self.classes)
    }
}

pub fn kernel_report(engine: &mut Engine, n: usize, m: usize) -> Result<KernelReport> {
    let delta1 = engine.operator(OperatorKind::Delta, n, m, 1)?;
    let d1 = if m >= 1 {
        let d = engine.operator(OperatorKind::EdgeDeck, n, m, 1)?;
        Some((d.rows.len(), d.entries.rank()))
    } else {
        None
    };
    Ok(KernelReport {
        n,
        m,
        classes: delta1.cols.len(),
        delta1_rank: delta1.entries.rank(),
        d1,
    })
}
