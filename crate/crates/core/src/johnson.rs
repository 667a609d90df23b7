//! Johnson scheme on `m`-subsets of an `N`-set, and its link to `Δ_1`.
//!
//! Labelled `m`-edge graphs on `n` vertices are the `m`-subsets of the
//! `N = C(n, 2)` vertex pairs. Relation `J_i` joins two subsets meeting in
//! `m - i` elements; the labelled `k`-deck operator is
//! `B = Σ_{i=0}^{k} C(m-i, k-i) J_i`. Its eigenvalues come from the Eberlein
//! polynomials:
//!
//! ```text
//! θ_j = Σ_{i=0}^{k} C(m-i, k-i) Σ_{l=0}^{i} (-1)^l C(j, l) C(m-j, i-l) C(N-m-j, i-l)
//! ```
//!
//! for `0 <= j <= min(m, N-m)`. Spectra are certified by checking that
//! `Π_j (B - θ_j I)` vanishes, never by floating-point eigensolvers.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_u64, pair_count, subsets_of_size};
use crate::deck::OperatorKind;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Default ceiling on the order `C(N, m)` of an explicit Johnson matrix.
pub const DEFAULT_SIZE_GUARD: usize = 20_000;

/// Ground-set size, subset size and deck depth.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct JohnsonParams {
    pub ground: usize,
    pub m: usize,
    pub k: usize,
}

impl JohnsonParams {
    pub fn new(ground: usize, m: usize, k: usize) -> Result<Self> {
        if m > ground || k > m {
            return Err(Error::InvalidParameters(format!(
                "Johnson parameters need 0 <= k <= m <= N, got N = {ground}, m = {m}, k = {k}"
            )));
        }
        Ok(JohnsonParams { ground, m, k })
    }

    /// Largest eigenvalue index, `min(m, N - m)`.
    pub fn max_index(&self) -> usize {
        self.m.min(self.ground - self.m)
    }
}

fn labelled_subsets(ground: usize, m: usize, guard: usize) -> Result<Vec<u64>> {
    if ground > 63 || m > ground {
        return Err(Error::InvalidParameters(format!(
            "cannot enumerate {m}-subsets of a {ground}-set"
        )));
    }
    let size = binomial_u64(ground as u64, m as u64).unwrap_or(u64::MAX);
    if size > guard as u64 {
        return Err(Error::TooLarge {
            size: size.min(usize::MAX as u64) as usize,
            limit: guard,
        });
    }
    Ok(subsets_of_size(ground, m))
}

/// `J_i` on the `m`-subsets of `{0, .., N-1}`, ordered by ascending bit mask.
pub fn relation_matrix(ground: usize, m: usize, i: usize, guard: usize) -> Result<Matrix<BigInt>> {
    let subsets = labelled_subsets(ground, m, guard)?;
    let mut out = Matrix::zeros(subsets.len(), subsets.len());
    for (a, &u) in subsets.iter().enumerate() {
        for (b, &v) in subsets.iter().enumerate() {
            if (u & v).count_ones() as usize + i == m {
                out.set(a, b, BigInt::one());
            }
        }
    }
    Ok(out)
}

/// `B = Σ_{i=0}^{k} C(m-i, k-i) J_i`; for `k = 1` this is `m I + J_1`.
pub fn b_matrix(params: JohnsonParams, guard: usize) -> Result<Matrix<BigInt>> {
    let JohnsonParams { ground, m, k } = params;
    let subsets = labelled_subsets(ground, m, guard)?;
    let weights: Vec<BigInt> = (0..=m)
        .map(|i| binomial(m as i64 - i as i64, k as i64 - i as i64))
        .collect();
    let mut out = Matrix::zeros(subsets.len(), subsets.len());
    for (a, &u) in subsets.iter().enumerate() {
        for (b, &v) in subsets.iter().enumerate() {
            let i = m - (u & v).count_ones() as usize;
            if !weights[i].is_zero() {
                out.set(a, b, weights[i].clone());
            }
        }
    }
    Ok(out)
}

/// Eigenvalue of `J_i` at index `j` (Eberlein polynomial).
pub fn relation_eigenvalue(ground: usize, m: usize, i: usize, j: usize) -> BigInt {
    let (big_n, m, i, j) = (ground as i64, m as i64, i as i64, j as i64);
    (0..=i).fold(BigInt::zero(), |acc, l| {
        let term = binomial(j, l) * binomial(m - j, i - l) * binomial(big_n - m - j, i - l);
        if l % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `θ_j` of the labelled `k`-deck operator `B`.
pub fn k_edge_eigenvalue(params: JohnsonParams, j: usize) -> Result<BigInt> {
    if j > params.max_index() {
        return Err(Error::InvalidParameters(format!(
            "eigenvalue index j = {j} exceeds min(m, N-m) = {}",
            params.max_index()
        )));
    }
    let JohnsonParams { ground, m, k } = params;
    Ok((0..=k).fold(BigInt::zero(), |acc, i| {
        acc + binomial(m as i64 - i as i64, k as i64 - i as i64)
            * relation_eigenvalue(ground, m, i, j)
    }))
}

/// `θ_0, .., θ_t`, `t = min(m, N - m)`.
pub fn eigenvalues(params: JohnsonParams) -> Vec<BigInt> {
    (0..=params.max_index())
        .map(|j| k_edge_eigenvalue(params, j).expect("index in range"))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumReport {
    pub params: JohnsonParams,
    pub eigenvalues: Vec<BigInt>,
    /// `Π_j (B - θ_j I) = 0`.
    pub annihilated: bool,
    /// Every row of `B` sums to `θ_0`.
    pub regular: bool,
    /// Some `θ_j` is zero, so `B` is singular.
    pub zero_eigenvalue: Option<usize>,
}

/// `Π over distinct θ of (M - θ I)` for a square integer matrix.
fn annihilator_product(mat: &Matrix<BigInt>, roots: &[BigInt]) -> Matrix<BigInt> {
    let distinct: BTreeSet<&BigInt> = roots.iter().collect();
    let mut acc = Matrix::identity(mat.rows());
    for theta in distinct {
        acc = mat.add_diagonal(&-theta).mul(&acc);
    }
    acc
}

/// Builds `B` and checks exactly that the closed-form values annihilate it.
pub fn verify_spectrum(params: JohnsonParams, guard: usize) -> Result<SpectrumReport> {
    let b = b_matrix(params, guard)?;
    let eigenvalues = eigenvalues(params);
    if !annihilator_product(&b, &eigenvalues).is_zero() {
        return Err(Error::FormulaMismatch {
            ground: params.ground,
            m: params.m,
            k: params.k,
        });
    }
    let regular = b.row_sums().iter().all(|s| *s == eigenvalues[0]);
    let zero_eigenvalue = eigenvalues.iter().position(Zero::is_zero);
    Ok(SpectrumReport {
        params,
        eigenvalues,
        annihilated: true,
        regular,
        zero_eigenvalue,
    })
}

/// Whether `-m` is an eigenvalue of the Johnson graph `J(N, m)`; this holds
/// iff `m <= N/2`, with witness index `j = m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinusMCriterion {
    pub ground: usize,
    pub m: usize,
    pub holds: bool,
    pub witness: Option<usize>,
}

pub fn minus_m_criterion(ground: usize, m: usize) -> Result<MinusMCriterion> {
    JohnsonParams::new(ground, m, 0)?;
    let holds = 2 * m <= ground;
    let witness = holds.then_some(m);
    if let Some(j) = witness {
        let value = relation_eigenvalue(ground, m, 1, j);
        if value != -BigInt::from(m) {
            return Err(Error::AssertionFailed(format!(
                "J(N={ground}, m={m}) eigenvalue at j = m is {value}"
            )));
        }
    }
    Ok(MinusMCriterion {
        ground,
        m,
        holds,
        witness,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntertwineReport {
    pub n: usize,
    pub m: usize,
    pub classes: usize,
    pub labelled: usize,
    pub p_rank: usize,
    pub eigenvalues: Vec<BigInt>,
}

/// Checks `A P = P B` for `A = Δ_1`, the class-membership matrix `P` and
/// `B = m I + J_1`; that `P` has full row rank; and that the annihilating
/// polynomial of `B` kills `A`, which puts every eigenvalue of `A` among the
/// `θ_j`.
pub fn intertwine_check(engine: &mut Engine, n: usize, m: usize) -> Result<IntertwineReport> {
    if n > 5 {
        return Err(Error::InvalidParameters(format!(
            "intertwining check is limited to n <= 5, got {n}"
        )));
    }
    let ground = pair_count(n);
    let params = JohnsonParams::new(ground, m, 1.min(m))?;
    let a = engine.operator(OperatorKind::Delta, n, m, 1)?;
    let canon = engine.canonicalizer(n)?;
    let labelled = labelled_subsets(ground, m, DEFAULT_SIZE_GUARD)?;
    let mut p = Matrix::zeros(a.rows.len(), labelled.len());
    for (col, &bits) in labelled.iter().enumerate() {
        let class = a
            .rows
            .position(canon.canonical_bits(bits))
            .expect("catalog is complete");
        p.set(class, col, BigInt::one());
    }
    // B = m I + J_1, also for m = 0 where J_1 is empty
    let b = relation_matrix(ground, m, 1, DEFAULT_SIZE_GUARD)?.add_diagonal(&BigInt::from(m));

    let (ap, pb) = (a.entries.mul(&p), p.mul(&b));
    if let Some((r, c)) = ap.first_difference(&pb) {
        return Err(Error::AssertionFailed(format!(
            "AP != PB at ({r}, {c}) for n = {n}, m = {m}: {} vs {}",
            ap.get(r, c),
            pb.get(r, c)
        )));
    }
    let p_rank = p.rank();
    if p_rank != a.rows.len() {
        return Err(Error::AssertionFailed(format!(
            "P has rank {p_rank} < {} rows",
            a.rows.len()
        )));
    }
    let thetas = eigenvalues(JohnsonParams { k: 1, ..params });
    let q_of_a = annihilator_product(&a.entries, &thetas);
    if let Some((r, c)) = q_of_a.first_difference(&Matrix::zeros(q_of_a.rows(), q_of_a.cols())) {
        return Err(Error::AssertionFailed(format!(
            "q(A) has entry {} at ({r}, {c}) for n = {n}, m = {m}",
            q_of_a.get(r, c)
        )));
    }
    Ok(IntertwineReport {
        n,
        m,
        classes: a.rows.len(),
        labelled: labelled.len(),
        p_rank,
        eigenvalues: thetas,
    })
}

/// A zero of the closed-form eigenvalue inside `2m - k + 1 > N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct VanishingHit {
    pub ground: usize,
    pub m: usize,
    pub k: usize,
    pub j: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanReport {
    pub ground_max: usize,
    pub k_max: usize,
    /// Number of `(N, m, k, j)` tuples evaluated.
    pub tuples: usize,
    /// Sorted by `(N, m, k, j)`.
    pub hits: Vec<VanishingHit>,
}

/// Evaluates `θ_j` for every `1 <= N <= ground_max`, `1 <= k <= min(k_max, m)`,
/// `m` with `2m - k + 1 > N`, and `0 <= j <= min(m, N - m)`, collecting the
/// zeros.
pub fn search_vanishing(ground_max: usize, k_max: usize) -> ScanReport {
    let mut hits = Vec::new();
    let mut tuples = 0;
    for ground in 1..=ground_max {
        for m in 0..=ground {
            for k in 1..=k_max.min(m) {
                if 2 * m < ground + k {
                    continue;
                }
                let params = JohnsonParams { ground, m, k };
                for j in 0..=params.max_index() {
                    tuples += 1;
                    if k_edge_eigenvalue(params, j)
                        .expect("index in range")
                        .is_zero()
                    {
                        hits.push(VanishingHit { ground, m, k, j });
                    }
                }
            }
        }
    }
    hits.sort();
    ScanReport {
        ground_max,
        k_max,
        tuples,
        hits,
    }
}
