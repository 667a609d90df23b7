//! Edge, perturbed and modified decks, and the operator matrices built from
//! them.
//!
//! Semantics for a graph `G` with edge set `E`, non-edges `E^c`:
//!
//! * edge deck `ED_i`: `G - X` for `X ⊆ E`, `|X| = i`; `C(m, i)` members.
//! * perturbed deck `PD_i`: `G - X + Y` for `Y ⊆ E^c`, `|Y| = i`;
//!   `C(m, i) C(N - m, i)` members.
//! * modified deck `MD_i`: `G - X + Y` for `Y` among the pairs absent from
//!   `G - X`, so removed pairs may be put back; `C(m, i) C(N - m + i, i)`
//!   members.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{for_each_subset, pair_count};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::{Canonicalizer, CatalogKey, ClassCatalog, LabeledGraph};
use crate::matrix::Matrix;

/// Multiplicity vector of a graph multiset over a catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiVector {
    catalog: Arc<ClassCatalog>,
    counts: Vec<BigInt>,
}

impl MultiVector {
    pub fn new(catalog: Arc<ClassCatalog>, counts: Vec<BigInt>) -> Result<Self> {
        if counts.len() != catalog.len() {
            return Err(Error::InvalidParameters(format!(
                "{} counts for a catalog of {} classes",
                counts.len(),
                catalog.len()
            )));
        }
        if counts.iter().any(Signed::is_negative) {
            return Err(Error::InvalidParameters("negative multiplicity".into()));
        }
        Ok(MultiVector { catalog, counts })
    }

    pub fn zero(catalog: Arc<ClassCatalog>) -> Self {
        let counts = alloc::vec![BigInt::zero(); catalog.len()];
        MultiVector { catalog, counts }
    }

    /// The characteristic vector of the single class at `index`.
    pub fn unit(catalog: Arc<ClassCatalog>, index: usize) -> Self {
        let mut v = Self::zero(catalog);
        v.counts[index] = BigInt::from(1);
        v
    }

    pub fn catalog(&self) -> &Arc<ClassCatalog> {
        &self.catalog
    }

    pub fn key(&self) -> CatalogKey {
        self.catalog.key()
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(Zero::is_zero)
    }

    /// Nonzero entries as `(canonical code, multiplicity)`.
    pub fn members(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.catalog
            .codes()
            .iter()
            .zip(&self.counts)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&code, c)| (code, c))
    }

    /// Multiset union.
    pub fn union(&self, other: &MultiVector) -> Result<MultiVector> {
        self.expect_key(other.key())?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a + b)
            .collect();
        Ok(MultiVector {
            catalog: self.catalog.clone(),
            counts,
        })
    }

    pub(crate) fn expect_key(&self, expected: CatalogKey) -> Result<()> {
        if self.key() != expected {
            return Err(Error::CatalogMismatch {
                expected,
                found: self.key(),
            });
        }
        Ok(())
    }

    fn from_code_counts(catalog: Arc<ClassCatalog>, tally: &BTreeMap<u64, u64>) -> MultiVector {
        let mut v = Self::zero(catalog);
        for (&code, &c) in tally {
            let pos = v
                .catalog
                .position(code)
                .expect("deck member outside its catalog");
            v.counts[pos] += c;
        }
        v
    }
}

/// Which deck a matrix column holds.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OperatorKind {
    /// `Δ_i`, modified deck.
    Delta,
    /// `D_i`, perturbed deck.
    Perturbed,
    /// `d_i`, edge deck.
    EdgeDeck,
    /// `U_i`, add `i` edges in all ways.
    Lift,
}

impl OperatorKind {
    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Delta => "delta",
            OperatorKind::Perturbed => "perturbed",
            OperatorKind::EdgeDeck => "edgedeck",
            OperatorKind::Lift => "lift",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer matrix whose rows and columns are indexed by catalogs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorMatrix {
    pub kind: OperatorKind,
    pub depth: usize,
    pub rows: Arc<ClassCatalog>,
    pub cols: Arc<ClassCatalog>,
    pub entries: Matrix<BigInt>,
}

impl OperatorMatrix {
    /// `self · v`; `v` must live on the column catalog.
    pub fn apply(&self, v: &MultiVector) -> Result<MultiVector> {
        v.expect_key(self.cols.key())?;
        Ok(MultiVector {
            catalog: self.rows.clone(),
            counts: self.entries.mul_vec(&v.counts),
        })
    }
}

fn validate_depth(g: &LabeledGraph, i: usize) -> Result<()> {
    if i > g.edge_count() {
        return Err(Error::InvalidParameters(format!(
            "cannot remove {i} edges from a graph with {} edges",
            g.edge_count()
        )));
    }
    Ok(())
}

fn tally_edge(canon: &Canonicalizer, g: &LabeledGraph, i: usize) -> BTreeMap<u64, u64> {
    let mut tally = BTreeMap::new();
    for_each_subset(g.bits(), i, |x| {
        *tally
            .entry(canon.canonical_bits(g.bits() & !x))
            .or_insert(0) += 1;
    });
    tally
}

fn tally_perturbed(canon: &Canonicalizer, g: &LabeledGraph, i: usize) -> BTreeMap<u64, u64> {
    let mut tally = BTreeMap::new();
    let absent = g.non_edges();
    for_each_subset(g.bits(), i, |x| {
        for_each_subset(absent, i, |y| {
            *tally
                .entry(canon.canonical_bits(g.edit(x, y).bits()))
                .or_insert(0) += 1;
        });
    });
    tally
}

fn tally_modified(canon: &Canonicalizer, g: &LabeledGraph, i: usize) -> BTreeMap<u64, u64> {
    let mut tally = BTreeMap::new();
    for_each_subset(g.bits(), i, |x| {
        for_each_subset(g.non_edges() | x, i, |y| {
            *tally
                .entry(canon.canonical_bits(g.edit(x, y).bits()))
                .or_insert(0) += 1;
        });
    });
    tally
}

fn tally_lift(canon: &Canonicalizer, g: &LabeledGraph, i: usize) -> BTreeMap<u64, u64> {
    let mut tally = BTreeMap::new();
    for_each_subset(g.non_edges(), i, |y| {
        *tally.entry(canon.canonical_bits(g.bits() | y)).or_insert(0) += 1;
    });
    tally
}

/// `ED_i(g)` over the `(n, m - i)` catalog.
pub fn edge_deck(engine: &mut Engine, g: &LabeledGraph, i: usize) -> Result<MultiVector> {
    validate_depth(g, i)?;
    let canon = engine.canonicalizer(g.n())?;
    let cat = engine.catalog(g.n(), g.edge_count() - i)?;
    Ok(MultiVector::from_code_counts(
        cat,
        &tally_edge(&canon, g, i),
    ))
}

/// `PD_i(g)` over the `(n, m)` catalog. Empty when `i > N - m`.
pub fn perturbed_deck(engine: &mut Engine, g: &LabeledGraph, i: usize) -> Result<MultiVector> {
    validate_depth(g, i)?;
    let canon = engine.canonicalizer(g.n())?;
    let cat = engine.catalog(g.n(), g.edge_count())?;
    Ok(MultiVector::from_code_counts(
        cat,
        &tally_perturbed(&canon, g, i),
    ))
}

/// `MD_i(g)` over the `(n, m)` catalog.
pub fn modified_deck(engine: &mut Engine, g: &LabeledGraph, i: usize) -> Result<MultiVector> {
    validate_depth(g, i)?;
    let canon = engine.canonicalizer(g.n())?;
    let cat = engine.catalog(g.n(), g.edge_count())?;
    Ok(MultiVector::from_code_counts(
        cat,
        &tally_modified(&canon, g, i),
    ))
}

/// Characteristic vector `X_P` of a collection of `m`-edge graphs on `n`
/// vertices.
pub fn characteristic_vector(
    engine: &mut Engine,
    n: usize,
    m: usize,
    graphs: &[LabeledGraph],
) -> Result<MultiVector> {
    let cat = engine.catalog(n, m)?;
    let mut v = MultiVector::zero(cat.clone());
    for g in graphs {
        if g.n() != n || g.edge_count() != m {
            return Err(Error::InvalidParameters(format!(
                "graph with n = {}, m = {} in an (n={n}, m={m}) collection",
                g.n(),
                g.edge_count()
            )));
        }
        let code = engine.canonicalize(g)?;
        v.counts[cat.index_of(&code).expect("catalog is complete")] += 1;
    }
    Ok(v)
}

/// `Δ_i`, `D_i` or `d_i` on `(n, m)`; for [`OperatorKind::Lift`], `U_i`
/// from `(n, m - i)` to `(n, m)`. `Δ_i` and `D_i` with `i > m` are zero.
pub fn build_operator_matrix(
    engine: &mut Engine,
    kind: OperatorKind,
    n: usize,
    m: usize,
    i: usize,
) -> Result<Arc<OperatorMatrix>> {
    engine.operator(kind, n, m, i)
}

/// `U_i`: rows on `(n, m)`, columns on `(n, m - i)`.
pub fn build_lift_matrix(
    engine: &mut Engine,
    n: usize,
    m: usize,
    i: usize,
) -> Result<Arc<OperatorMatrix>> {
    engine.operator(OperatorKind::Lift, n, m, i)
}

pub(crate) fn assemble(
    engine: &mut Engine,
    kind: OperatorKind,
    n: usize,
    m: usize,
    i: usize,
) -> Result<OperatorMatrix> {
    let canon = engine.canonicalizer(n)?;
    let pairs = pair_count(n);
    if m > pairs {
        return Err(Error::InvalidParameters(format!(
            "m = {m} exceeds C({n},2) = {pairs}"
        )));
    }
    if i > m {
        // decks deeper than the edge count are empty
        if matches!(kind, OperatorKind::Delta | OperatorKind::Perturbed) {
            let c = engine.catalog(n, m)?;
            return Ok(OperatorMatrix {
                kind,
                depth: i,
                entries: Matrix::zeros(c.len(), c.len()),
                rows: c.clone(),
                cols: c,
            });
        }
        return Err(Error::InvalidParameters(format!(
            "{kind} operator needs i <= m; got m = {m}, i = {i}"
        )));
    }
    let (rows, cols) = match kind {
        OperatorKind::Delta | OperatorKind::Perturbed => {
            let c = engine.catalog(n, m)?;
            (c.clone(), c)
        }
        OperatorKind::EdgeDeck => (engine.catalog(n, m - i)?, engine.catalog(n, m)?),
        OperatorKind::Lift => (engine.catalog(n, m)?, engine.catalog(n, m - i)?),
    };
    let columns = (0..cols.len())
        .map(|l| {
            let g = cols.graph(l);
            let tally = match kind {
                OperatorKind::Delta => tally_modified(&canon, &g, i),
                OperatorKind::Perturbed => tally_perturbed(&canon, &g, i),
                OperatorKind::EdgeDeck => tally_edge(&canon, &g, i),
                OperatorKind::Lift => tally_lift(&canon, &g, i),
            };
            MultiVector::from_code_counts(rows.clone(), &tally).counts
        })
        .collect();
    Ok(OperatorMatrix {
        kind,
        depth: i,
        entries: Matrix::from_columns(rows.len(), columns),
        rows,
        cols,
    })
}

/// Element-wise complement of a multiset: `(n, m)` to `(n, N - m)`.
pub fn complement_vector(engine: &mut Engine, v: &MultiVector) -> Result<MultiVector> {
    let key = v.key();
    let canon = engine.canonicalizer(key.n)?;
    let target = engine.catalog(key.n, pair_count(key.n) - key.m)?;
    let mut out = MultiVector::zero(target.clone());
    for (code, c) in v.members() {
        let g = LabeledGraph::from_bits(key.n, code)?.complement();
        let pos = target
            .position(canon.canonical_bits(g.bits()))
            .expect("catalog is complete");
        out.counts[pos] += c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn triangle_decks() {
        let mut e = Engine::new();
        let k3 = LabeledGraph::complete(3).unwrap();
        let ed = edge_deck(&mut e, &k3, 1).unwrap();
        assert_eq!(ed.key(), CatalogKey { n: 3, m: 2 });
        assert_eq!(ed.counts(), big(&[3]));
        assert!(perturbed_deck(&mut e, &k3, 1).unwrap().is_zero());
        assert_eq!(modified_deck(&mut e, &k3, 1).unwrap().counts(), big(&[3]));
        assert!(edge_deck(&mut e, &k3, 4).is_err());
    }

    #[test]
    fn depth_zero_is_self() {
        let mut e = Engine::new();
        let g = LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let (_, pos) = e.locate(&g).unwrap();
        for deck in [edge_deck, perturbed_deck, modified_deck] {
            let v = deck(&mut e, &g, 0).unwrap();
            assert_eq!(v, MultiVector::unit(v.catalog().clone(), pos));
        }
    }

    #[test]
    fn path_decks() {
        let mut e = Engine::new();
        let p3 = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(perturbed_deck(&mut e, &p3, 1).unwrap().counts(), big(&[2]));
        assert!(perturbed_deck(&mut e, &p3, 2).unwrap().is_zero());

        let p3k1 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let ed = edge_deck(&mut e, &p3k1, 1).unwrap();
        assert_eq!(ed.counts(), big(&[2]));

        let md = modified_deck(&mut e, &p3k1, 1).unwrap();
        let (_, own) = e.locate(&p3k1).unwrap();
        let two_k2 = LabeledGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (_, other) = e.locate(&two_k2).unwrap();
        assert_eq!(md.counts()[own], BigInt::from(8));
        assert_eq!(md.counts()[other], BigInt::from(2));
        assert_eq!(md.total(), BigInt::from(10));
    }

    #[test]
    fn small_operator_matrices() {
        let mut e = Engine::new();
        let delta = e.operator(OperatorKind::Delta, 3, 2, 1).unwrap();
        assert_eq!(delta.entries, Matrix::from_rows(alloc::vec![big(&[4])]));
        let d1 = e.operator(OperatorKind::EdgeDeck, 3, 3, 1).unwrap();
        assert_eq!(d1.entries, Matrix::from_rows(alloc::vec![big(&[3])]));
        let u = e.operator(OperatorKind::Lift, 3, 2, 1).unwrap();
        assert_eq!(u.entries, Matrix::from_rows(alloc::vec![big(&[2])]));
        for m in 0..=6 {
            let d0 = e.operator(OperatorKind::Delta, 4, m, 0).unwrap();
            assert_eq!(d0.entries, Matrix::identity(d0.rows.len()));
        }
        assert!(e.operator(OperatorKind::Delta, 4, 7, 1).is_err());
        assert!(e.operator(OperatorKind::EdgeDeck, 4, 2, 3).is_err());
        assert!(e
            .operator(OperatorKind::Perturbed, 4, 2, 3)
            .unwrap()
            .entries
            .is_zero());
    }

    #[test]
    fn lift_factors_delta() {
        let mut e = Engine::new();
        let delta = e.operator(OperatorKind::Delta, 4, 3, 1).unwrap();
        let d1 = e.operator(OperatorKind::EdgeDeck, 4, 3, 1).unwrap();
        let u1 = e.operator(OperatorKind::Lift, 4, 3, 1).unwrap();
        assert_eq!(u1.entries.mul(&d1.entries), delta.entries);
        assert!(u1
            .entries
            .column_sums()
            .iter()
            .all(|s| *s == BigInt::from(6 - 3 + 1)));
    }

    #[test]
    fn apply_checks_catalog() {
        let mut e = Engine::new();
        let d1 = e.operator(OperatorKind::EdgeDeck, 4, 3, 1).unwrap();
        let wrong = MultiVector::zero(e.catalog(4, 2).unwrap());
        assert!(matches!(
            d1.apply(&wrong),
            Err(Error::CatalogMismatch { .. })
        ));
    }
}
