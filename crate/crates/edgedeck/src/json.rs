//! JSON documents for catalogs, operator matrices, decks and reports.
//!
//! Big integers are written as JSON numbers when they fit in a `u64` (deck
//! multiplicities) and as decimal strings otherwise; matrix entries are
//! always strings.

use std::sync::Arc;

use edgedeck_core::algebra::{IdentityReport, Verdict};
use edgedeck_core::arith::pair_count;
use edgedeck_core::johnson::{
    IntertwineReport, MinusMCriterion, ScanReport, SpectrumReport, VanishingHit,
};
use edgedeck_core::reconstruct::{KernelReport, ReconstructionResult};
use edgedeck_core::{CatalogKey, ClassCatalog, Engine, MultiVector, OperatorMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::graph6::{self, Graph6Error};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {why}")]
    Field { field: String, why: String },
    #[error("multiset key {key:?}: {source}")]
    Graph6 { key: String, source: Graph6Error },
    #[error(transparent)]
    Core(#[from] edgedeck_core::Error),
}

fn field_error(field: &str, why: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        why: why.into(),
    }
}

/// Hex digits per class code: `ceil(N / 4)`, at least one.
pub fn hex_width(n: usize) -> usize {
    pair_count(n).div_ceil(4).max(1)
}

pub fn key_json(key: CatalogKey) -> Value {
    json!({ "n": key.n, "m": key.m })
}

pub fn catalog_to_json(cat: &ClassCatalog) -> Value {
    let width = hex_width(cat.n());
    let classes: Vec<Value> = cat
        .codes()
        .iter()
        .map(|c| Value::from(format!("{c:0width$x}")))
        .collect();
    json!({ "n": cat.n(), "m": cat.m(), "classes": classes })
}

fn usize_field(doc: &Value, field: &str) -> Result<usize, FormatError> {
    doc.get(field)
        .ok_or_else(|| field_error(field, "missing"))?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| field_error(field, "expected a nonnegative integer"))
}

/// Reads a catalog document back, checking every code is canonical.
pub fn catalog_from_json(engine: &mut Engine, doc: &Value) -> Result<ClassCatalog, FormatError> {
    let n = usize_field(doc, "n")?;
    let m = usize_field(doc, "m")?;
    let list = doc
        .get("classes")
        .and_then(Value::as_array)
        .ok_or_else(|| field_error("classes", "expected an array"))?;
    let mut codes = Vec::with_capacity(list.len());
    for (k, item) in list.iter().enumerate() {
        let text = item
            .as_str()
            .ok_or_else(|| field_error("classes", format!("entry {k} is not a string")))?;
        let code = u64::from_str_radix(text, 16)
            .map_err(|e| field_error("classes", format!("entry {k} ({text:?}): {e}")))?;
        codes.push(code);
    }
    let canon = engine.canonicalizer(n)?;
    Ok(ClassCatalog::from_codes(&canon, m, codes)?)
}

pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_u64() {
        Some(small) => Value::from(small),
        None => Value::from(x.to_string()),
    }
}

fn bigint_from_json(v: &Value, field: &str) -> Result<BigInt, FormatError> {
    let parsed = match v {
        Value::Number(num) => num.as_u64().map(BigInt::from),
        Value::String(s) => s.parse::<BigInt>().ok(),
        _ => None,
    };
    match parsed {
        Some(x) if !x.is_negative() => Ok(x),
        _ => Err(field_error(
            field,
            format!("{v} is not a nonnegative integer"),
        )),
    }
}

pub fn matrix_to_json(op: &OperatorMatrix) -> Value {
    let entries: Vec<Value> = (0..op.entries.rows())
        .map(|r| {
            Value::from(
                op.entries
                    .row(r)
                    .iter()
                    .map(|x| Value::from(x.to_string()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    json!({
        "kind": op.kind.name(),
        "i": op.depth,
        "row_catalog": key_json(op.rows.key()),
        "col_catalog": key_json(op.cols.key()),
        "entries": entries,
    })
}

/// `{"n", "m", "r", "multiset": {graph6: count}}` with classes in catalog
/// order and zero multiplicities omitted.
pub fn deck_to_json(v: &MultiVector, r: usize) -> Value {
    let mut multiset = Map::new();
    for (code, count) in v.members() {
        if !count.is_zero() {
            let g = v
                .catalog()
                .graph(v.catalog().position(code).expect("member of its catalog"));
            multiset.insert(graph6::encode(&g), bigint_json(count));
        }
    }
    json!({ "n": v.key().n, "m": v.key().m, "r": r, "multiset": multiset })
}

/// A deck document resolved against the catalog of its declared `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckInput {
    pub vector: MultiVector,
    pub r: usize,
}

/// Parses a deck document. Keys may be any labelling of a class; labellings
/// of the same class are summed.
pub fn deck_from_json(engine: &mut Engine, doc: &Value) -> Result<DeckInput, FormatError> {
    let n = usize_field(doc, "n")?;
    let m = usize_field(doc, "m")?;
    let r = usize_field(doc, "r")?;
    let multiset = doc
        .get("multiset")
        .and_then(Value::as_object)
        .ok_or_else(|| field_error("multiset", "expected an object"))?;
    let catalog: Arc<ClassCatalog> = engine.catalog(n, m)?;
    let mut counts = vec![BigInt::zero(); catalog.len()];
    for (key, count) in multiset {
        let g = graph6::decode(key).map_err(|source| FormatError::Graph6 {
            key: key.clone(),
            source,
        })?;
        if g.n() != n || g.edge_count() != m {
            return Err(field_error(
                "multiset",
                format!(
                    "{key:?} has n = {}, m = {} but the deck declares n = {n}, m = {m}",
                    g.n(),
                    g.edge_count()
                ),
            ));
        }
        let code = engine.canonicalize(&g)?;
        let pos = catalog.index_of(&code).expect("catalog is complete");
        counts[pos] += bigint_from_json(count, "multiset")?;
    }
    Ok(DeckInput {
        vector: MultiVector::new(catalog, counts)?,
        r,
    })
}

pub fn identity_report_json(report: &IdentityReport) -> Value {
    let mut doc = json!({
        "identity": report.identity.name(),
        "n": report.n,
        "m": report.m,
        "index": report.index,
        "lhs_digest": format!("{:016x}", report.lhs_digest),
        "rhs_digest": format!("{:016x}", report.rhs_digest),
    });
    match &report.verdict {
        Verdict::ExactEqual => doc["verdict"] = Value::from("exact-equal"),
        Verdict::Mismatch { row, col, lhs, rhs } => {
            doc["verdict"] = Value::from("mismatch");
            doc["mismatch"] =
                json!({ "row": row, "col": col, "lhs": lhs.to_string(), "rhs": rhs.to_string() });
        }
    }
    doc
}

pub fn kernel_report_json(report: &KernelReport) -> Value {
    json!({
        "identity": "kernel",
        "n": report.n,
        "m": report.m,
        "classes": report.classes,
        "delta1_rank": report.delta1_rank,
        "delta1_injective": report.delta1_injective(),
        "d1_rows": report.d1.map(|(rows, _)| rows),
        "d1_rank": report.d1.map(|(_, rank)| rank),
        "d1_injective": report.d1_injective(),
    })
}

pub fn intertwine_json(report: &IntertwineReport) -> Value {
    json!({
        "identity": "intertwine",
        "n": report.n,
        "m": report.m,
        "classes": report.classes,
        "labelled": report.labelled,
        "p_rank": report.p_rank,
        "eigenvalues": report.eigenvalues.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "verdict": "exact-equal",
    })
}

pub fn spectrum_json(report: &SpectrumReport, minus_m: Option<&MinusMCriterion>) -> Value {
    let mut doc = json!({
        "N": report.params.ground,
        "m": report.params.m,
        "k": report.params.k,
        "eigenvalues": report.eigenvalues.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "annihilated": report.annihilated,
        "regular": report.regular,
        "zero_eigenvalue": report.zero_eigenvalue,
    });
    if let Some(c) = minus_m {
        doc["minus_m_eigenvalue"] = json!({ "holds": c.holds, "witness": c.witness });
    }
    doc
}

pub fn reconstruction_json(result: &ReconstructionResult, r: usize) -> Value {
    let mut doc = deck_to_json(&result.recovered, r);
    doc["route"] = Value::from(result.route.name());
    doc["certificate"] = json!({ "residual_zero": result.certificate.residual_zero, "routes_agree": result.certificate.routes_agree });
    doc
}

/// One JSON line per evaluated tuple or hit.
pub fn scan_line(ground: usize, m: usize, k: usize, j: usize, value: &BigInt) -> Value {
    json!({ "N": ground, "m": m, "k": k, "j": j, "value": value.to_string() })
}

pub fn scan_header(ground_max: usize, k_max: usize) -> Value {
    json!({ "report": "edgedeck-scan", "version": env!("CARGO_PKG_VERSION"), "N_max": ground_max, "k_max": k_max })
}

pub fn scan_summary(report: &ScanReport) -> Value {
    let hits: Vec<Value> = report
        .hits
        .iter()
        .map(|&VanishingHit { ground, m, k, j }| json!({ "N": ground, "m": m, "k": k, "j": j }))
        .collect();
    json!({ "summary": { "tuples": report.tuples, "hits": hits.len(), "hit_list": hits } })
}
