//! Exact edge-deck operators over catalogs of small graphs.
//!
//! For graphs on `n` labelled vertices with `m` edges the crate builds three
//! multiset decks of every isomorphism class:
//!
//! * the *edge deck* `ED_i(G)`: delete `i` edges in all ways,
//! * the *perturbed deck* `PD_i(G)`: delete `i` edges, then add `i` of the
//!   original non-edges,
//! * the *modified deck* `MD_i(G)`: delete `i` edges, then add `i` pairs that
//!   are absent afterwards (removed pairs may come back).
//!
//! Stacking the decks of every class column by column gives integer matrices
//! (`d_i`, `D_i`, `Δ_i`). The [`algebra`] module checks the linear relations
//! between them and expresses `Δ_i` as a polynomial in `Δ_1`; [`reconstruct`]
//! recovers the one-edge deck from the modified one-deck; [`johnson`] works
//! with the Johnson scheme on labelled graphs.
//!
//! Everything is exact: multiplicities are big integers, polynomial
//! coefficients are big rationals, ranks come from fraction-free elimination.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the CLI live
//! in the `edgedeck` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod arith;
pub mod deck;
pub mod engine;
mod error;
pub mod graph;
pub mod johnson;
pub mod matrix;
pub mod poly;
pub mod reconstruct;

pub use deck::{MultiVector, OperatorKind, OperatorMatrix};
pub use engine::{Engine, Limits};
pub use error::{Error, Result};
pub use graph::{CanonicalCode, Canonicalizer, CatalogKey, ClassCatalog, LabeledGraph};
pub use matrix::Matrix;
pub use poly::OperatorPolynomial;
