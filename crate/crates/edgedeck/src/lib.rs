//! File formats and the command-line front-end for `edgedeck-core`.
//!
//! * [`graph6`]: the short graph6 form for single graphs,
//! * [`json`]: catalogs, operator matrices, deck multisets and reports,
//! * [`cli`]: the `edgedeck` binary's argument parsing and commands.

pub mod cli;
pub mod graph6;
pub mod json;

pub use edgedeck_core as core;
