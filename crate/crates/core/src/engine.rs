//! Cache of canonicalizers, catalogs and operator matrices.
//!
//! Building an operator matrix enumerates the deck of every class once; the
//! result is kept behind an `Arc` and shared by every later query.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;

use crate::arith::pair_count;
use crate::deck::{self, OperatorKind, OperatorMatrix};
use crate::error::{Error, Result};
use crate::graph::{
    CanonicalCode, Canonicalizer, CatalogKey, ClassCatalog, LabeledGraph, MAX_VERTICES,
};

/// Vertex-count ceiling enforced by an [`Engine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
}

impl Limits {
    pub const DEFAULT_MAX_VERTICES: usize = 6;
    /// `n = 7` costs 5040 relabelings per canonical form; opt-in only.
    pub const EXTENDED_MAX_VERTICES: usize = 7;

    pub fn extended() -> Self {
        Limits {
            max_vertices: Self::EXTENDED_MAX_VERTICES,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: Self::DEFAULT_MAX_VERTICES,
        }
    }
}

type OperatorKey = (OperatorKind, usize, usize, usize);

#[derive(Default)]
pub struct Engine {
    limits: Limits,
    canonicalizers: BTreeMap<usize, Arc<Canonicalizer>>,
    catalogs: BTreeMap<CatalogKey, Arc<ClassCatalog>>,
    operators: BTreeMap<OperatorKey, Arc<OperatorMatrix>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limits(limits: Limits) -> Self {
        assert!(
            limits.max_vertices <= MAX_VERTICES,
            "vertex limit beyond the bitset width"
        );
        Engine {
            limits,
            ..Self::default()
        }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn canonicalizer(&mut self, n: usize) -> Result<Arc<Canonicalizer>> {
        if n > self.limits.max_vertices {
            return Err(Error::VertexLimit {
                n,
                max: self.limits.max_vertices,
            });
        }
        if let Some(c) = self.canonicalizers.get(&n) {
            return Ok(c.clone());
        }
        let c = Arc::new(Canonicalizer::new(n)?);
        self.canonicalizers.insert(n, c.clone());
        Ok(c)
    }

    pub fn canonicalize(&mut self, g: &LabeledGraph) -> Result<CanonicalCode> {
        Ok(self.canonicalizer(g.n())?.canonicalize(g))
    }

    /// Catalog of the `(n, m)` classes, built by one-edge augmentation from
    /// cached smaller catalogs.
    pub fn catalog(&mut self, n: usize, m: usize) -> Result<Arc<ClassCatalog>> {
        let key = CatalogKey { n, m };
        if let Some(c) = self.catalogs.get(&key) {
            return Ok(c.clone());
        }
        let canon = self.canonicalizer(n)?;
        let pairs = pair_count(n);
        if m > pairs {
            return Err(Error::InvalidParameters(format!(
                "m = {m} exceeds C({n},2) = {pairs}"
            )));
        }
        let cat = if m == 0 {
            ClassCatalog::edgeless(n)
        } else if 2 * m <= pairs {
            self.catalog(n, m - 1)?.augmented(&canon)
        } else {
            self.catalog(n, pairs - m)?.complemented(&canon)
        };
        let cat = Arc::new(cat);
        self.catalogs.insert(key, cat.clone());
        Ok(cat)
    }

    /// Catalog of `g`'s edge count and the position of `g`'s class in it.
    pub fn locate(&mut self, g: &LabeledGraph) -> Result<(Arc<ClassCatalog>, usize)> {
        let code = self.canonicalize(g)?;
        let cat = self.catalog(g.n(), g.edge_count())?;
        let pos = cat.index_of(&code).expect("catalog is complete");
        Ok((cat, pos))
    }

    /// The operator matrix of `kind` at depth `i` on `m`-edge graphs.
    ///
    /// For [`OperatorKind::Lift`], `m` is the edge count of the *rows*; the
    /// columns are `(m - i)`-edge classes.
    pub fn operator(
        &mut self,
        kind: OperatorKind,
        n: usize,
        m: usize,
        i: usize,
    ) -> Result<Arc<OperatorMatrix>> {
        let key = (kind, n, m, i);
        if let Some(op) = self.operators.get(&key) {
            return Ok(op.clone());
        }
        let op = Arc::new(deck::assemble(self, kind, n, m, i)?);
        self.operators.insert(key, op.clone());
        Ok(op)
    }
}
