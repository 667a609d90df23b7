//! Labelled graphs as pair bitsets, canonical forms and class catalogs.
//!
//! Vertex pairs are numbered colexicographically: `(u, v)` with `u < v` sits
//! at bit `C(v, 2) + u`. That numbering is frozen; serialized catalogs and
//! graph6 both depend on it.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::pair_count;
use crate::error::{Error, Result};

/// Largest vertex count whose pair bitset fits in a `u64`.
pub const MAX_VERTICES: usize = 11;

/// Bit position of the unordered pair `{u, v}` on `n` vertices.
pub fn pair_index(u: usize, v: usize, n: usize) -> Result<usize> {
    if u == v || u >= n || v >= n {
        return Err(Error::InvalidPair { u, v, n });
    }
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    Ok(v * (v - 1) / 2 + u)
}

/// Inverse of [`pair_index`]: the pair `(u, v)`, `u < v`, stored at `index`.
pub fn pair_at(index: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    (index - v * (v - 1) / 2, v)
}

fn full_mask(n: usize) -> u64 {
    let pairs = pair_count(n);
    if pairs == 64 {
        u64::MAX
    } else {
        (1u64 << pairs) - 1
    }
}

/// A simple graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: u64,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_vertices(n)?;
        Ok(LabeledGraph {
            n,
            edges: full_mask(n),
        })
    }

    /// Builds a graph from a pair bitset; fails if a bit beyond `C(n, 2)` is set.
    pub fn from_bits(n: usize, edges: u64) -> Result<Self> {
        check_vertices(n)?;
        if edges & !full_mask(n) != 0 {
            return Err(Error::InvalidParameters(format!(
                "bitset {edges:#x} has bits beyond the {} pairs of {n} vertices",
                pair_count(n)
            )));
        }
        Ok(LabeledGraph { n, edges })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.edges |= 1 << pair_index(u, v, n)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.edges
    }

    pub fn pair_total(&self) -> usize {
        pair_count(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    /// Bitset of the pairs that are not edges.
    pub fn non_edges(&self) -> u64 {
        !self.edges & full_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        Ok(self.edges >> pair_index(u, v, self.n)? & 1 == 1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.pair_total())
            .filter(|&b| self.edges >> b & 1 == 1)
            .map(pair_at)
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n)
            .filter(|&v| v != u && self.edges >> pair_index(u, v, self.n).unwrap() & 1 == 1)
            .count()
    }

    pub fn complement(&self) -> LabeledGraph {
        LabeledGraph {
            n: self.n,
            edges: self.non_edges(),
        }
    }

    /// Removes the pairs in `remove` and adds the pairs in `add`.
    pub(crate) fn edit(&self, remove: u64, add: u64) -> LabeledGraph {
        LabeledGraph {
            n: self.n,
            edges: (self.edges & !remove) | add,
        }
    }

    /// The image under the vertex map `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<LabeledGraph> {
        if perm.len() != self.n
            || (0..self.n).collect::<BTreeSet<_>>() != perm.iter().copied().collect()
        {
            return Err(Error::InvalidParameters(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.n
            )));
        }
        let mut out = 0u64;
        for (u, v) in self.edges() {
            out |= 1 << pair_index(perm[u], perm[v], self.n)?;
        }
        Ok(LabeledGraph {
            n: self.n,
            edges: out,
        })
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Complement within the same vertex set.
pub fn complement(g: &LabeledGraph) -> LabeledGraph {
    g.complement()
}

fn check_vertices(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "a graph needs at least one vertex".into(),
        ));
    }
    if n > MAX_VERTICES {
        return Err(Error::VertexLimit {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Numerically smallest pair bitset among all relabelings of a graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    pub n: usize,
    pub code: u64,
}

impl CanonicalCode {
    pub fn graph(&self) -> LabeledGraph {
        LabeledGraph {
            n: self.n,
            edges: self.code,
        }
    }
}

/// Precomputed pair permutations for every relabeling of `n` vertices.
///
/// `n!` tables of `C(n, 2)` bytes: 720 for `n = 6`, 5040 for `n = 7`.
pub struct Canonicalizer {
    n: usize,
    pairs: usize,
    tables: Vec<u8>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Result<Self> {
        check_vertices(n)?;
        let pairs = pair_count(n);
        let mut tables = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            for b in 0..pairs {
                let (u, v) = pair_at(b);
                tables.push(pair_index(perm[u], perm[v], n)? as u8);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(Canonicalizer { n, pairs, tables })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn canonicalize(&self, g: &LabeledGraph) -> CanonicalCode {
        debug_assert_eq!(g.n, self.n);
        CanonicalCode {
            n: self.n,
            code: self.canonical_bits(g.edges),
        }
    }

    pub(crate) fn canonical_bits(&self, edges: u64) -> u64 {
        let full = full_mask(self.n);
        if edges == 0 || edges == full || self.pairs == 0 {
            return edges;
        }
        let set: Vec<usize> = (0..self.pairs).filter(|&b| edges >> b & 1 == 1).collect();
        let mut best = u64::MAX;
        for table in self.tables.chunks_exact(self.pairs) {
            let mut image = 0u64;
            for &b in &set {
                image |= 1 << table[b];
                // the image only grows from here
                if image >= best {
                    break;
                }
            }
            best = best.min(image);
        }
        best
    }
}

/// Canonical code of a single graph. Builds a fresh [`Canonicalizer`]; reuse
/// one when canonicalizing many graphs.
pub fn canonicalize(g: &LabeledGraph) -> CanonicalCode {
    Canonicalizer::new(g.n)
        .expect("graph vertex count already validated")
        .canonicalize(g)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `(n, m)` identifying a catalog.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CatalogKey {
    pub n: usize,
    pub m: usize,
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={})", self.n, self.m)
    }
}

/// The isomorphism classes of `m`-edge graphs on `n` vertices, ordered by
/// ascending canonical code. Position in this list is the row/column index
/// of every operator matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassCatalog {
    key: CatalogKey,
    classes: Vec<u64>,
}

impl ClassCatalog {
    pub fn key(&self) -> CatalogKey {
        self.key
    }

    pub fn n(&self) -> usize {
        self.key.n
    }

    pub fn m(&self) -> usize {
        self.key.m
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn codes(&self) -> &[u64] {
        &self.classes
    }

    /// Canonical representative of class `index`.
    pub fn graph(&self, index: usize) -> LabeledGraph {
        LabeledGraph {
            n: self.key.n,
            edges: self.classes[index],
        }
    }

    pub fn position(&self, code: u64) -> Option<usize> {
        self.classes.binary_search(&code).ok()
    }

    pub fn index_of(&self, code: &CanonicalCode) -> Option<usize> {
        if code.n != self.key.n {
            return None;
        }
        self.position(code.code)
    }

    /// Wraps externally supplied codes after checking they are canonical,
    /// distinct, sorted and of the right edge count.
    pub fn from_codes(canon: &Canonicalizer, m: usize, classes: Vec<u64>) -> Result<Self> {
        let n = canon.n();
        for w in classes.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidParameters(
                    "catalog codes must be strictly ascending".into(),
                ));
            }
        }
        for &c in &classes {
            let g = LabeledGraph::from_bits(n, c)?;
            if g.edge_count() != m || canon.canonical_bits(c) != c {
                return Err(Error::InvalidParameters(format!(
                    "{c:#x} is not a canonical {m}-edge code"
                )));
            }
        }
        Ok(ClassCatalog {
            key: CatalogKey { n, m },
            classes,
        })
    }

    /// Catalog of `m + 1` edges, obtained by adding every non-edge to every
    /// class of `self`.
    pub(crate) fn augmented(&self, canon: &Canonicalizer) -> ClassCatalog {
        let mut next = BTreeSet::new();
        for &c in &self.classes {
            let free = !c & full_mask(self.key.n);
            for b in 0..pair_count(self.key.n) {
                if free >> b & 1 == 1 {
                    next.insert(canon.canonical_bits(c | 1 << b));
                }
            }
        }
        ClassCatalog {
            key: CatalogKey {
                n: self.key.n,
                m: self.key.m + 1,
            },
            classes: next.into_iter().collect(),
        }
    }

    /// Catalog of the complements, `N - m` edges.
    pub(crate) fn complemented(&self, canon: &Canonicalizer) -> ClassCatalog {
        let full = full_mask(self.key.n);
        let mut classes: Vec<u64> = self
            .classes
            .iter()
            .map(|&c| canon.canonical_bits(!c & full))
            .collect();
        classes.sort_unstable();
        ClassCatalog {
            key: CatalogKey {
                n: self.key.n,
                m: pair_count(self.key.n) - self.key.m,
            },
            classes,
        }
    }

    pub(crate) fn edgeless(n: usize) -> ClassCatalog {
        ClassCatalog {
            key: CatalogKey { n, m: 0 },
            classes: alloc::vec![0],
        }
    }
}

/// All isomorphism classes of `m`-edge graphs on `canon.n()` vertices.
///
/// Classes are grown one edge at a time from the edgeless graph (or from the
/// complement side when `m > N/2`): every `m`-edge graph is a one-edge
/// extension of some `(m-1)`-edge class representative.
pub fn enumerate_classes(canon: &Canonicalizer, m: usize) -> Result<ClassCatalog> {
    let n = canon.n();
    let pairs = pair_count(n);
    if m > pairs {
        return Err(Error::InvalidParameters(format!(
            "m = {m} exceeds C({n},2) = {pairs}"
        )));
    }
    let steps = m.min(pairs - m);
    let mut cat = ClassCatalog::edgeless(n);
    for _ in 0..steps {
        cat = cat.augmented(canon);
    }
    Ok(if steps == m {
        cat
    } else {
        cat.complemented(canon)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_colex() {
        assert_eq!(pair_index(0, 1, 4), Ok(0));
        assert_eq!(pair_index(0, 2, 4), Ok(1));
        assert_eq!(pair_index(1, 2, 4), Ok(2));
        assert_eq!(pair_index(2, 3, 4), Ok(5));
        assert_eq!(pair_index(3, 2, 4), Ok(5));
        assert!(matches!(
            pair_index(2, 2, 4),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            pair_index(0, 4, 4),
            Err(Error::InvalidPair { .. })
        ));
        for b in 0..pair_count(8) {
            let (u, v) = pair_at(b);
            assert!(u < v);
            assert_eq!(pair_index(u, v, 8), Ok(b));
        }
    }

    #[test]
    fn graph_validation() {
        assert!(LabeledGraph::from_bits(3, 0b1000).is_err());
        assert!(LabeledGraph::from_bits(0, 0).is_err());
        assert!(matches!(
            LabeledGraph::empty(12),
            Err(Error::VertexLimit { .. })
        ));
        let g = LabeledGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(3), 0);
        assert!(g.has_edge(2, 1).unwrap());
        assert!(!g.has_edge(0, 3).unwrap());
    }

    #[test]
    fn triangle_and_paths() {
        let k3 = LabeledGraph::complete(3).unwrap();
        assert_eq!(canonicalize(&k3).code, 0b111);
        let a = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = LabeledGraph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonicalize(&a), canonicalize(&b));
    }

    #[test]
    fn canonical_is_idempotent_and_minimal() {
        let canon = Canonicalizer::new(5).unwrap();
        for bits in (0u64..1 << 10).step_by(7) {
            let g = LabeledGraph::from_bits(5, bits).unwrap();
            let c = canon.canonicalize(&g);
            assert!(c.code <= bits);
            assert_eq!(canon.canonicalize(&c.graph()), c);
            assert_eq!(c.graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn small_catalogs() {
        let canon = Canonicalizer::new(4).unwrap();
        let sizes: Vec<usize> = (0..=6)
            .map(|m| enumerate_classes(&canon, m).unwrap().len())
            .collect();
        assert_eq!(sizes, [1, 1, 2, 3, 2, 1, 1]);
        assert!(enumerate_classes(&canon, 7).is_err());
        let c3 = Canonicalizer::new(3).unwrap();
        assert_eq!(enumerate_classes(&c3, 0).unwrap().len(), 1);
    }

    #[test]
    fn complement_examples() {
        let c4 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let two_k2 = c4.complement();
        assert_eq!(two_k2.edge_count(), 2);
        assert!(two_k2.has_edge(0, 2).unwrap() && two_k2.has_edge(1, 3).unwrap());
        assert_eq!(
            LabeledGraph::empty(3).unwrap().complement(),
            LabeledGraph::complete(3).unwrap()
        );
        let paw = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(complement(&complement(&paw)), paw);
    }

    #[test]
    fn from_codes_rejects_noncanonical() {
        let canon = Canonicalizer::new(4).unwrap();
        let cat = enumerate_classes(&canon, 3).unwrap();
        assert_eq!(
            ClassCatalog::from_codes(&canon, 3, cat.codes().to_vec()).unwrap(),
            cat
        );
        let mut bad = cat.codes().to_vec();
        bad.reverse();
        assert!(ClassCatalog::from_codes(&canon, 3, bad).is_err());
        assert!(ClassCatalog::from_codes(&canon, 3, alloc::vec![0b111000]).is_err());
    }
}
