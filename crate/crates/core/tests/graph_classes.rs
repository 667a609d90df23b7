mod common;

use edgedeck_core::arith::pair_count;
use edgedeck_core::graph::{canonicalize, enumerate_classes, LabeledGraph};
use edgedeck_core::{Canonicalizer, Engine};
use proptest::prelude::*;

#[test]
fn orbit_oracle_matches_catalogs() {
    for n in 1..=6 {
        let oracle = common::class_counts_by_orbits(n);
        let canon = Canonicalizer::new(n).unwrap();
        let ours: Vec<usize> = (0..=pair_count(n))
            .map(|m| enumerate_classes(&canon, m).unwrap().len())
            .collect();
        assert_eq!(ours, oracle, "n = {n}");
        assert_eq!(ours.iter().sum::<usize>(), oracle.iter().sum::<usize>());
    }
    // frozen from the orbit oracle above
    assert_eq!(
        common::class_counts_by_orbits(5),
        [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1]
    );
}

#[test]
fn n4_labelled_graphs_fall_into_eleven_classes() {
    let canon = Canonicalizer::new(4).unwrap();
    let codes: std::collections::BTreeSet<u64> = (0u64..64)
        .map(|b| {
            canon
                .canonicalize(&LabeledGraph::from_bits(4, b).unwrap())
                .code
        })
        .collect();
    assert_eq!(codes.len(), 11);
}

#[test]
fn canonical_codes_decide_isomorphism_exhaustively() {
    for n in 1..=4 {
        let canon = Canonicalizer::new(n).unwrap();
        let size = 1u64 << pair_count(n);
        for a in 0..size {
            let ca = canon.canonicalize(&LabeledGraph::from_bits(n, a).unwrap());
            for b in 0..size {
                let cb = canon.canonicalize(&LabeledGraph::from_bits(n, b).unwrap());
                assert_eq!(
                    ca == cb,
                    common::isomorphic(n, a, b),
                    "n = {n}, {a:#x} vs {b:#x}"
                );
            }
        }
    }
}

#[test]
fn n5_codes_agree_with_permutation_search() {
    // every class member maps to its class, and distinct classes are non-isomorphic
    let canon = Canonicalizer::new(5).unwrap();
    for m in 0..=10 {
        let cat = enumerate_classes(&canon, m).unwrap();
        for (i, &a) in cat.codes().iter().enumerate() {
            for &b in &cat.codes()[i + 1..] {
                assert!(!common::isomorphic(5, a, b));
            }
        }
    }
    for bits in (0u64..1 << 10).step_by(11) {
        let g = LabeledGraph::from_bits(5, bits).unwrap();
        assert!(common::isomorphic(5, bits, canon.canonicalize(&g).code));
    }
}

#[test]
fn complement_symmetry_of_counts() {
    let mut e = Engine::new();
    for n in 1..=6 {
        let big_n = pair_count(n);
        for m in 0..=big_n {
            assert_eq!(
                e.catalog(n, m).unwrap().len(),
                e.catalog(n, big_n - m).unwrap().len()
            );
        }
    }
}

#[test]
fn catalogs_are_deterministic_and_sorted() {
    let canon = Canonicalizer::new(6).unwrap();
    let mut e = Engine::new();
    for m in [0, 3, 7, 8, 15] {
        let direct = enumerate_classes(&canon, m).unwrap();
        assert_eq!(*e.catalog(6, m).unwrap(), direct);
        assert!(direct.codes().windows(2).all(|w| w[0] < w[1]));
        assert!(direct.codes().iter().all(|c| c.count_ones() as usize == m));
    }
    assert_eq!(enumerate_classes(&canon, 7).unwrap().len(), 24);
}

#[test]
fn engine_enforces_vertex_limit() {
    let mut e = Engine::new();
    assert!(e.catalog(7, 3).is_err());
    let mut wide = Engine::with_limits(edgedeck_core::Limits::extended());
    assert_eq!(wide.catalog(7, 2).unwrap().len(), 2);
    assert_eq!(wide.catalog(7, 3).unwrap().len(), 5);
}

proptest! {
    #[test]
    fn canonical_form_is_relabelling_invariant(bits in 0u64..(1 << 15), seed in any::<u64>()) {
        let n = 6;
        let g = LabeledGraph::from_bits(n, bits).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabeled(&perm).unwrap();
        let c = canonicalize(&g);
        prop_assert_eq!(c, canonicalize(&h));
        prop_assert_eq!(canonicalize(&c.graph()), c);
        prop_assert_eq!(g.complement().complement(), g);
    }
}
