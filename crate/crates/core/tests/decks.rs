mod common;

use edgedeck_core::arith::pair_count;
use edgedeck_core::deck::{complement_vector, edge_deck, modified_deck, perturbed_deck};
use edgedeck_core::{Engine, LabeledGraph, OperatorKind};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::binom;

#[test]
fn deck_totals_match_closed_forms() {
    let mut e = Engine::new();
    for n in 1..=6 {
        let big_n = pair_count(n) as u64;
        for m in 0..=pair_count(n) {
            let cat = e.catalog(n, m).unwrap();
            // n = 6 decks get expensive for deep i; depth 3 covers every formula
            let max_i = if n == 6 { m.min(2) } else { m };
            for idx in 0..cat.len() {
                let g = cat.graph(idx);
                let mu = m as u64;
                for i in 0..=max_i {
                    let iu = i as u64;
                    let ed = edge_deck(&mut e, &g, i).unwrap();
                    assert_eq!(ed.total(), BigInt::from(binom(mu, iu)));
                    let pd = perturbed_deck(&mut e, &g, i).unwrap();
                    assert_eq!(
                        pd.total(),
                        BigInt::from(binom(mu, iu) * binom(big_n - mu, iu))
                    );
                    let md = modified_deck(&mut e, &g, i).unwrap();
                    assert_eq!(
                        md.total(),
                        BigInt::from(binom(mu, iu) * binom(big_n - mu + iu, iu))
                    );
                }
            }
        }
    }
}

#[test]
fn operator_column_sums() {
    let mut e = Engine::new();
    for n in 2..=5 {
        let big_n = pair_count(n) as u64;
        for m in 0..=pair_count(n) {
            let mu = m as u64;
            for i in 0..=m.min(3) {
                let iu = i as u64;
                let sums =
                    |e: &mut Engine, kind| e.operator(kind, n, m, i).unwrap().entries.column_sums();
                let want = |x: u64| BigInt::from(x);
                assert!(sums(&mut e, OperatorKind::Delta)
                    .iter()
                    .all(|s| *s == want(binom(mu, iu) * binom(big_n - mu + iu, iu))));
                assert!(sums(&mut e, OperatorKind::Perturbed)
                    .iter()
                    .all(|s| *s == want(binom(mu, iu) * binom(big_n - mu, iu))));
                assert!(sums(&mut e, OperatorKind::EdgeDeck)
                    .iter()
                    .all(|s| *s == want(binom(mu, iu))));
                // U_i columns: i-subsets of the N - (m - i) free pairs
                assert!(sums(&mut e, OperatorKind::Lift)
                    .iter()
                    .all(|s| *s == want(binom(big_n - mu + iu, iu))));
            }
        }
    }
}

#[test]
fn delta_one_is_m_plus_perturbed_one() {
    let mut e = Engine::new();
    for n in 1..=6 {
        for m in 1..=pair_count(n) {
            let delta = e.operator(OperatorKind::Delta, n, m, 1).unwrap();
            let d1 = e.operator(OperatorKind::Perturbed, n, m, 1).unwrap();
            assert_eq!(
                delta.entries,
                d1.entries.add_diagonal(&BigInt::from(m)),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn lift_factors_modified_deck() {
    let mut e = Engine::new();
    for n in 2..=5 {
        for m in 0..=pair_count(n) {
            for i in 0..=m.min(3) {
                let delta = e.operator(OperatorKind::Delta, n, m, i).unwrap();
                let d = e.operator(OperatorKind::EdgeDeck, n, m, i).unwrap();
                let u = e.operator(OperatorKind::Lift, n, m, i).unwrap();
                assert_eq!(
                    u.entries.mul(&d.entries),
                    delta.entries,
                    "n = {n}, m = {m}, i = {i}"
                );
            }
        }
    }
}

#[test]
fn complemented_modified_deck_is_edge_deck_of_complements() {
    // (F - e + f)^c = (F - e)^c - f, summed over the deck
    let mut e = Engine::new();
    for n in 2..=5 {
        let big_n = pair_count(n);
        for m in 1..=big_n {
            let cat = e.catalog(n, m).unwrap();
            let d1_prime = e
                .operator(OperatorKind::EdgeDeck, n, big_n - m + 1, 1)
                .unwrap();
            for idx in 0..cat.len() {
                let g = cat.graph(idx);
                let md = modified_deck(&mut e, &g, 1).unwrap();
                let ed = edge_deck(&mut e, &g, 1).unwrap();
                let lhs = complement_vector(&mut e, &md).unwrap();
                let p_prime = complement_vector(&mut e, &ed).unwrap();
                assert_eq!(lhs, d1_prime.apply(&p_prime).unwrap());
            }
        }
    }
}

#[test]
fn modified_deck_example_on_four_vertices() {
    let mut e = Engine::new();
    let g = LabeledGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
    let md = modified_deck(&mut e, &g, 1).unwrap();
    let mut members: Vec<(u64, i64)> = md
        .members()
        .map(|(c, k)| (c, i64::try_from(k).unwrap()))
        .collect();
    members.sort_by_key(|&(_, k)| k);
    // 2K2 twice, P3 + K1 eight times
    let two_k2 = e
        .canonicalize(&LabeledGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap())
        .unwrap()
        .code;
    let own = e.canonicalize(&g).unwrap().code;
    assert_eq!(members, [(two_k2, 2), (own, 8)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn decks_are_isomorphism_invariant(bits in 0u64..(1 << 10), perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), i in 0usize..3) {
        let mut e = Engine::new();
        let g = LabeledGraph::from_bits(5, bits).unwrap();
        let h = g.relabeled(&perm).unwrap();
        let i = i.min(g.edge_count());
        prop_assert_eq!(edge_deck(&mut e, &g, i).unwrap(), edge_deck(&mut e, &h, i).unwrap());
        prop_assert_eq!(perturbed_deck(&mut e, &g, i).unwrap(), perturbed_deck(&mut e, &h, i).unwrap());
        prop_assert_eq!(modified_deck(&mut e, &g, i).unwrap(), modified_deck(&mut e, &h, i).unwrap());
    }
}
