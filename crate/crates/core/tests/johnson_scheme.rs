use edgedeck_core::arith::pair_count;
use edgedeck_core::johnson::{
    b_matrix, eigenvalues, intertwine_check, k_edge_eigenvalue, minus_m_criterion,
    relation_eigenvalue, relation_matrix, search_vanishing, verify_spectrum, JohnsonParams,
    DEFAULT_SIZE_GUARD,
};
use edgedeck_core::{Engine, Error, Matrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};

mod common;

/// `|U ∩ V|` counted directly on index lists, independent of the bitmask code.
fn subsets(ground: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, ground: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..ground {
            cur.push(x);
            go(x + 1, ground, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, ground, m, &mut Vec::new(), &mut out);
    out
}

#[test]
fn relations_partition_the_all_ones_matrix() {
    for ground in 0..=8 {
        for m in 0..=ground {
            let size = common::binom(ground as u64, m as u64) as usize;
            let mut sum = Matrix::zeros(size, size);
            for i in 0..=m {
                sum = sum.add(&relation_matrix(ground, m, i, DEFAULT_SIZE_GUARD).unwrap());
            }
            assert!(
                (0..size).all(|r| (0..size).all(|c| sum.get(r, c).is_one())),
                "N = {ground}, m = {m}"
            );
        }
    }
}

#[test]
fn relation_matrix_against_list_oracle() {
    for (ground, m) in [(4, 2), (5, 2), (6, 3), (7, 3)] {
        let sets = subsets(ground, m);
        // list order is lexicographic; ascending bitmask order is colex, so compare as sets of pairs
        let masks: Vec<u64> = sets
            .iter()
            .map(|s| s.iter().map(|&x| 1u64 << x).sum())
            .collect();
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by_key(|&a| masks[a]);
        for i in 0..=m {
            let j = relation_matrix(ground, m, i, DEFAULT_SIZE_GUARD).unwrap();
            for (r, &a) in order.iter().enumerate() {
                for (c, &b) in order.iter().enumerate() {
                    let meet = sets[a].iter().filter(|x| sets[b].contains(x)).count();
                    assert_eq!(j.get(r, c).is_one(), meet + i == m);
                }
            }
        }
    }
}

#[test]
fn named_matrix_examples() {
    let j = relation_matrix(4, 2, 1, DEFAULT_SIZE_GUARD).unwrap();
    assert_eq!(j.rows(), 6);
    assert!(j.row_sums().iter().all(|s| *s == BigInt::from(4)));
    assert_eq!(
        relation_matrix(5, 2, 0, DEFAULT_SIZE_GUARD).unwrap(),
        Matrix::identity(10)
    );
    let antipodal = relation_matrix(6, 3, 3, DEFAULT_SIZE_GUARD).unwrap();
    assert!(antipodal.row_sums().iter().all(|s| s.is_one()));
    assert_eq!(antipodal.transpose(), antipodal);

    let b = b_matrix(JohnsonParams::new(6, 3, 1).unwrap(), DEFAULT_SIZE_GUARD).unwrap();
    assert!(b.row_sums().iter().all(|s| *s == BigInt::from(12)));
    let b = b_matrix(JohnsonParams::new(6, 3, 2).unwrap(), DEFAULT_SIZE_GUARD).unwrap();
    assert!(b.row_sums().iter().all(|s| *s == BigInt::from(30)));
    let b = b_matrix(JohnsonParams::new(4, 2, 1).unwrap(), DEFAULT_SIZE_GUARD).unwrap();
    assert!((0..6).all(|r| *b.get(r, r) == BigInt::from(2)));

    assert!(matches!(
        relation_matrix(30, 15, 1, DEFAULT_SIZE_GUARD),
        Err(Error::TooLarge { .. })
    ));
    assert!(matches!(
        k_edge_eigenvalue(JohnsonParams::new(6, 3, 1).unwrap(), 4),
        Err(Error::InvalidParameters(_))
    ));
    assert!(JohnsonParams::new(4, 5, 1).is_err());
}

#[test]
fn spectrum_grid_and_k1_singularity() {
    for ground in 1..=10 {
        for m in 0..=ground.min(5) {
            for k in 0..=m.min(2) {
                let params = JohnsonParams::new(ground, m, k).unwrap();
                match verify_spectrum(params, DEFAULT_SIZE_GUARD) {
                    Ok(report) => {
                        assert!(report.regular);
                        if k == 1 {
                            assert_eq!(
                                report.zero_eigenvalue.is_some(),
                                2 * m <= ground,
                                "{params:?}"
                            );
                            assert_eq!(
                                minus_m_criterion(ground, m).unwrap().holds,
                                report.zero_eigenvalue.is_some()
                            );
                        }
                    }
                    Err(Error::TooLarge { .. }) => {}
                    Err(e) => panic!("{params:?}: {e}"),
                }
            }
        }
    }
}

#[test]
fn k1_closed_form() {
    for ground in 0..=40usize {
        for m in 0..=ground {
            let params = JohnsonParams::new(ground, m, 1.min(m)).unwrap();
            if params.k == 0 {
                continue;
            }
            for j in 0..=params.max_index() {
                let want = BigInt::from(
                    m as i64 + (m as i64 - j as i64) * (ground as i64 - m as i64 - j as i64)
                        - j as i64,
                );
                assert_eq!(k_edge_eigenvalue(params, j).unwrap(), want);
            }
            // J_1 itself: the Johnson graph eigenvalue (m-j)(N-m-j) - j
            for j in 0..=params.max_index() {
                let want = (m as i64 - j as i64) * (ground as i64 - m as i64 - j as i64) - j as i64;
                assert_eq!(relation_eigenvalue(ground, m, 1, j), BigInt::from(want));
            }
        }
    }
    assert_eq!(
        eigenvalues(JohnsonParams::new(6, 3, 1).unwrap()),
        [12, 6, 2, 0].map(BigInt::from)
    );
    assert_eq!(
        eigenvalues(JohnsonParams::new(6, 4, 1).unwrap()),
        [12, 6, 2].map(BigInt::from)
    );
}

#[test]
fn intertwining_small_graphs() {
    let mut e = Engine::new();
    for n in 1..=4 {
        for m in 0..=pair_count(n) {
            let r = intertwine_check(&mut e, n, m).unwrap();
            assert_eq!(r.p_rank, r.classes);
        }
    }
    for m in [1, 2, 9, 10] {
        intertwine_check(&mut e, 5, m).unwrap();
    }
    let r = intertwine_check(&mut e, 4, 4).unwrap();
    assert_eq!((r.classes, r.labelled), (2, 15));
    assert!(intertwine_check(&mut e, 6, 1).is_err());
}

#[test]
fn scan_k1_is_empty_and_hits_reproduce() {
    let small = search_vanishing(6, 1);
    assert!(small.hits.is_empty());
    let report = search_vanishing(30, 3);
    assert!(report.hits.iter().all(|h| h.k >= 2));
    for h in &report.hits {
        let params = JohnsonParams::new(h.ground, h.m, h.k).unwrap();
        assert!(k_edge_eigenvalue(params, h.j).unwrap().is_zero());
        if let Ok(b) = b_matrix(params, DEFAULT_SIZE_GUARD) {
            assert!(b.rank() < b.rows());
        }
    }
}
