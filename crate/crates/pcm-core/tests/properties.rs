use pcm_core::{parse_alist, write_alist, BinaryMatrix};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_matrix(m: usize, n: usize, rng: &mut StdRng) -> BinaryMatrix {
    BinaryMatrix::random(m, n, 0.3, rng)
}

/// All words y with Hy = 0, for n <= 16, by brute force.
fn kernel(h: &BinaryMatrix) -> Vec<u32> {
    assert!(h.cols() <= 16);
    let rows: Vec<u32> = (0..h.rows())
        .map(|i| {
            h.row_indices(i)
                .iter()
                .fold(0u32, |acc, &j| acc | 1 << j)
        })
        .collect();
    (0..1u32 << h.cols())
        .filter(|y| rows.iter().all(|r| (r & y).count_ones() % 2 == 0))
        .collect()
}

#[test]
fn alist_round_trip_random_corpus() {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..50 {
        let m = rng.gen_range(1..=12);
        let n = rng.gen_range(m..=40);
        let h = random_matrix(m, n, &mut rng);
        let text = write_alist(&h);
        let doc = parse_alist(text.as_bytes())
            .unwrap_or_else(|e| panic!("trial {trial}: {e}\n{text}"));
        assert_eq!(doc.to_matrix(), h);
        // reparse of a rewrite is the same document
        assert_eq!(parse_alist(doc.to_text().as_bytes()).unwrap(), doc);
    }
}

#[test]
fn to_matrix_inverts_from_matrix_20x40() {
    let mut rng = StdRng::seed_from_u64(8);
    let h = random_matrix(20, 40, &mut rng);
    let doc = pcm_core::AlistDocument::from_matrix(&h);
    assert_eq!(doc.to_matrix(), h);
    assert_eq!(h.ones(), doc.total_ones());
}

#[test]
fn energy_bookkeeping_over_operation_sequences() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..30 {
        let m = rng.gen_range(2..=10);
        let n = rng.gen_range(m..=30);
        let mut h = random_matrix(m, n, &mut rng);
        for _ in 0..200 {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m);
            if i == j {
                continue;
            }
            let predicted = h.transition_delta(i, j).unwrap();
            let before = h.ones();
            let delta = h.row_add(i, j).unwrap();
            assert_eq!(delta, predicted);
            assert_eq!(h.ones() as isize, before as isize + delta);
            assert_eq!(h.ones(), h.recount_ones());
        }
    }
}

#[test]
fn full_rank_is_preserved_and_code_unchanged() {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..30 {
        let m = rng.gen_range(2..=8);
        let n = rng.gen_range(m.max(4)..=16);
        let original = BinaryMatrix::random_full_rank(m, n, 0.4, &mut rng);
        let mut h = original.clone();
        for _ in 0..100 {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m);
            if i != j {
                h.row_add(i, j).unwrap();
            }
        }
        assert_eq!(h.rank(), m);
        assert!(original.same_code(&h).unwrap());
        assert_eq!(kernel(&original), kernel(&h));
    }
}

#[test]
fn same_code_rejects_vectors_outside_the_span() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 20 {
        let m = rng.gen_range(2..=6);
        let n = rng.gen_range(m + 2..=14);
        let h = BinaryMatrix::random_full_rank(m, n, 0.4, &mut rng);
        let basis = h.row_basis();
        // random vector outside the span (exists since m < n)
        let alien = BinaryMatrix::random(1, n, 0.5, &mut rng);
        if alien.ones() == 0 || basis.contains(alien.row(0)) {
            continue;
        }
        let mut rows: Vec<Vec<usize>> = (0..m).map(|i| h.row_indices(i)).collect();
        rows[0] = alien.row_indices(0);
        let other = BinaryMatrix::from_rows(n, &rows);
        assert!(!h.same_code(&other).unwrap());
        assert_ne!(kernel(&h), kernel(&other));
        checked += 1;
    }
}

proptest! {
    #[test]
    fn delta_matches_recount(seed in 0u64..5000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = rng.gen_range(2..=10);
        let n = rng.gen_range(m..=20);
        let mut h = BinaryMatrix::random(m, n, 0.35, &mut rng);
        let i = rng.gen_range(0..m);
        let mut j = rng.gen_range(0..m);
        if i == j { j = (j + 1) % m; }
        let wj_old = h.row_weight(j) as isize;
        let d = h.transition_delta(i, j).unwrap();
        h.row_add(i, j).unwrap();
        prop_assert_eq!(d, h.row_weight(j) as isize - wj_old);
    }

    #[test]
    fn rank_invariant_under_row_adds(seed in 0u64..2000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = rng.gen_range(2..=8);
        let n = rng.gen_range(m..=16);
        let mut h = BinaryMatrix::random(m, n, 0.35, &mut rng);
        let rank_before = h.rank();
        for _ in 0..32 {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m);
            if i != j {
                h.row_add(i, j).unwrap();
            }
        }
        prop_assert_eq!(h.rank(), rank_before);
    }
}
