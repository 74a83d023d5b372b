//! Randomized property tests over the combinatorial kernels.

use polygraph_lab::bounds;
use polygraph_lab::io;
use polygraph_lab::polygraph::{a_s, b_s, b_s_positive, b_s_positive_m3, DistanceMultiset};
use polygraph_lab::spectral;
use polygraph_lab::{graph, DistanceMultiset as Dm};
use proptest::prelude::*;

proptest! {
    /// The existence criterion for the distance table agrees with the sign
    /// of the degree formula.
    #[test]
    fn b_s_sign_matches_table_existence(
        mut entries in proptest::collection::vec(0usize..=5, 1..=3),
        d in 3usize..=6,
    ) {
        entries.sort_unstable();
        if entries.iter().all(|&e| e == 0) {
            return Ok(());
        }
        let s = DistanceMultiset::new(entries.clone()).unwrap();
        let table = b_s_positive(&s).unwrap();
        prop_assert_eq!(table.is_some(), b_s(&s, d) > 0, "S = {:?}, d = {}", entries, d);
        if let Some(rows) = table {
            // Even column sums and per-column triangle inequality.
            for j in 0..s.m() {
                let col = [rows[0][j], rows[1][j], rows[2][j]];
                prop_assert_eq!(col.iter().sum::<usize>() % 2, 0);
                let max = *col.iter().max().unwrap();
                prop_assert!(2 * max <= col.iter().sum::<usize>());
            }
        }
        if entries.len() == 3 {
            prop_assert_eq!(
                b_s_positive_m3(entries[0], entries[1], entries[2]),
                b_s(&s, d) > 0
            );
        }
    }

    /// a_S counts one vertex per arrangement-and-sphere choice, so it is the
    /// multinomial times the sphere-size product.
    #[test]
    fn a_s_factorization(
        mut entries in proptest::collection::vec(0usize..=4, 1..=3),
        d in 3usize..=6,
    ) {
        entries.sort_unstable();
        let s = DistanceMultiset::new(entries.clone()).unwrap();
        let spheres: u64 = entries
            .iter()
            .map(|&l| if l == 0 { 1 } else { (d as u64) * (d as u64 - 1).pow(l as u32 - 1) })
            .product();
        prop_assert_eq!(a_s(&s, d), s.multinomial() * spheres);
    }

    /// chi_S is symmetric in its arguments.
    #[test]
    fn chi_is_symmetric(
        lambdas in proptest::collection::vec(-3.0f64..3.0, 3),
        shuffle in 0usize..6,
        d in 3usize..=5,
    ) {
        let s = Dm::new(vec![1, 2, 3]).unwrap();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let p = perms[shuffle];
        let permuted: Vec<f64> = p.iter().map(|&i| lambdas[i]).collect();
        let x = spectral::chi(&s, d, &lambdas);
        let y = spectral::chi(&s, d, &permuted);
        prop_assert!((x - y).abs() <= 1e-9 * (1.0 + x.abs()));
    }

    /// Edge-list serialization round-trips.
    #[test]
    fn edge_list_round_trip(n in 2usize..=10) {
        let g = graph::cycle(2 * n).unwrap();
        let text = io::write_edge_list(&g);
        let h = io::parse_edge_list(&text).unwrap();
        prop_assert_eq!(io::write_edge_list(&h), text);
    }

    /// Mixing intervals are well-formed and centered on the expectation.
    #[test]
    fn eml_interval_shape(
        a in 1usize..=12,
        b in 1usize..=12,
        lambda in 0.0f64..3.0,
    ) {
        let (lo, hi) = spectral::eml_interval(12, 5.0, lambda, a as f64, b as f64);
        let mid = 5.0 * a as f64 * b as f64 / 12.0;
        prop_assert!(lo <= mid + 1e-12 && mid <= hi + 1e-12);
        prop_assert!((mid - lo - (hi - mid)).abs() < 1e-9);
    }

    /// The walk census grows with t and with the branching surplus.
    #[test]
    fn census_monotonicity(b in 2usize..=5, extra in 2usize..=6, t in 1usize..=6) {
        let a = b + 1 + extra;
        let c1 = bounds::catalan_walk_census(a, b, t);
        prop_assert!(bounds::catalan_walk_census(a, b, t + 1) > c1);
        prop_assert!(bounds::catalan_walk_census(a + 1, b, t) >= c1);
    }
}
