mod common;

use proptest::prelude::*;

use spexlab::canon::{canonical_form, GraphKey};
use spexlab::detect::{contains_odd_wheel, longest_path_order};
use spexlab::io::{decode_edge_list, decode_graph6, encode_edge_list, encode_graph6};
use spexlab::spectral::{quotient, spectral_radius};
use spexlab::walks::{vertex_walks, walk_compare, walk_profile, Relation};
use spexlab::Graph;

use common::{oracle_longest_path, oracle_odd_wheel};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap_or(false))
        })
    })
}

fn dense_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(prop::bool::weighted(0.75), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap_or(false))
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn odd_wheel_detector_matches_oracle(g in dense_graph(9), k in 2usize..=4) {
        prop_assert_eq!(contains_odd_wheel(&g, k).unwrap(), oracle_odd_wheel(&g, k));
    }

    #[test]
    fn longest_path_matches_oracle(g in graph(8)) {
        prop_assert_eq!(longest_path_order(&g).unwrap(), oracle_longest_path(&g));
    }

    #[test]
    fn walks_split_at_every_level(g in graph(10), a in 0usize..6, b in 0usize..6) {
        let table = vertex_walks(&g, a + b);
        let profile = walk_profile(&g, a + b + 1);
        let split: num_bigint::BigUint = (0..g.order()).map(|v| &table[a][v] * &table[b][v]).sum();
        let total = if a + b == 0 { num_bigint::BigUint::from(g.order()) } else { profile.level(a + b).clone() };
        prop_assert_eq!(split, total);
    }

    #[test]
    fn walk_order_is_antisymmetric(a in graph(7), b in graph(7)) {
        let ab = walk_compare(&a, &b, None).relation;
        let ba = walk_compare(&b, &a, None).relation;
        let flipped = match ab {
            Relation::Succ => Relation::Prec,
            Relation::Prec => Relation::Succ,
            Relation::Equiv => Relation::Equiv,
        };
        prop_assert_eq!(ba, flipped);
    }

    #[test]
    fn relabeling_preserves_invariants((g, perm) in graph(9).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(GraphKey::of(&g), GraphKey::of(&h));
        prop_assert_eq!(walk_profile(&g, 8), walk_profile(&h, 8));
        let (rg, rh) = (spectral_radius(&g, 1e-10).unwrap(), spectral_radius(&h, 1e-10).unwrap());
        prop_assert!((rg.radius - rh.radius).abs() < 1e-8);
    }

    #[test]
    fn encodings_round_trip(g in graph(20)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(decode_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn radius_lies_between_average_and_max_degree(g in graph(12)) {
        let r = spectral_radius(&g, 1e-10).unwrap();
        let n = g.order() as f64;
        let average = 2.0 * g.size() as f64 / n;
        prop_assert!(r.radius >= average - 1e-8);
        prop_assert!(r.radius <= g.max_degree() as f64 + 1e-8);
        prop_assert!(r.residual <= 1e-10);
    }

    #[test]
    fn discrete_partition_quotient_is_the_adjacency(g in graph(8)) {
        let parts: Vec<Vec<usize>> = (0..g.order()).map(|v| vec![v]).collect();
        let q = quotient(&g, &parts).unwrap();
        prop_assert!(q.equitable);
        let rows = q.integer_rows().unwrap();
        for (u, row) in rows.iter().enumerate() {
            for (v, &x) in row.iter().enumerate() {
                prop_assert_eq!(x, i64::from(g.has_edge(u, v)));
            }
        }
    }
}
