mod common;

use common::{centers, sorted_units};
use gged::editor::{solve, solve_acyclic, solve_edgeless, solve_k_clique_free, Property};
use gged::geometry::IntervalCollection;
use gged::graph::{build_interval_graph, is_acyclic, is_edgeless, max_clique_interval};
use gged::oracle::brute_force_k_clique_free;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn k_clique_free_matches_oracle(cs in centers(0..=6), k in 2usize..=4) {
        let r = solve_k_clique_free(&IntervalCollection::unit(&cs), k).unwrap();
        prop_assert_eq!(r.total, brute_force_k_clique_free(&cs, k).unwrap());
    }

    #[test]
    fn outputs_satisfy_properties(cs in centers(0..=30), k in 2usize..=5) {
        let c = IntervalCollection::unit(&cs);
        let e = solve_edgeless(&c).unwrap();
        prop_assert!(is_edgeless(&build_interval_graph(&e.final_intervals)));
        let a = solve_acyclic(&c).unwrap();
        prop_assert!(is_acyclic(&build_interval_graph(&a.final_intervals)));
        let f = solve_k_clique_free(&c, k).unwrap();
        let sorted = f.final_intervals.sorted();
        prop_assert!(max_clique_interval(&sorted).unwrap() < k);
        let fc = sorted.centers();
        for i in 0..fc.len().saturating_sub(k - 1) {
            prop_assert!(&fc[i + k - 1] - &fc[i] >= gged::Rational::one());
        }
    }

    #[test]
    fn cost_monotone_in_k(cs in centers(0..=20)) {
        let c = IntervalCollection::unit(&cs);
        let costs: Vec<_> = (2..=6).map(|k| solve(&c, Property::KCliqueFree(k)).unwrap().total).collect();
        for w in costs.windows(2) {
            prop_assert!(w[1] <= w[0]);
        }
        prop_assert_eq!(&costs[0], &solve_edgeless(&c).unwrap().total);
        prop_assert_eq!(&costs[1], &solve_acyclic(&c).unwrap().total);
    }

    #[test]
    fn already_free_costs_nothing(cs in centers(0..=20), k in 2usize..=5) {
        let omega = max_clique_interval(&sorted_units(&cs)).unwrap();
        let r = solve_k_clique_free(&IntervalCollection::unit(&cs), k).unwrap();
        prop_assert_eq!(r.total.is_zero(), omega < k);
    }
}
