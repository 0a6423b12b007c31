mod common;

use common::{centers, sorted_units};
use gged::geometry::IntervalCollection;
use gged::graph::{
    build_interval_graph, build_interval_graph_naive, has_k_clique, is_acyclic, is_edgeless, max_clique_exhaustive,
    max_clique_interval,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn sweep_matches_naive(cs in centers(0..=50)) {
        let c = IntervalCollection::unit(&cs);
        let mut fast = build_interval_graph(&c).edges();
        let mut slow = build_interval_graph_naive(&c).edges();
        fast.sort();
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn clique_sweep_matches_exhaustive(cs in centers(0..=12)) {
        let sorted = sorted_units(&cs);
        let g = build_interval_graph_naive(&IntervalCollection::unit(&cs));
        prop_assert_eq!(max_clique_interval(&sorted).unwrap(), max_clique_exhaustive(&g).unwrap());
    }

    #[test]
    fn unit_interval_acyclic_iff_triangle_free(cs in centers(0..=20)) {
        let g = build_interval_graph(&IntervalCollection::unit(&cs));
        let omega = max_clique_interval(&sorted_units(&cs)).unwrap();
        prop_assert_eq!(is_acyclic(&g), omega < 3);
        prop_assert_eq!(is_edgeless(&g), omega < 2);
        for k in 1..5 {
            prop_assert_eq!(has_k_clique(&g, k).unwrap(), omega >= k);
        }
    }
}
