mod common;

use gged::geometry::Metric;
use gged::io::{emit_instance, parse_instance, Instance};
use gged::oracle::validate_weighted_edgeless;
use gged::random;
use gged::reductions::holes::{check_cell_hole, grid_diameter_lower_bound, shape_instance, CellShape};
use gged::reductions::three_partition::{
    build_3partition_instance, certificate_cost, certificate_movement, random_yes_instance,
};
use gged::{q, Rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificate_is_edgeless_within_budget(seed in any::<u64>(), m in 1usize..=4, b in 12u64..=60) {
        let mut rng = random::rng(seed);
        let Some((tp, triples)) = random_yes_instance(&mut rng, m, b) else { return Ok(()) };
        let inst = build_3partition_instance(&tp).unwrap();
        let mv = certificate_movement(&inst, &triples).unwrap();
        prop_assert!(validate_weighted_edgeless(&inst.intervals, &mv, &inst.budget).is_ok());
        let weights: Vec<Rational> = inst.intervals.items.iter().map(|i| i.weight.clone()).collect();
        let cost = mv.weighted_total(&weights);
        prop_assert_eq!(&cost, &certificate_cost(&tp, &triples));
        prop_assert!(cost < inst.budget);
        // Any heavy separator or border moved by one unit alone busts the budget.
        let heavy = &inst.intervals.items.last().unwrap().weight;
        prop_assert!(*heavy > inst.budget);
    }

    #[test]
    fn generated_instances_round_trip(seed in any::<u64>(), m in 1usize..=4) {
        let mut rng = random::rng(seed);
        let Some((tp, _)) = random_yes_instance(&mut rng, m, 24) else { return Ok(()) };
        let inst = Instance::WeightedIntervals { intervals: build_3partition_instance(&tp).unwrap().intervals, s: None };
        prop_assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
        let cs = random::centers(&mut rng, 7, 5);
        let unit = Instance::UnitIntervals { centers: cs, s: Some(q(3, 2)) };
        prop_assert_eq!(parse_instance(&emit_instance(&unit)).unwrap(), unit);
    }
}

#[test]
fn grid_lower_bound_below_vertex_bound() {
    for shape in CellShape::ALL {
        for metric in [Metric::L1, Metric::L2] {
            let check = check_cell_hole(shape, metric);
            let (coll, idx) = shape_instance(shape, metric);
            let lower = grid_diameter_lower_bound(&coll, idx, 64, &q(2, 1)).unwrap();
            assert!(lower <= check.report.diameter_sq_upper, "{shape:?} {metric:?}");
            assert!(lower.is_positive(), "{shape:?}");
        }
    }
}
