//! The weighted interval instance built from 3-Partition, and the placement
//! a partition certifies.
//!
//! cargo run -p gged --example three_partition

use gged::graph::build_interval_graph;
use gged::oracle::validate_weighted_edgeless;
use gged::random;
use gged::reductions::three_partition::{
    build_3partition_instance, certificate_cost, certificate_movement, random_yes_instance, IntervalRole,
};

fn main() {
    let mut rng = random::rng(7);
    let (tp, triples) = random_yes_instance(&mut rng, 3, 40).expect("B = 40 leaves room for sizes");
    println!("sizes {:?}, B = {}, partition {triples:?}", tp.sizes, tp.b);

    let inst = build_3partition_instance(&tp).unwrap();
    for (it, role) in inst.intervals.items.iter().zip(&inst.roles) {
        if !matches!(role, IntervalRole::Item(_)) {
            println!("  {role:?}: [{}, {}] weight {}", it.left(), it.right(), it.weight);
        }
    }
    println!("initial edges {}, budget {}", build_interval_graph(&inst.intervals).edge_count(), inst.budget);

    let mv = certificate_movement(&inst, &triples).unwrap();
    validate_weighted_edgeless(&inst.intervals, &mv, &inst.budget).expect("certificate fits the budget");
    println!("certificate cost {} < budget {}", certificate_cost(&tp, &triples), inst.budget);

    let mut wrong = triples.clone();
    let j = (0..3).find(|&j| tp.sizes[wrong[1][j]] != tp.sizes[wrong[0][0]]).expect("two sizes differ");
    let (a, b) = (wrong[0][0], wrong[1][j]);
    wrong[0][0] = b;
    wrong[1][j] = a;
    println!("swapped items across triples: {:?}", tp.check_partition(&wrong).err());
}
