//! Editing a unit interval graph into an edgeless, acyclic or k-clique-free
//! graph at minimum total movement.
//!
//! cargo run -p gged --example edit_properties

use gged::editor::{residue_classes, solve, Property};
use gged::geometry::IntervalCollection;
use gged::graph::{build_interval_graph, max_clique_interval};
use gged::q;

fn main() {
    let centers: Vec<_> = [0, 0, 1, 2, 2, 3, 6, 6, 6, 7].iter().map(|&c| q(c, 2)).collect();
    let intervals = IntervalCollection::unit(&centers);
    let g = build_interval_graph(&intervals);
    println!(
        "{} intervals, {} edges, max clique {}",
        intervals.len(),
        g.edge_count(),
        max_clique_interval(&intervals.sorted()).unwrap()
    );
    for property in [Property::Edgeless, Property::Acyclic, Property::KCliqueFree(3), Property::KCliqueFree(4)] {
        let r = solve(&intervals, property).expect("valid unit instance");
        let after = r.final_intervals.sorted();
        println!(
            "{property:?}: cost {}, max clique after {}, final {:?}",
            r.total,
            max_clique_interval(&after).unwrap(),
            after.centers().iter().map(|c| c.to_string()).collect::<Vec<_>>()
        );
    }
    // Positions i with the same i mod (k - 1) are dispersed together.
    println!("residue classes for k = 4: {:?}", residue_classes(&intervals, 4));
}
