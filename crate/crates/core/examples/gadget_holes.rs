//! Interior holes of cell gadgets and the blocking checks of the variable
//! gadget.
//!
//! cargo run -p gged --example gadget_holes

use gged::geometry::Metric;
use gged::reductions::blocking::check_blocking_lemmas;
use gged::reductions::holes::{check_cell_hole, check_square_hole_empty, grid_diameter_lower_bound, shape_instance, CellShape};
use gged::q;

fn main() {
    println!("four 6-heavy disks on a unit square leave no hole: {}", check_square_hole_empty());
    for shape in CellShape::ALL {
        let c = check_cell_hole(shape, Metric::L2);
        let (coll, idx) = shape_instance(shape, Metric::L2);
        let lower = grid_diameter_lower_bound(&coll, idx, 128, &q(2, 1)).unwrap();
        println!(
            "{:<12} vertices {:>2}  diameter in [{:.4}, {:.4}]  claimed < {}  {}",
            shape.name(),
            c.report.vertices,
            lower.to_f64().sqrt(),
            c.report.diameter_sq_upper.to_f64().sqrt(),
            c.bound,
            if c.within_bound { "ok" } else { "EXCEEDED" }
        );
    }
    for metric in [Metric::L1, Metric::L2] {
        let r = check_blocking_lemmas(metric);
        println!("blocking checks under {metric:?}: {}/{} pass", r.checks.iter().filter(|c| c.passed).count(), r.checks.len());
        for c in &r.checks {
            println!("  [{}] {} ({})", if c.passed { "x" } else { " " }, c.name, c.detail);
        }
    }
}
