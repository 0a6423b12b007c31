//! Minimum-movement dispersal of unit intervals, with the final blocks.
//!
//! cargo run -p gged --example disperse

use gged::dispersal::{disperse, initial_partition, DispersalInstance};
use gged::oracle::validate_dispersal;
use gged::q;

fn main() {
    let centers = [q(0, 1), q(1, 2), q(1, 1), q(5, 1), q(21, 4), q(9, 1)];
    for s in [q(1, 1), q(3, 2)] {
        let inst = DispersalInstance::unit(&centers, s.clone()).expect("unit intervals, s >= 1");
        let start = initial_partition(&inst);
        let out = disperse(&inst);
        validate_dispersal(&inst, &out.movement).expect("valid placement");
        println!("s = {s}: total movement {}", out.total);
        println!("  initial runs {:?}", start.blocks().iter().map(|b| (b.first, b.last)).collect::<Vec<_>>());
        println!("  final blocks {:?}", out.blocks);
        for (i, c) in centers.iter().enumerate() {
            println!("  {c:>5} -> {:>5}  ({:+})", out.final_centers[i].to_string(), out.movement.displacements()[i].to_f64());
        }
    }
}
