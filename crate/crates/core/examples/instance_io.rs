//! Reading and writing JSON instance files.
//!
//! cargo run -p gged --example instance_io

use gged::geometry::{Metric, Point};
use gged::io::{emit_instance, parse_instance, Instance};
use gged::reductions::gadgets::build_cell_gadget;

fn main() {
    let text = r#"{"kind": "unit_intervals", "s": "3/2", "items": ["0", "1/3", 2, "2.25"]}"#;
    let inst = parse_instance(text).expect("valid file");
    println!("{inst:?}");

    for bad in [
        r#"{"kind": "unit_intervals", "items": [0.1]}"#,
        r#"{"kind": "unit_intervals", "items": [], "sep": "1"}"#,
        r#"{"kind": "disks", "items": []}"#,
    ] {
        println!("rejected: {}", parse_instance(bad).unwrap_err());
    }

    let cell = Instance::Disks(build_cell_gadget(&Point::from_ints(0, 0), Metric::L1));
    let json = emit_instance(&cell);
    assert_eq!(parse_instance(&json).unwrap(), cell);
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));
}
