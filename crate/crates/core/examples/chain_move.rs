//! Assembles the worked formula from gadgets and resolves every intersection
//! with a satisfying assignment; writes before and after SVGs.
//!
//! cargo run -p gged --example chain_move -- [out_dir]

use std::path::PathBuf;

use gged::geometry::Metric;
use gged::reductions::layout::{evaluate, worked_formula, Assembly, WORKED_ASSIGNMENT};
use gged::reductions::svg::render_svg;

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/chain_move".into()));
    std::fs::create_dir_all(&out).expect("output directory");

    let spec = worked_formula();
    let mut asm = Assembly::build(&spec, Metric::L1);
    let edges = asm.disks.intersecting_pairs();
    let unintended = edges.iter().filter(|&&(a, b)| !asm.intended_intersection(a, b)).count();
    println!("{} disks, {} intersecting pairs, {unintended} unintended", asm.disks.len(), edges.len());
    std::fs::write(out.join("before.svg"), render_svg(&asm.disks)).unwrap();

    println!("assignment {WORKED_ASSIGNMENT:?} satisfies the formula: {}", evaluate(&spec, &WORKED_ASSIGNMENT));
    let report = asm.run(&WORKED_ASSIGNMENT).expect("script is feasible");
    println!(
        "{} moves, largest weighted move {}, edgeless afterwards: {}",
        report.steps, report.max_weighted_cost_text, report.final_edgeless
    );
    std::fs::write(out.join("after.svg"), render_svg(&asm.disks)).unwrap();

    let unsat = [false, true, false, false];
    println!("{unsat:?} leaves a clause unsatisfied; script available: {}", Assembly::build(&spec, Metric::L1).satisfying_script(&unsat).is_some());
    println!("SVGs in {}", out.display());
}
