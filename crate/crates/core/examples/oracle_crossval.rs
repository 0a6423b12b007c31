//! Randomized cross-validation of the fast solver against the brute-force
//! and grid oracles.
//!
//! cargo run -p gged --example oracle_crossval -- [trials] [seed]

use gged::dispersal::{disperse, DispersalInstance};
use gged::oracle::{brute_force_disperse, cross_validate, grid_dp_disperse};
use gged::q;
use gged::random::PRNG_ALGORITHM;

fn main() {
    let mut args = std::env::args().skip(1);
    let trials: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(1000);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(42);

    let inst = DispersalInstance::unit(&[q(0, 1), q(1, 3), q(2, 3), q(1, 1)], q(3, 2)).unwrap();
    let brute = brute_force_disperse(&inst).unwrap();
    println!(
        "four intervals at spacing 3/2: fast {}, brute {}, grid {}; witness runs {:?}",
        disperse(&inst).total,
        brute.total,
        grid_dp_disperse(&inst),
        brute.witness_partition
    );

    println!("prng {PRNG_ALGORITHM} seed={seed}");
    let report = cross_validate(10, trials, seed);
    println!("{} trials, {} mismatches", report.trials, report.mismatches.len());
    for m in report.mismatches.iter().take(5) {
        println!("  {m}");
    }
}
