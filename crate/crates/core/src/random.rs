//! Seeded instance generators shared by the tests, the oracle cross-check and
//! the CLI.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rational::{q, Rational};

/// Recorded in CLI output headers so runs can be reproduced.
pub const PRNG_ALGORITHM: &str = "ChaCha8Rng/rand_chacha-0.3/seed_from_u64";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `{lo + k / den}` in `[lo, hi]` for a random `den` in `1..=max_den`.
pub fn rational_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let k = rng.gen_range(0..=(hi - lo) * den);
    &Rational::from_integer(lo) + &q(k, den)
}

/// `n` centers in `[0, n]`.
pub fn centers<R: Rng>(rng: &mut R, n: usize, max_den: i64) -> Vec<Rational> {
    (0..n).map(|_| rational_in(rng, 0, n as i64, max_den)).collect()
}

/// One of `1`, `3/2`, `2`.
pub fn separation<R: Rng>(rng: &mut R) -> Rational {
    [q(1, 1), q(3, 2), q(2, 1)][rng.gen_range(0..3)].clone()
}

/// `n` centers on the grid `k / 1000` in `[0, n]`, used for timing runs.
pub fn bench_centers<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| q(rng.gen_range(0..=(n as i64) * 1000), 1000))
        .collect()
}
