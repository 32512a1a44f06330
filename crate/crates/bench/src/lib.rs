//! Fixtures shared by the benchmarks.

use extdim_core::corpus::spider;
use extdim_core::random::random_sum;
use extdim_core::{Algebra, Representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn spider_algebra(n: usize) -> Algebra {
    spider(n, "Q")
}

/// Seeded modules of total dimension at most `max_dim`.
pub fn sample_modules(alg: &Algebra, count: usize, max_dim: usize, seed: u64) -> Vec<Representation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_sum(&mut rng, alg, max_dim)).collect()
}
