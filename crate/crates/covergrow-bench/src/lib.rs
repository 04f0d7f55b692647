//! Shared instance builders for the criterion benchmarks.

use covergrow::gen;
use covergrow::{NodeWeightedGraph, RandomSource};

/// Sparse random graph with average degree 8 and integer weights 1..=10.
pub fn sparse_weighted(n: usize, seed: u64) -> NodeWeightedGraph {
    let mut rng = RandomSource::new(seed);
    let p = 8.0 / (n as f64 - 1.0);
    gen::gnp_with_weights(n, p, 1, 10, &mut rng)
}

/// Dense unit-weight random graph with edge probability 1/2.
pub fn dense_unit(n: usize, seed: u64) -> NodeWeightedGraph {
    let mut rng = RandomSource::new(seed);
    gen::gnp(n, 0.5, &mut rng)
}
