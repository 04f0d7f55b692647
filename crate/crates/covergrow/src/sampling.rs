//! Seeded randomness and permutation generation.
//!
//! All randomized algorithms in this crate draw from [`RandomSource`], a
//! small fully-specified generator, so that any run is reproducible from its
//! seed alone and test vectors can be checked against other implementations.

use crate::error::{Error, Result};

/// Deterministic 64-bit generator (xorshift64* with a splitmix64-scrambled
/// seed). Identical seeds produce identical draw streams.
///
/// A source is single-owner: independent runs should use independently
/// seeded sources rather than sharing one.
#[derive(Debug, Clone)]
pub struct RandomSource {
    state: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        // splitmix64 finalizer; xorshift state must be nonzero
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        RandomSource {
            state: if z == 0 { 0x9E37_79B9_7F4A_7C15 } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform draw in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in `0..n`. The modulo bias is below `n / 2^64` and
    /// irrelevant at the scales this crate works with.
    pub fn next_below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }
}

/// A bijection on `0..n`, stored as the visiting order of item ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    order: Vec<usize>,
}

impl Permutation {
    /// Validates that `order` contains each of `0..order.len()` exactly once.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { order })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().copied()
    }

    /// Rank of each item: `positions()[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Permutation distributed as sequential sampling without replacement, each
/// step picking a remaining item with probability `weight / remaining total`.
///
/// Implemented as an exponential race: item `i` gets key `E_i / w_i` with
/// `E_i` standard exponential, and ascending key order realizes the sampling
/// distribution in one `O(n log n)` sort. Zero-weight items sort after all
/// positive-weight items, in uniformly random relative order.
pub fn weighted_shuffle(weights: &[f64], rng: &mut RandomSource) -> Result<Permutation> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    for (i, &w) in weights.iter().enumerate() {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::BadWeight { index: i, value: w });
        }
    }
    // keys are nonnegative, so their f64 bit patterns sort like the values;
    // one u128 packs (zero-weight bucket, key bits, item) for a flat sort
    let mut keyed: Vec<u128> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            let u = rng.next_f64();
            let (bucket, key) = if w > 0.0 {
                (0u64, -(1.0 - u).ln() / w)
            } else {
                (1u64, u)
            };
            let hi = (bucket << 63) | key.to_bits();
            ((hi as u128) << 64) | i as u128
        })
        .collect();
    keyed.sort_unstable();
    Ok(Permutation {
        order: keyed.into_iter().map(|x| x as u64 as usize).collect(),
    })
}

/// Uniform permutation of `0..n` by Fisher-Yates, `O(n)`.
pub fn uniform_shuffle(n: usize, rng: &mut RandomSource) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::ZeroItems);
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.next_below(i + 1);
        order.swap(i, j);
    }
    Ok(Permutation { order })
}
