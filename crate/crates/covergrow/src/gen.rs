//! Seeded random instance generators for tests and benchmarks.

use crate::graph::{
    EdgeColoredHypergraph, EdgeWeightedGraph, Hyperedge, NodeWeightedGraph, WeightedDag,
};
use crate::sampling::RandomSource;
use std::collections::HashSet;

/// Erdos-Renyi graph with unit weights. Edges are sampled by geometric skips
/// over the lexicographic pair sequence, so the cost is `O(n + m)` and the
/// adjacency can be written directly in sorted order without an
/// intermediate edge list.
pub fn gnp(n: usize, p: f64, rng: &mut RandomSource) -> NodeWeightedGraph {
    gnp_with_weights(n, p, 1, 1, rng)
}

/// [`gnp`] with integer node weights drawn uniformly from `lo..=hi` (drawn
/// before the edges).
pub fn gnp_with_weights(
    n: usize,
    p: f64,
    lo: u64,
    hi: u64,
    rng: &mut RandomSource,
) -> NodeWeightedGraph {
    let weights: Vec<f64> = if lo == hi {
        vec![lo as f64; n]
    } else {
        (0..n)
            .map(|_| (lo + rng.next_u64() % (hi - lo + 1)) as f64)
            .collect()
    };
    if n < 2 || p <= 0.0 {
        let offsets = vec![0; n + 1];
        return NodeWeightedGraph::from_sorted_csr(weights, offsets, Vec::new());
    }
    // pass 1 counts degrees, pass 2 replays the identical stream to fill
    let mut counting = rng.clone();
    let mut degree = vec![0usize; n];
    for_each_gnp_pair(n, p, &mut counting, |u, v| {
        degree[u] += 1;
        degree[v] += 1;
    });
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let mut cursor = offsets.clone();
    let mut neighbors = vec![0u32; *offsets.last().unwrap()];
    for_each_gnp_pair(n, p, rng, |u, v| {
        neighbors[cursor[u]] = v as u32;
        cursor[u] += 1;
        neighbors[cursor[v]] = u as u32;
        cursor[v] += 1;
    });
    NodeWeightedGraph::from_sorted_csr(weights, offsets, neighbors)
}

/// Visits each pair `(u, v)`, `u < v`, independently with probability `p`,
/// in lexicographic order.
fn for_each_gnp_pair(n: usize, p: f64, rng: &mut RandomSource, mut emit: impl FnMut(usize, usize)) {
    let total = n * (n - 1) / 2;
    let log1p = (1.0 - p).ln(); // -inf when p == 1, emitting every pair
    let mut t: usize = 0; // next candidate pair index
    let mut row = 0usize; // pair t lives in row `row`
    let mut row_start = 0usize;
    loop {
        let u = rng.next_f64();
        let gap = if p >= 1.0 {
            0.0
        } else {
            ((1.0 - u).ln() / log1p).floor()
        };
        if !gap.is_finite() || gap >= (total - t) as f64 {
            return;
        }
        t += gap as usize;
        while t - row_start >= n - 1 - row {
            row_start += n - 1 - row;
            row += 1;
        }
        emit(row, row + 1 + (t - row_start));
        t += 1;
        if t >= total {
            return;
        }
    }
}

/// Uniform integer weights in `lo..=hi`.
pub fn random_weights(n: usize, lo: u64, hi: u64, rng: &mut RandomSource) -> Vec<f64> {
    (0..n)
        .map(|_| (lo + rng.next_u64() % (hi - lo + 1)) as f64)
        .collect()
}

/// `m` distinct edges on `n` nodes with integer weights in `lo..=hi`.
/// Panics if more edges are requested than distinct pairs exist.
pub fn random_edge_weighted(
    n: usize,
    m: usize,
    lo: u64,
    hi: u64,
    rng: &mut RandomSource,
) -> EdgeWeightedGraph {
    let edges = distinct_pairs(n, m, rng)
        .into_iter()
        .map(|(u, v)| (u, v, (lo + rng.next_u64() % (hi - lo + 1)) as f64))
        .collect::<Vec<_>>();
    EdgeWeightedGraph::new(n, &edges).expect("generated edges are valid")
}

/// `m` distinct forward arcs (tail < head, hence acyclic) with integer
/// weights in `lo..=hi`.
pub fn random_dag(n: usize, m: usize, lo: u64, hi: u64, rng: &mut RandomSource) -> WeightedDag {
    let arcs = distinct_pairs(n, m, rng)
        .into_iter()
        .map(|(u, v)| (u, v, (lo + rng.next_u64() % (hi - lo + 1)) as f64))
        .collect::<Vec<_>>();
    WeightedDag::new(n, &arcs).expect("forward arcs are acyclic")
}

fn distinct_pairs(n: usize, m: usize, rng: &mut RandomSource) -> Vec<(usize, usize)> {
    assert!(n >= 2 && m <= n * (n - 1) / 2, "too many pairs requested");
    let mut seen = HashSet::new();
    let mut pairs = Vec::with_capacity(m);
    while pairs.len() < m {
        let a = rng.next_below(n);
        let b = rng.next_below(n);
        if a == b {
            continue;
        }
        let pair = (a.min(b), a.max(b));
        if seen.insert(pair) {
            pairs.push(pair);
        }
    }
    pairs
}

/// `m` hyperedges on `n` nodes with arities in `1..=max_arity`, colors in
/// `1..=k`, and integer weights in `lo..=hi`.
pub fn random_hypergraph(
    n: usize,
    m: usize,
    k: usize,
    max_arity: usize,
    lo: u64,
    hi: u64,
    rng: &mut RandomSource,
) -> EdgeColoredHypergraph {
    assert!(max_arity <= n && k >= 1);
    let mut hyperedges = Vec::with_capacity(m);
    for _ in 0..m {
        let size = 1 + rng.next_below(max_arity);
        let mut members = Vec::with_capacity(size);
        while members.len() < size {
            let v = rng.next_below(n);
            if !members.contains(&v) {
                members.push(v);
            }
        }
        hyperedges.push(Hyperedge {
            members,
            color: 1 + rng.next_below(k),
            weight: (lo + rng.next_u64() % (hi - lo + 1)) as f64,
        });
    }
    EdgeColoredHypergraph::new(n, k, hyperedges).expect("generated hyperedges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_produces_valid_sorted_adjacency() {
        let mut rng = RandomSource::new(1);
        for &(n, p) in &[(1usize, 0.5), (10, 0.0), (10, 0.3), (20, 0.7), (8, 1.0)] {
            let g = gnp(n, p, &mut rng);
            assert_eq!(g.node_count(), n);
            for u in 0..n {
                let ns = g.neighbors(u);
                assert!(ns.windows(2).all(|w| w[0] < w[1]));
                assert!(ns.iter().all(|&v| v as usize != u && (v as usize) < n));
                for &v in ns {
                    assert!(g.neighbors(v as usize).contains(&(u as u32)));
                }
            }
            if p >= 1.0 {
                assert_eq!(g.edge_count(), n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn gnp_edge_count_tracks_probability() {
        let mut rng = RandomSource::new(2);
        let n = 200;
        let p = 0.3;
        let g = gnp(n, p, &mut rng);
        let expect = p * (n * (n - 1) / 2) as f64;
        let sd = (expect * (1.0 - p)).sqrt();
        assert!(
            (g.edge_count() as f64 - expect).abs() < 6.0 * sd,
            "edge count {} vs expectation {expect}",
            g.edge_count()
        );
    }

    #[test]
    fn gnp_is_seed_deterministic() {
        let a = gnp(50, 0.2, &mut RandomSource::new(5));
        let b = gnp(50, 0.2, &mut RandomSource::new(5));
        assert_eq!(a, b);
    }

    #[test]
    fn generated_instances_are_valid() {
        let mut rng = RandomSource::new(3);
        let g = random_edge_weighted(8, 12, 1, 10, &mut rng);
        assert_eq!(g.edge_count(), 12);
        let d = random_dag(8, 12, 1, 10, &mut rng);
        assert!(d.is_acyclic());
        let h = random_hypergraph(8, 10, 3, 4, 1, 10, &mut rng);
        assert_eq!(h.hyperedges().len(), 10);
    }
}
