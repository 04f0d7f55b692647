//! Exact brute-force solvers and the Monte-Carlo ratio estimator.
//!
//! Every solver enumerates (with pruning where it helps) and is guarded by a
//! hard size limit: past the limit it rejects with an explicit error rather
//! than falling back to a heuristic, so a returned optimum can be trusted
//! absolutely.

use crate::clustering::{cc_cost, pivot, stc_from_clustering, Clustering, StcLabeling};
use crate::cover::{neighbor_cover_randomized, CoverResult};
use crate::deletion::{colorec, ded2, mind2m};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_open_wedges, EdgeColoredHypergraph, EdgeWeightedGraph, Instance, NodeWeightedGraph,
    WeightedDag,
};
use crate::sampling::{uniform_shuffle, RandomSource};

/// Node limit for [`exact_vertex_cover`].
pub const MAX_EXACT_VC_NODES: usize = 24;
/// Node limit for [`exact_cc`] (set-partition enumeration).
pub const MAX_EXACT_CC_NODES: usize = 9;
/// Node limit for [`exact_minstc`] (pair-subset search).
pub const MAX_EXACT_STC_NODES: usize = 7;
/// Item limit for [`exact_mind2m`] and [`exact_ded2`].
pub const MAX_EXACT_ITEMS: usize = 20;
/// Labeling-count limit for [`exact_colorec`].
pub const MAX_EXACT_LABELINGS: usize = 1_000_000;

/// An exact optimum together with one witness achieving it.
#[derive(Debug, Clone, PartialEq)]
pub struct OptResult<W> {
    pub opt_cost: f64,
    pub witness: W,
}

/// Minimum-weight vertex cover by branch and bound over uncovered edges.
/// The lower bound is the weight of a greedy matching on the uncovered
/// part, which is feasible for the covering dual and therefore sound.
pub fn exact_vertex_cover(g: &NodeWeightedGraph) -> Result<OptResult<Vec<usize>>> {
    guard("node count", g.node_count(), MAX_EXACT_VC_NODES)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // any cover works as the initial incumbent; take all non-isolated nodes
    let mut best_set: Vec<usize> = (0..g.node_count()).filter(|&v| g.degree(v) > 0).collect();
    let mut best_cost: f64 = best_set.iter().map(|&v| g.weight(v)).sum();
    let mut in_cover = vec![false; g.node_count()];
    branch_vc(g, &edges, &mut in_cover, 0.0, &mut best_cost, &mut best_set);
    best_set.sort_unstable();
    Ok(OptResult {
        opt_cost: best_cost,
        witness: best_set,
    })
}

fn branch_vc(
    g: &NodeWeightedGraph,
    edges: &[(usize, usize)],
    in_cover: &mut Vec<bool>,
    cost: f64,
    best_cost: &mut f64,
    best_set: &mut Vec<usize>,
) {
    if cost + matching_bound(g, edges, in_cover) >= *best_cost {
        return;
    }
    let uncovered = edges
        .iter()
        .find(|&&(u, v)| !in_cover[u] && !in_cover[v])
        .copied();
    match uncovered {
        None => {
            if cost < *best_cost {
                *best_cost = cost;
                *best_set = (0..g.node_count()).filter(|&v| in_cover[v]).collect();
            }
        }
        Some((u, v)) => {
            for pick in [u, v] {
                in_cover[pick] = true;
                branch_vc(g, edges, in_cover, cost + g.weight(pick), best_cost, best_set);
                in_cover[pick] = false;
            }
        }
    }
}

fn matching_bound(g: &NodeWeightedGraph, edges: &[(usize, usize)], in_cover: &[bool]) -> f64 {
    let mut used = vec![false; g.node_count()];
    let mut bound = 0.0;
    for &(u, v) in edges {
        if !in_cover[u] && !in_cover[v] && !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            bound += g.weight(u).min(g.weight(v));
        }
    }
    bound
}

/// Minimum number of clustering mistakes over all set partitions of the
/// nodes; witness is a cluster assignment with indices `1..=k`.
pub fn exact_cc(g: &NodeWeightedGraph) -> Result<OptResult<Vec<usize>>> {
    guard("node count", g.node_count(), MAX_EXACT_CC_NODES)?;
    let n = g.node_count();
    if n == 0 {
        return Ok(OptResult {
            opt_cost: 0.0,
            witness: Vec::new(),
        });
    }
    let mut assignment = vec![0usize; n];
    let mut best_cost = usize::MAX;
    let mut best = Vec::new();
    partition_search(g, &mut assignment, 0, 0, &mut best_cost, &mut best);
    Ok(OptResult {
        opt_cost: best_cost as f64,
        witness: best,
    })
}

fn partition_search(
    g: &NodeWeightedGraph,
    assignment: &mut Vec<usize>,
    node: usize,
    used: usize,
    best_cost: &mut usize,
    best: &mut Vec<usize>,
) {
    if node == g.node_count() {
        let c = Clustering::from_assignment(assignment.clone()).expect("contiguous by recursion");
        let cost = cc_cost(g, &c).expect("assignment length matches");
        if cost < *best_cost {
            *best_cost = cost;
            *best = assignment.clone();
        }
        return;
    }
    for cluster in 1..=used + 1 {
        assignment[node] = cluster;
        partition_search(g, assignment, node + 1, used.max(cluster), best_cost, best);
    }
    assignment[node] = 0;
}

/// Minimum-size triadic-closure labeling: minimum number of node pairs,
/// chosen among pairs that occur in some open wedge, covering every wedge.
/// Branches three ways on the pairs of the first uncovered wedge.
pub fn exact_minstc(g: &NodeWeightedGraph) -> Result<OptResult<StcLabeling>> {
    guard("node count", g.node_count(), MAX_EXACT_STC_NODES)?;
    let wedges = enumerate_open_wedges(g);
    // collect the distinct pairs occurring in wedges and index them
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut wedge_pairs: Vec<[usize; 3]> = Vec::new();
    {
        let mut index = std::collections::HashMap::new();
        let mut id_of = |p: (usize, usize), pairs: &mut Vec<(usize, usize)>| -> usize {
            *index.entry(p).or_insert_with(|| {
                pairs.push(p);
                pairs.len() - 1
            })
        };
        for w in &wedges {
            let (v, x) = w.ends;
            let a = id_of(canon(w.center, v), &mut pairs);
            let b = id_of(canon(w.center, x), &mut pairs);
            let c = id_of(canon(v, x), &mut pairs);
            wedge_pairs.push([a, b, c]);
        }
    }
    let mut best = u32::MAX;
    let mut best_mask = 0u64;
    minstc_branch(&wedge_pairs, 0u64, 0, &mut best, &mut best_mask);
    let mut weak_edges = Vec::new();
    let mut new_edges = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        if best_mask >> i & 1 == 1 {
            if g.has_edge(p.0, p.1) {
                weak_edges.push(p);
            } else {
                new_edges.push(p);
            }
        }
    }
    weak_edges.sort_unstable();
    new_edges.sort_unstable();
    let cost = weak_edges.len() + new_edges.len();
    Ok(OptResult {
        opt_cost: cost as f64,
        witness: StcLabeling {
            weak_edges,
            new_edges,
            cost,
        },
    })
}

fn minstc_branch(
    wedge_pairs: &[[usize; 3]],
    chosen: u64,
    count: u32,
    best: &mut u32,
    best_mask: &mut u64,
) {
    if count >= *best {
        return;
    }
    let uncovered = wedge_pairs
        .iter()
        .find(|w| w.iter().all(|&p| chosen >> p & 1 == 0));
    match uncovered {
        None => {
            *best = count;
            *best_mask = chosen;
        }
        Some(w) => {
            for &p in w {
                minstc_branch(wedge_pairs, chosen | 1 << p, count + 1, best, best_mask);
            }
        }
    }
}

fn canon(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Minimum-weight edge deletion leaving a matching, by include/exclude
/// search over kept edges with pairwise-conflict masks. Witness is the
/// deleted edge-id set.
pub fn exact_mind2m(g: &EdgeWeightedGraph) -> Result<OptResult<Vec<usize>>> {
    guard("edge count", g.edge_count(), MAX_EXACT_ITEMS)?;
    let conflicts = conflict_masks(g.edge_count(), |a, b| {
        let (u1, v1, _) = g.edges()[a];
        let (u2, v2, _) = g.edges()[b];
        u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2
    });
    let weights = g.edge_weights();
    Ok(max_weight_feasible(&weights, &conflicts))
}

/// Minimum-weight arc deletion destroying all directed 2-paths.
pub fn exact_ded2(d: &WeightedDag) -> Result<OptResult<Vec<usize>>> {
    guard("arc count", d.arc_count(), MAX_EXACT_ITEMS)?;
    let conflicts = conflict_masks(d.arc_count(), |a, b| {
        let (t1, h1, _) = d.arcs()[a];
        let (t2, h2, _) = d.arcs()[b];
        h1 == t2 || h2 == t1
    });
    let weights = d.arc_weights();
    Ok(max_weight_feasible(&weights, &conflicts))
}

fn conflict_masks(n: usize, conflict: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut masks = vec![0u64; n];
    for (a, mask) in masks.iter_mut().enumerate() {
        for b in 0..n {
            if a != b && conflict(a, b) {
                *mask |= 1 << b;
            }
        }
    }
    masks
}

/// Maximizes kept weight over subsets with no internal conflicts; reports
/// the complement as the deleted set. Prunes on the remaining suffix weight.
fn max_weight_feasible(weights: &[f64], conflicts: &[u64]) -> OptResult<Vec<usize>> {
    let n = weights.len();
    let total: f64 = weights.iter().sum();
    let mut suffix = vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + weights[i];
    }
    let mut search = FeasibleSearch {
        weights,
        conflicts,
        suffix,
        best_kept: f64::NEG_INFINITY,
        best_mask: 0,
    };
    search.dfs(0, 0, 0.0);
    let deleted: Vec<usize> = (0..n).filter(|&i| search.best_mask >> i & 1 == 0).collect();
    OptResult {
        opt_cost: total - search.best_kept,
        witness: deleted,
    }
}

struct FeasibleSearch<'a> {
    weights: &'a [f64],
    conflicts: &'a [u64],
    suffix: Vec<f64>,
    best_kept: f64,
    best_mask: u64,
}

impl FeasibleSearch<'_> {
    fn dfs(&mut self, i: usize, kept_mask: u64, kept_w: f64) {
        if kept_w + self.suffix[i] <= self.best_kept {
            return;
        }
        if i == self.weights.len() {
            self.best_kept = kept_w;
            self.best_mask = kept_mask;
            return;
        }
        if self.conflicts[i] & kept_mask == 0 {
            self.dfs(i + 1, kept_mask | 1 << i, kept_w + self.weights[i]);
        }
        self.dfs(i + 1, kept_mask, kept_w);
    }
}

/// Minimum unsatisfied hyperedge weight over all complete node labelings,
/// by plain base-k enumeration. Witness is an optimal labeling.
pub fn exact_colorec(h: &EdgeColoredHypergraph) -> Result<OptResult<Vec<usize>>> {
    let k = h.color_count().max(1);
    let mut labelings: usize = 1;
    for _ in 0..h.node_count() {
        labelings = labelings.saturating_mul(k);
        if labelings > MAX_EXACT_LABELINGS {
            return Err(Error::GuardExceeded {
                what: "labeling count",
                actual: labelings,
                limit: MAX_EXACT_LABELINGS,
            });
        }
    }
    let n = h.node_count();
    let mut label = vec![1usize; n];
    let mut best_cost = f64::INFINITY;
    let mut best = label.clone();
    loop {
        let cost: f64 = h
            .hyperedges()
            .iter()
            .filter(|he| he.members.iter().any(|&u| label[u] != he.color))
            .map(|he| he.weight)
            .sum();
        if cost < best_cost {
            best_cost = cost;
            best = label.clone();
        }
        // odometer over base-k digits
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(OptResult {
                    opt_cost: best_cost,
                    witness: best,
                });
            }
            if label[pos] < k {
                label[pos] += 1;
                break;
            }
            label[pos] = 1;
            pos += 1;
        }
    }
}

/// The randomized algorithms whose approximation ratio can be estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioAlgo {
    /// Weight-proportional cover growth on a node-weighted graph; bound 2.
    NeighborCover,
    /// Pivot clustering scored by clustering mistakes; bound 3.
    PivotCc,
    /// Pivot clustering scored as a triadic-closure labeling; bound 3.
    PivotStc,
    /// Implicit delete-to-matching; bound 2.
    Mind2m,
    /// Implicit 2-path deletion; bound 2.
    Ded2,
    /// Implicit colored hyperedge clustering; bound 2.
    Colorec,
}

impl RatioAlgo {
    pub fn name(self) -> &'static str {
        match self {
            RatioAlgo::NeighborCover => "neighbor",
            RatioAlgo::PivotCc => "pivot-cc",
            RatioAlgo::PivotStc => "pivot-stc",
            RatioAlgo::Mind2m => "mind2m",
            RatioAlgo::Ded2 => "ded2",
            RatioAlgo::Colorec => "colorec",
        }
    }

    pub fn bound(self) -> f64 {
        match self {
            RatioAlgo::NeighborCover | RatioAlgo::Mind2m | RatioAlgo::Ded2 | RatioAlgo::Colorec => {
                2.0
            }
            RatioAlgo::PivotCc | RatioAlgo::PivotStc => 3.0,
        }
    }
}

/// Sample mean and standard error of repeated runs against the exact
/// optimum. The guarantee being tested is on the expectation, so acceptance
/// checks use `mean <= bound * opt + 4 * stderr`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub runs: usize,
    pub opt: f64,
    pub bound: f64,
}

impl RatioEstimate {
    pub fn passes(&self) -> bool {
        self.mean <= self.bound * self.opt + 4.0 * self.stderr
    }

    pub fn from_samples(samples: &[f64], opt: f64, bound: f64) -> Self {
        let (mean, stderr) = mean_stderr(samples);
        RatioEstimate {
            mean,
            stderr,
            runs: samples.len(),
            opt,
            bound,
        }
    }
}

/// Sample mean and standard error (sample stddev over sqrt runs).
pub fn mean_stderr(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Runs `algo` with seeds `seed..seed+runs`, solves the instance exactly,
/// and reports the Monte-Carlo estimate against the theoretical bound.
pub fn estimate_ratio(
    algo: RatioAlgo,
    instance: &Instance,
    runs: usize,
    seed: u64,
) -> Result<RatioEstimate> {
    if runs < 2 {
        return Err(Error::TooFewRuns { min: 2, got: runs });
    }
    let mismatch = Err(Error::AlgorithmInstanceMismatch { algo: algo.name() });
    match (algo, instance) {
        (RatioAlgo::NeighborCover, Instance::Graph(g)) => {
            let opt = exact_vertex_cover(g)?.opt_cost;
            let samples = collect(runs, seed, |rng| neighbor_cover_randomized(g, rng).cost);
            Ok(RatioEstimate::from_samples(&samples, opt, algo.bound()))
        }
        (RatioAlgo::PivotCc, Instance::Graph(g)) => {
            let opt = exact_cc(g)?.opt_cost;
            let samples = collect(runs, seed, |rng| pivot_cost(g, rng, false));
            Ok(RatioEstimate::from_samples(&samples, opt, algo.bound()))
        }
        (RatioAlgo::PivotStc, Instance::Graph(g)) => {
            let opt = exact_minstc(g)?.opt_cost;
            let samples = collect(runs, seed, |rng| pivot_cost(g, rng, true));
            Ok(RatioEstimate::from_samples(&samples, opt, algo.bound()))
        }
        (RatioAlgo::Mind2m, Instance::EdgeWeighted(g)) => {
            let opt = exact_mind2m(g)?.opt_cost;
            let samples = collect(runs, seed, |rng| mind2m(g, rng).cost);
            Ok(RatioEstimate::from_samples(&samples, opt, algo.bound()))
        }
        (RatioAlgo::Ded2, Instance::Dag(d)) => {
            let opt = exact_ded2(d)?.opt_cost;
            let samples = collect(runs, seed, |rng| ded2(d, rng).cost);
            Ok(RatioEstimate::from_samples(&samples, opt, algo.bound()))
        }
        (RatioAlgo::Colorec, Instance::Hypergraph(h)) => {
            let opt = exact_colorec(h)?.opt_cost;
            let samples = collect(runs, seed, |rng| colorec(h, rng).cost);
            Ok(RatioEstimate::from_samples(&samples, opt, algo.bound()))
        }
        _ => mismatch,
    }
}

fn collect(runs: usize, seed: u64, mut run: impl FnMut(&mut RandomSource) -> f64) -> Vec<f64> {
    (0..runs)
        .map(|i| {
            let mut rng = RandomSource::new(seed.wrapping_add(i as u64));
            run(&mut rng)
        })
        .collect()
}

fn pivot_cost(g: &NodeWeightedGraph, rng: &mut RandomSource, as_stc: bool) -> f64 {
    if g.node_count() == 0 {
        return 0.0;
    }
    let perm = uniform_shuffle(g.node_count(), rng).expect("nonzero node count");
    let c = pivot(g, &perm).expect("permutation length matches");
    let cost = if as_stc {
        stc_from_clustering(g, &c).expect("valid clustering").cost
    } else {
        cc_cost(g, &c).expect("valid clustering")
    };
    cost as f64
}

/// One cover run per seed; used by callers that report mean cost/stderr
/// without an oracle (the CLI's repeated-run mode).
pub fn cover_cost_samples(
    g: &NodeWeightedGraph,
    runs: usize,
    seed: u64,
    run: impl Fn(&NodeWeightedGraph, &mut RandomSource) -> CoverResult,
) -> Vec<f64> {
    (0..runs)
        .map(|i| {
            let mut rng = RandomSource::new(seed.wrapping_add(i as u64));
            run(g, &mut rng).cost
        })
        .collect()
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::GuardExceeded {
            what,
            actual,
            limit,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{open_wedge_hypergraph, Hyperedge};

    fn graph(n: usize, edges: &[(usize, usize)]) -> NodeWeightedGraph {
        NodeWeightedGraph::new(n, edges, None).unwrap()
    }

    fn random_graph(n: usize, p: f64, rng: &mut RandomSource) -> NodeWeightedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < p {
                    edges.push((u, v));
                }
            }
        }
        graph(n, &edges)
    }

    // plain exhaustive reference for the branch-and-bound solver
    fn vc_by_enumeration(g: &NodeWeightedGraph) -> f64 {
        let n = g.node_count();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut best = f64::INFINITY;
        for mask in 0u32..1 << n {
            if edges
                .iter()
                .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            {
                let cost: f64 = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| g.weight(v)).sum();
                best = best.min(cost);
            }
        }
        best
    }

    #[test]
    fn exact_vc_named_cases() {
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(exact_vertex_cover(&tri).unwrap().opt_cost, 2.0);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = exact_vertex_cover(&star).unwrap();
        assert_eq!(r.opt_cost, 1.0);
        assert_eq!(r.witness, vec![0]);
        let edge = NodeWeightedGraph::new(2, &[(0, 1)], Some(&[1.0, 3.0])).unwrap();
        assert_eq!(exact_vertex_cover(&edge).unwrap().opt_cost, 1.0);
    }

    #[test]
    fn exact_vc_agrees_with_plain_enumeration() {
        let mut rng = RandomSource::new(8);
        for _ in 0..40 {
            let n = 2 + rng.next_below(13); // up to 14 nodes
            let p = 0.2 + 0.6 * rng.next_f64();
            let weights: Vec<f64> = (0..n).map(|_| (1 + rng.next_below(10)) as f64).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < p {
                        edges.push((u, v));
                    }
                }
            }
            let g = NodeWeightedGraph::new(n, &edges, Some(&weights)).unwrap();
            let bb = exact_vertex_cover(&g).unwrap();
            assert_eq!(bb.opt_cost, vc_by_enumeration(&g));
            assert!(crate::cover::verify_cover(&g, &bb.witness).unwrap());
            let witness_cost: f64 = bb.witness.iter().map(|&v| g.weight(v)).sum();
            assert_eq!(witness_cost, bb.opt_cost);
        }
    }

    #[test]
    fn exact_vc_guard() {
        let g = graph(25, &[]);
        assert!(matches!(
            exact_vertex_cover(&g),
            Err(Error::GuardExceeded { actual: 25, limit: 24, .. })
        ));
    }

    #[test]
    fn exact_cc_named_cases() {
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(exact_cc(&tri).unwrap().opt_cost, 0.0);
        // path: enumerate the 5 partitions by hand, the best makes 1 mistake
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(exact_cc(&path).unwrap().opt_cost, 1.0);
        let edgeless = graph(4, &[]);
        assert_eq!(exact_cc(&edgeless).unwrap().opt_cost, 0.0);
        assert!(exact_cc(&graph(10, &[])).is_err());
    }

    #[test]
    fn exact_cc_witness_achieves_cost() {
        let mut rng = RandomSource::new(15);
        for _ in 0..20 {
            let g = random_graph(2 + rng.next_below(6), 0.5, &mut rng);
            let r = exact_cc(&g).unwrap();
            let c = Clustering::from_assignment(r.witness.clone()).unwrap();
            assert_eq!(cc_cost(&g, &c).unwrap() as f64, r.opt_cost);
        }
    }

    #[test]
    fn exact_minstc_named_cases() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(exact_minstc(&path).unwrap().opt_cost, 1.0);
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(exact_minstc(&tri).unwrap().opt_cost, 0.0);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = exact_minstc(&star).unwrap();
        assert_eq!(r.opt_cost, 2.0);
        assert!(crate::clustering::validate_stc(&star, &r.witness).unwrap());
        assert!(exact_minstc(&graph(8, &[])).is_err());
    }

    // independent route: minimum hyperedge cover of the open-wedge
    // hypergraph by subset enumeration over its wedge-incident nodes
    fn minstc_by_hypergraph_cover(g: &NodeWeightedGraph) -> usize {
        let h = open_wedge_hypergraph(g);
        let mut nodes: Vec<usize> = h.hyperedges().iter().flatten().copied().collect();
        nodes.sort_unstable();
        nodes.dedup();
        let m = nodes.len();
        let mut best = usize::MAX;
        for mask in 0u32..1 << m {
            let picked: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| nodes[i]).collect();
            if h.hyperedges()
                .iter()
                .all(|he| he.iter().any(|v| picked.contains(v)))
            {
                best = best.min(picked.len());
            }
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    #[test]
    fn exact_minstc_matches_hypergraph_cover() {
        let mut rng = RandomSource::new(4);
        for _ in 0..30 {
            let g = random_graph(3 + rng.next_below(4), 0.5, &mut rng);
            let a = exact_minstc(&g).unwrap().opt_cost as usize;
            let b = minstc_by_hypergraph_cover(&g);
            assert_eq!(a, b);
            // every witness must satisfy the wedge predicate
            let w = exact_minstc(&g).unwrap().witness;
            assert!(crate::clustering::validate_stc(&g, &w).unwrap());
        }
    }

    #[test]
    fn cc_optimum_dominates_stc_optimum() {
        let mut rng = RandomSource::new(21);
        for _ in 0..30 {
            let g = random_graph(2 + rng.next_below(6), 0.5, &mut rng);
            assert!(exact_cc(&g).unwrap().opt_cost >= exact_minstc(&g).unwrap().opt_cost);
        }
    }

    #[test]
    fn exact_deletion_named_cases() {
        let tri = EdgeWeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        assert_eq!(exact_mind2m(&tri).unwrap().opt_cost, 2.0);
        let path = WeightedDag::new(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(exact_ded2(&path).unwrap().opt_cost, 1.0);
        let h = EdgeColoredHypergraph::new(
            4,
            2,
            vec![
                Hyperedge { members: vec![1, 2], color: 1, weight: 1.0 },
                Hyperedge { members: vec![2, 3], color: 2, weight: 2.0 },
            ],
        )
        .unwrap();
        assert_eq!(exact_colorec(&h).unwrap().opt_cost, 1.0);
    }

    #[test]
    fn exact_ded2_prefers_cheap_arcs() {
        let path = WeightedDag::new(3, &[(0, 1, 5.0), (1, 2, 1.0)]).unwrap();
        let r = exact_ded2(&path).unwrap();
        assert_eq!(r.opt_cost, 1.0);
        assert_eq!(r.witness, vec![1]);
    }

    #[test]
    fn exact_guards_for_deletion_problems() {
        let edges: Vec<(usize, usize, f64)> = (0..21).map(|i| (i, i + 21, 1.0)).collect();
        let g = EdgeWeightedGraph::new(42, &edges).unwrap();
        assert!(exact_mind2m(&g).is_err());
        let h = EdgeColoredHypergraph::new(
            25,
            3,
            vec![Hyperedge { members: vec![0], color: 1, weight: 1.0 }],
        )
        .unwrap();
        assert!(exact_colorec(&h).is_err());
    }

    #[test]
    fn estimate_ratio_named_cases() {
        let edge = NodeWeightedGraph::new(2, &[(0, 1)], Some(&[1.0, 3.0])).unwrap();
        let est = estimate_ratio(
            RatioAlgo::NeighborCover,
            &Instance::Graph(edge),
            100_000,
            0,
        )
        .unwrap();
        assert_eq!(est.opt, 1.0);
        assert_eq!(est.bound, 2.0);
        assert!((est.mean - 1.5).abs() <= 4.0 * est.stderr);
        assert!(est.passes());

        let edgeless = graph(5, &[]);
        let est =
            estimate_ratio(RatioAlgo::NeighborCover, &Instance::Graph(edgeless), 100, 0).unwrap();
        assert_eq!(est.mean, 0.0);
        assert_eq!(est.opt, 0.0);
        assert!(est.passes());

        // every pivot run on a path makes exactly one mistake
        let path = graph(3, &[(0, 1), (1, 2)]);
        let est =
            estimate_ratio(RatioAlgo::PivotCc, &Instance::Graph(path), 100_000, 0).unwrap();
        assert_eq!(est.mean, 1.0);
        assert_eq!(est.stderr, 0.0);
        assert_eq!(est.opt, 1.0);
    }

    #[test]
    fn estimate_ratio_is_reproducible_and_validates() {
        let g = random_graph(6, 0.5, &mut RandomSource::new(2));
        let a = estimate_ratio(RatioAlgo::NeighborCover, &Instance::Graph(g.clone()), 500, 9)
            .unwrap();
        let b =
            estimate_ratio(RatioAlgo::NeighborCover, &Instance::Graph(g.clone()), 500, 9).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            estimate_ratio(RatioAlgo::NeighborCover, &Instance::Graph(g.clone()), 1, 0),
            Err(Error::TooFewRuns { .. })
        ));
        let ew = EdgeWeightedGraph::new(2, &[(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            estimate_ratio(RatioAlgo::NeighborCover, &Instance::EdgeWeighted(ew), 100, 0),
            Err(Error::AlgorithmInstanceMismatch { .. })
        ));
    }
}
