//! Vertex-cover and maximal-independent-set algorithms.
//!
//! The central routine is [`neighbor_cover`]: visit nodes in a given
//! permutation; a node joins the independent set unless some earlier visit
//! already placed one of its neighbors there, in which case it joins the
//! cover. With a weight-proportional permutation this is an expected
//! 2-approximation for minimum weighted vertex cover; with a uniform
//! permutation it is the classic greedy MIS; with a caller-chosen order it
//! is a deterministic list heuristic. The other entry points are the classic
//! edge-visiting baselines and a round-based variant of the greedy MIS.

use crate::error::{Error, Result};
use crate::graph::NodeWeightedGraph;
use crate::sampling::{weighted_shuffle, Permutation, RandomSource};

/// Output of a cover construction: a vertex cover, the complementary
/// independent set, the cover's total weight, and (for permutation-driven
/// algorithms) the permutation that produced it.
///
/// `cover` and `independent` are disjoint, sorted, and together contain
/// every node. For the MIS-growing algorithms the independent set is
/// maximal; for the edge-visiting baselines it is simply the complement.
#[derive(Debug, Clone)]
pub struct CoverResult {
    pub cover: Vec<usize>,
    pub independent: Vec<usize>,
    pub cost: f64,
    pub permutation: Option<Permutation>,
    pub algorithm: &'static str,
    /// Set when the algorithm assumes unit weights but the graph has other
    /// weights (the reported cost still sums the true weights).
    pub weights_ignored: bool,
}

impl CoverResult {
    fn from_cover_flags(
        g: &NodeWeightedGraph,
        in_cover: &[bool],
        permutation: Option<Permutation>,
        algorithm: &'static str,
        weights_ignored: bool,
    ) -> Self {
        let mut cover = Vec::new();
        let mut independent = Vec::new();
        let mut cost = 0.0;
        for (v, &covered) in in_cover.iter().enumerate() {
            if covered {
                cover.push(v);
                cost += g.weight(v);
            } else {
                independent.push(v);
            }
        }
        CoverResult {
            cover,
            independent,
            cost,
            permutation,
            algorithm,
            weights_ignored,
        }
    }
}

/// Feasible values for the per-edge dual variables: for every node the
/// incident values sum to at most the node weight, so the total is a lower
/// bound on the optimal cover weight.
#[derive(Debug, Clone)]
pub struct DualCertificate {
    /// `((u, v), value)` with `u < v`, in the edge order that produced it.
    pub edge_values: Vec<((usize, usize), f64)>,
    pub total: f64,
}

impl DualCertificate {
    /// Checks nonnegativity and the per-node constraint exactly.
    pub fn is_feasible(&self, g: &NodeWeightedGraph) -> bool {
        let mut load = vec![0.0f64; g.node_count()];
        for &((u, v), y) in &self.edge_values {
            if y < 0.0 || u >= g.node_count() || v >= g.node_count() {
                return false;
            }
            load[u] += y;
            load[v] += y;
        }
        (0..g.node_count()).all(|v| load[v] <= g.weight(v))
    }
}

/// Grows a maximal independent set and its complementary cover by visiting
/// nodes in `perm` order; an unmarked node joins the independent set and
/// marks its unmarked neighbors covered, a marked node stays in the cover.
/// `O(n + m)` after the permutation, and only independent-set nodes have
/// their adjacency scanned (equivalent to checking each visited node for an
/// earlier independent neighbor, but far fewer list reads).
pub fn neighbor_cover(g: &NodeWeightedGraph, perm: &Permutation) -> Result<CoverResult> {
    check_perm(g, perm)?;
    let n = g.node_count();
    let mut in_cover = vec![false; n];
    for v in perm.iter() {
        if in_cover[v] {
            continue;
        }
        for &u in g.neighbors(v) {
            in_cover[u as usize] = true;
        }
    }
    Ok(CoverResult::from_cover_flags(
        g,
        &in_cover,
        Some(perm.clone()),
        "neighbor-cover",
        false,
    ))
}

/// [`neighbor_cover`] driven by a weight-proportional permutation; expected
/// cover weight is at most twice the optimum.
pub fn neighbor_cover_randomized(g: &NodeWeightedGraph, rng: &mut RandomSource) -> CoverResult {
    let perm = if g.node_count() == 0 {
        Permutation::identity(0)
    } else {
        weighted_shuffle(g.weights(), rng).expect("graph weights were validated at construction")
    };
    neighbor_cover(g, &perm).expect("permutation length matches by construction")
}

/// Greedy maximal matching: both endpoints of every edge that arrives with
/// neither endpoint covered join the cover. A 2-approximation for unweighted
/// graphs; node weights are not consulted.
pub fn matching_vc(g: &NodeWeightedGraph, edge_order: &[(usize, usize)]) -> Result<CoverResult> {
    check_edge_order(g, edge_order)?;
    let mut in_cover = vec![false; g.node_count()];
    for &(u, v) in edge_order {
        if !in_cover[u] && !in_cover[v] {
            in_cover[u] = true;
            in_cover[v] = true;
        }
    }
    Ok(CoverResult::from_cover_flags(
        g,
        &in_cover,
        None,
        "matching",
        !g.is_unit_weighted(),
    ))
}

/// For each edge that arrives uncovered, covers one endpoint sampled
/// inversely to its weight share: `u` with probability `w_v / (w_u + w_v)`.
/// When both weights are zero the pick is uniform. Expected cover weight is
/// at most twice the optimum.
pub fn pitt_vc(
    g: &NodeWeightedGraph,
    edge_order: &[(usize, usize)],
    rng: &mut RandomSource,
) -> Result<CoverResult> {
    check_edge_order(g, edge_order)?;
    let mut in_cover = vec![false; g.node_count()];
    for &(u, v) in edge_order {
        if in_cover[u] || in_cover[v] {
            continue;
        }
        let (wu, wv) = (g.weight(u), g.weight(v));
        let take_u = if wu + wv > 0.0 {
            wv / (wu + wv)
        } else {
            0.5
        };
        if rng.next_f64() < take_u {
            in_cover[u] = true;
        } else {
            in_cover[v] = true;
        }
    }
    Ok(CoverResult::from_cover_flags(
        g,
        &in_cover,
        None,
        "pitt",
        false,
    ))
}

/// Local-ratio cover: every edge subtracts the smaller residual weight of
/// its endpoints from both; nodes driven to zero residual form the cover.
/// The subtracted amounts are returned as a dual certificate, so the cover
/// weight is at most twice the certificate total, which in turn is at most
/// the optimum.
pub fn local_ratio_vc(
    g: &NodeWeightedGraph,
    edge_order: &[(usize, usize)],
) -> Result<(CoverResult, DualCertificate)> {
    check_edge_order(g, edge_order)?;
    let mut residual = g.weights().to_vec();
    let mut edge_values = Vec::with_capacity(edge_order.len());
    let mut total = 0.0;
    for &(u, v) in edge_order {
        let m = residual[u].min(residual[v]);
        residual[u] -= m;
        residual[v] -= m;
        let key = if u < v { (u, v) } else { (v, u) };
        edge_values.push((key, m));
        total += m;
    }
    // isolated nodes never enter a cover, zero weight or not
    let in_cover: Vec<bool> = (0..g.node_count())
        .map(|v| residual[v] == 0.0 && g.degree(v) > 0)
        .collect();
    let result = CoverResult::from_cover_flags(g, &in_cover, None, "local-ratio", false);
    Ok((result, DualCertificate { edge_values, total }))
}

/// Round-based form of the greedy MIS: each round, every remaining node
/// that precedes all its remaining neighbors in `perm` joins the
/// independent set, then those nodes and their neighbors (which join the
/// cover) are removed. Output node sets are identical to
/// [`neighbor_cover`] with the same permutation; also reports the number of
/// rounds, which is `O(log n)` with high probability for random orders.
///
/// Candidate evaluation inside a round only reads the previous round's
/// state, so a conforming implementation may evaluate nodes concurrently;
/// this one uses a sequential loop per round.
pub fn parallel_greedy_mis(
    g: &NodeWeightedGraph,
    perm: &Permutation,
) -> Result<(CoverResult, usize)> {
    check_perm(g, perm)?;
    let n = g.node_count();
    let rank = perm.positions();
    // 0 = undecided, 1 = independent, 2 = cover
    let mut state = vec![0u8; n];
    let mut alive: Vec<usize> = (0..n).collect();
    let mut rounds = 0;
    while !alive.is_empty() {
        rounds += 1;
        let chosen: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| {
                g.neighbors(v)
                    .iter()
                    .all(|&u| state[u as usize] != 0 || rank[u as usize] > rank[v])
            })
            .collect();
        for &v in &chosen {
            state[v] = 1;
        }
        for &v in &chosen {
            for &u in g.neighbors(v) {
                if state[u as usize] == 0 {
                    state[u as usize] = 2;
                }
            }
        }
        alive.retain(|&v| state[v] == 0);
    }
    let in_cover: Vec<bool> = state.iter().map(|&s| s == 2).collect();
    Ok((
        CoverResult::from_cover_flags(g, &in_cover, Some(perm.clone()), "parallel-mis", false),
        rounds,
    ))
}

/// True iff every edge of `g` has an endpoint in `nodes`.
pub fn verify_cover(g: &NodeWeightedGraph, nodes: &[usize]) -> Result<bool> {
    let flags = node_flags(g, nodes)?;
    Ok(g.edges().all(|(u, v)| flags[u] || flags[v]))
}

/// True iff `nodes` is an independent set and no outside node can be added.
pub fn verify_mis(g: &NodeWeightedGraph, nodes: &[usize]) -> Result<bool> {
    let flags = node_flags(g, nodes)?;
    for &v in nodes {
        if g.neighbors(v).iter().any(|&u| flags[u as usize]) {
            return Ok(false);
        }
    }
    for v in 0..g.node_count() {
        if !flags[v] && !g.neighbors(v).iter().any(|&u| flags[u as usize]) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn node_flags(g: &NodeWeightedGraph, nodes: &[usize]) -> Result<Vec<bool>> {
    let mut flags = vec![false; g.node_count()];
    for &v in nodes {
        if v >= g.node_count() {
            return Err(Error::NodeOutOfRange {
                node: v,
                node_count: g.node_count(),
            });
        }
        flags[v] = true;
    }
    Ok(flags)
}

fn check_perm(g: &NodeWeightedGraph, perm: &Permutation) -> Result<()> {
    if perm.len() != g.node_count() {
        return Err(Error::PermutationLength {
            expected: g.node_count(),
            got: perm.len(),
        });
    }
    Ok(())
}

/// The given order must visit every edge of `g` exactly once (endpoints in
/// either orientation).
fn check_edge_order(g: &NodeWeightedGraph, edge_order: &[(usize, usize)]) -> Result<()> {
    if edge_order.len() != g.edge_count() {
        return Err(Error::InvalidEdgeOrder);
    }
    let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edge_order.len());
    for &(u, v) in edge_order {
        if u >= g.node_count() || v >= g.node_count() || u == v {
            return Err(Error::InvalidEdgeOrder);
        }
        canon.push(if u < v { (u, v) } else { (v, u) });
    }
    canon.sort_unstable();
    if canon.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidEdgeOrder);
    }
    if !canon.into_iter().eq(g.edges()) {
        return Err(Error::InvalidEdgeOrder);
    }
    Ok(())
}

/// Convenience: the graph's edges in their stored (lexicographic) order,
/// the default order for the edge-visiting algorithms.
pub fn default_edge_order(g: &NodeWeightedGraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}
