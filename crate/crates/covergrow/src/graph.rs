//! Instance types and the reduction builders that turn edge-deletion
//! problems into vertex-cover instances.
//!
//! All types are immutable after construction and safe to share read-only
//! across threads. Node ids are 0-based contiguous integers.

use crate::error::{Error, Result};

/// Undirected simple graph with nonnegative node weights, stored as a
/// compact CSR adjacency (sorted neighbor lists in one contiguous buffer,
/// 32-bit ids to keep the scans cache-friendly).
///
/// Construction deduplicates parallel input edges and rejects self-loops.
/// Isolated nodes are fine.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeWeightedGraph {
    node_count: usize,
    node_weights: Vec<f64>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    edge_count: usize,
}

impl NodeWeightedGraph {
    /// Builds a graph from an edge list. `weights` defaults to all ones.
    pub fn new(
        node_count: usize,
        edges: &[(usize, usize)],
        weights: Option<&[f64]>,
    ) -> Result<Self> {
        assert!(node_count <= u32::MAX as usize, "node ids are 32-bit");
        let node_weights = match weights {
            Some(w) => {
                if w.len() != node_count {
                    return Err(Error::WeightCount {
                        expected: node_count,
                        got: w.len(),
                    });
                }
                validate_weights(w)?;
                w.to_vec()
            }
            None => vec![1.0; node_count],
        };
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            check_node(u, node_count)?;
            check_node(v, node_count)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        let edge_count = neighbors.len() / 2;
        Ok(NodeWeightedGraph {
            node_count,
            node_weights,
            offsets,
            neighbors,
            edge_count,
        })
    }

    /// Trusted constructor for generators: `neighbors` must already be a
    /// symmetric, per-node sorted, loop- and duplicate-free CSR layout.
    pub(crate) fn from_sorted_csr(
        node_weights: Vec<f64>,
        offsets: Vec<usize>,
        neighbors: Vec<u32>,
    ) -> Self {
        let node_count = node_weights.len();
        debug_assert_eq!(offsets.len(), node_count + 1);
        let edge_count = neighbors.len() / 2;
        NodeWeightedGraph {
            node_count,
            node_weights,
            offsets,
            neighbors,
            edge_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.node_weights[v]
    }

    pub fn weights(&self) -> &[f64] {
        &self.node_weights
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v as usize > u)
                .map(move |&v| (u, v as usize))
        })
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.node_weights.iter().all(|&w| w == 1.0)
    }
}

/// Undirected graph with nonnegative edge weights; edges are the items of
/// the delete-to-matching problem. Stored with endpoints normalized `u < v`,
/// in input order (edge ids are list positions).
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeWeightedGraph {
    node_count: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl EdgeWeightedGraph {
    pub fn new(node_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for (i, &(u, v, w)) in edges.iter().enumerate() {
            check_node(u, node_count)?;
            check_node(v, node_count)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::BadWeight { index: i, value: w });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge(a, b));
            }
            stored.push((a, b, w));
        }
        Ok(EdgeWeightedGraph {
            node_count,
            edges: stored,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn edge_weights(&self) -> Vec<f64> {
        self.edges.iter().map(|&(_, _, w)| w).collect()
    }
}

/// Directed acyclic graph with nonnegative arc weights; arcs are the items
/// of the 2-path deletion problem. Arc ids are list positions.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDag {
    node_count: usize,
    arcs: Vec<(usize, usize, f64)>,
}

impl WeightedDag {
    /// Validates arcs and rejects cyclic inputs (topological-sort check).
    pub fn new(node_count: usize, arcs: &[(usize, usize, f64)]) -> Result<Self> {
        let dag = Self::without_acyclicity_check(node_count, arcs)?;
        if !dag.is_acyclic() {
            return Err(Error::CyclicInput);
        }
        Ok(dag)
    }

    /// Skips the topological-sort check. The deletion algorithm itself never
    /// inspects global acyclicity, so cyclic inputs degrade gracefully.
    pub fn without_acyclicity_check(node_count: usize, arcs: &[(usize, usize, f64)]) -> Result<Self> {
        for (i, &(tail, head, w)) in arcs.iter().enumerate() {
            check_node(tail, node_count)?;
            check_node(head, node_count)?;
            if tail == head {
                return Err(Error::SelfArc(tail));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::BadWeight { index: i, value: w });
            }
        }
        Ok(WeightedDag {
            node_count,
            arcs: arcs.to_vec(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize, f64)] {
        &self.arcs
    }

    pub fn arc_weights(&self) -> Vec<f64> {
        self.arcs.iter().map(|&(_, _, w)| w).collect()
    }

    /// Kahn's algorithm: true iff a topological order of the nodes exists.
    pub fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.node_count];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.node_count];
        for &(tail, head, _) in &self.arcs {
            indegree[head] += 1;
            out[tail].push(head);
        }
        let mut queue: Vec<usize> = (0..self.node_count)
            .filter(|&v| indegree[v] == 0)
            .collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &h in &out[v] {
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    queue.push(h);
                }
            }
        }
        seen == self.node_count
    }
}

/// One weighted, colored hyperedge.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperedge {
    pub members: Vec<usize>,
    pub color: usize,
    pub weight: f64,
}

/// Hypergraph whose hyperedges carry a color in `1..=color_count` and a
/// nonnegative weight; the instance of the colored edge clustering problem.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeColoredHypergraph {
    node_count: usize,
    color_count: usize,
    hyperedges: Vec<Hyperedge>,
}

impl EdgeColoredHypergraph {
    pub fn new(node_count: usize, color_count: usize, hyperedges: Vec<Hyperedge>) -> Result<Self> {
        for (i, he) in hyperedges.iter().enumerate() {
            if he.members.is_empty() {
                return Err(Error::EmptyHyperedge(i));
            }
            let mut sorted = he.members.clone();
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::RepeatedMember(i, pair[0]));
                }
            }
            for &m in &he.members {
                check_node(m, node_count)?;
            }
            if he.color == 0 || he.color > color_count {
                return Err(Error::ColorOutOfRange {
                    index: i,
                    color: he.color,
                    color_count,
                });
            }
            if !he.weight.is_finite() || he.weight < 0.0 {
                return Err(Error::BadWeight {
                    index: i,
                    value: he.weight,
                });
            }
        }
        Ok(EdgeColoredHypergraph {
            node_count,
            color_count,
            hyperedges,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn hyperedge_weights(&self) -> Vec<f64> {
        self.hyperedges.iter().map(|he| he.weight).collect()
    }
}

/// 3-uniform hypergraph on the node pairs of an original graph: one node per
/// unordered pair, one hyperedge per open wedge. Only hyperedges are
/// materialized; the pair-node bijection is computed on demand and covers
/// all `C(n, 2)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    original_nodes: usize,
    hyperedges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn node_count(&self) -> usize {
        self.original_nodes * self.original_nodes.saturating_sub(1) / 2
    }

    pub fn original_node_count(&self) -> usize {
        self.original_nodes
    }

    pub fn hyperedges(&self) -> &[[usize; 3]] {
        &self.hyperedges
    }

    /// Pair-node id of `{i, j}`: lexicographic rank among all pairs.
    pub fn pair_to_node(&self, i: usize, j: usize) -> usize {
        pair_rank(self.original_nodes, i, j)
    }

    /// Inverse of [`pair_to_node`](Self::pair_to_node).
    pub fn node_to_pair(&self, mut id: usize) -> (usize, usize) {
        let n = self.original_nodes;
        let mut i = 0;
        while id >= n - 1 - i {
            id -= n - 1 - i;
            i += 1;
        }
        (i, i + 1 + id)
    }
}

fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// A node triple inducing exactly two edges; `center` is the common endpoint
/// and `ends` the non-adjacent pair, with `ends.0 < ends.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpenWedge {
    pub center: usize,
    pub ends: (usize, usize),
}

/// All open wedges of `g`, each listed once (the center of a wedge is
/// unique). Runs in `O(sum of degree^2)` with a sorted-adjacency lookup.
pub fn enumerate_open_wedges(g: &NodeWeightedGraph) -> Vec<OpenWedge> {
    let mut wedges = Vec::new();
    for center in 0..g.node_count() {
        let ns = g.neighbors(center);
        for a in 0..ns.len() {
            for b in a + 1..ns.len() {
                let (v, x) = (ns[a] as usize, ns[b] as usize);
                if !g.has_edge(v, x) {
                    wedges.push(OpenWedge {
                        center,
                        ends: (v, x),
                    });
                }
            }
        }
    }
    wedges
}

/// The open-wedge hypergraph of `g`: one pair-node per unordered node pair,
/// one 3-element hyperedge per open wedge. Node weights of `g` are ignored.
pub fn open_wedge_hypergraph(g: &NodeWeightedGraph) -> Hypergraph3 {
    let n = g.node_count();
    let hyperedges = enumerate_open_wedges(g)
        .into_iter()
        .map(|w| {
            let (v, x) = w.ends;
            let mut he = [
                pair_rank(n, w.center, v),
                pair_rank(n, w.center, x),
                pair_rank(n, v, x),
            ];
            he.sort_unstable();
            he
        })
        .collect();
    Hypergraph3 {
        original_nodes: n,
        hyperedges,
    }
}

/// Line graph of an edge-weighted graph: one node per edge carrying the edge
/// weight, adjacent iff the edges share an endpoint.
pub fn line_graph(g: &EdgeWeightedGraph) -> NodeWeightedGraph {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    for (id, &(u, v, _)) in g.edges().iter().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    let mut pairs = Vec::new();
    for list in &incident {
        for a in 0..list.len() {
            for b in a + 1..list.len() {
                pairs.push((list[a], list[b]));
            }
        }
    }
    let weights = g.edge_weights();
    NodeWeightedGraph::new(g.edge_count(), &pairs, Some(&weights))
        .expect("line graph edges are valid by construction")
}

/// Conflict graph of the 2-path deletion problem: one node per arc carrying
/// the arc weight, adjacent iff the two arcs form a directed 2-path.
pub fn ded2_conflict_graph(d: &WeightedDag) -> NodeWeightedGraph {
    let mut by_tail: Vec<Vec<usize>> = vec![Vec::new(); d.node_count()];
    let mut by_head: Vec<Vec<usize>> = vec![Vec::new(); d.node_count()];
    for (id, &(tail, head, _)) in d.arcs().iter().enumerate() {
        by_tail[tail].push(id);
        by_head[head].push(id);
    }
    let mut pairs = Vec::new();
    for v in 0..d.node_count() {
        for &e in &by_head[v] {
            for &f in &by_tail[v] {
                pairs.push((e, f));
            }
        }
    }
    let weights = d.arc_weights();
    NodeWeightedGraph::new(d.arc_count(), &pairs, Some(&weights))
        .expect("conflict pairs are valid by construction")
}

/// Conflict graph of colored edge clustering: one node per hyperedge
/// carrying its weight, adjacent iff the hyperedges overlap and have
/// different colors.
pub fn colorec_conflict_graph(h: &EdgeColoredHypergraph) -> NodeWeightedGraph {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.node_count()];
    for (id, he) in h.hyperedges().iter().enumerate() {
        for &m in &he.members {
            incident[m].push(id);
        }
    }
    let hes = h.hyperedges();
    let mut pairs = Vec::new();
    for list in &incident {
        for a in 0..list.len() {
            for b in a + 1..list.len() {
                if hes[list[a]].color != hes[list[b]].color {
                    pairs.push((list[a], list[b]));
                }
            }
        }
    }
    let weights = h.hyperedge_weights();
    NodeWeightedGraph::new(h.hyperedges().len(), &pairs, Some(&weights))
        .expect("conflict pairs are valid by construction")
}

/// Any of the four instance kinds, as produced by the text-format parsers.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Graph(NodeWeightedGraph),
    EdgeWeighted(EdgeWeightedGraph),
    Dag(WeightedDag),
    Hypergraph(EdgeColoredHypergraph),
}

fn check_node(v: usize, node_count: usize) -> Result<()> {
    if v >= node_count {
        return Err(Error::NodeOutOfRange {
            node: v,
            node_count,
        });
    }
    Ok(())
}

fn validate_weights(w: &[f64]) -> Result<()> {
    for (i, &x) in w.iter().enumerate() {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::BadWeight { index: i, value: x });
        }
    }
    Ok(())
}
