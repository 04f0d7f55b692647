//! Pivot clustering, the correlation-clustering objective, and the
//! triadic-closure labeling view of a clustering.

use crate::error::{Error, Result};
use crate::graph::{enumerate_open_wedges, NodeWeightedGraph};
use crate::sampling::Permutation;
use std::collections::HashSet;

/// A complete cluster assignment with indices `1..=cluster_count`, plus the
/// ordered pivot nodes when produced by [`pivot`]. Pivots always form an
/// independent set in the source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    assignment: Vec<usize>,
    cluster_count: usize,
    pivots: Vec<usize>,
}

impl Clustering {
    /// Wraps an externally built assignment; indices must be contiguous
    /// starting at 1 and every node must be assigned.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let mut max = 0;
        for (v, &c) in assignment.iter().enumerate() {
            if c == 0 {
                return Err(Error::UnassignedNode(v));
            }
            max = max.max(c);
        }
        let mut used = vec![false; max + 1];
        for &c in &assignment {
            used[c] = true;
        }
        if !used[1..].iter().all(|&u| u) {
            return Err(Error::NonContiguousClusters);
        }
        Ok(Clustering {
            assignment,
            cluster_count: max,
            pivots: Vec::new(),
        })
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn cluster_count(&self) -> usize {
        self.cluster_count
    }

    /// Pivot nodes in discovery order; empty for assignments not produced by
    /// [`pivot`].
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// A triadic-closure labeling: existing edges marked weak plus inserted
/// non-edges, such that every open wedge contains a weak edge at its center
/// or has its open pair inserted. Pairs are stored with the smaller id
/// first. Cost is `|weak| + |new|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StcLabeling {
    pub weak_edges: Vec<(usize, usize)>,
    pub new_edges: Vec<(usize, usize)>,
    pub cost: usize,
}

/// Visits nodes in `perm` order; each still-unclustered node becomes a pivot
/// and absorbs its unclustered neighbors into a fresh cluster. Node weights
/// play no role. The pivots are exactly the independent set grown by
/// [`neighbor_cover`](crate::cover::neighbor_cover) with the same
/// permutation.
pub fn pivot(g: &NodeWeightedGraph, perm: &Permutation) -> Result<Clustering> {
    if perm.len() != g.node_count() {
        return Err(Error::PermutationLength {
            expected: g.node_count(),
            got: perm.len(),
        });
    }
    let mut assignment = vec![0usize; g.node_count()];
    let mut pivots = Vec::new();
    let mut cluster = 0;
    for v in perm.iter() {
        if assignment[v] != 0 {
            continue;
        }
        cluster += 1;
        assignment[v] = cluster;
        pivots.push(v);
        for &u in g.neighbors(v) {
            if assignment[u as usize] == 0 {
                assignment[u as usize] = cluster;
            }
        }
    }
    Ok(Clustering {
        assignment,
        cluster_count: cluster,
        pivots,
    })
}

/// Number of clustering mistakes: edges cut between clusters plus
/// non-adjacent pairs sharing a cluster, each unordered pair counted once.
pub fn cc_cost(g: &NodeWeightedGraph, c: &Clustering) -> Result<usize> {
    check_assignment(g, c)?;
    let a = c.assignment();
    let mut cut = 0usize;
    let mut internal = vec![0usize; c.cluster_count() + 1];
    let mut sizes = vec![0usize; c.cluster_count() + 1];
    for &cl in a {
        sizes[cl] += 1;
    }
    for (u, v) in g.edges() {
        if a[u] != a[v] {
            cut += 1;
        } else {
            internal[a[u]] += 1;
        }
    }
    let mut missing = 0usize;
    for cl in 1..=c.cluster_count() {
        missing += sizes[cl] * (sizes[cl] - 1) / 2 - internal[cl];
    }
    Ok(cut + missing)
}

/// The labeling a clustering induces: cut edges become weak, non-adjacent
/// same-cluster pairs become inserted edges. Its cost equals the clustering
/// cost and it always satisfies the wedge condition.
pub fn stc_from_clustering(g: &NodeWeightedGraph, c: &Clustering) -> Result<StcLabeling> {
    check_assignment(g, c)?;
    let a = c.assignment();
    let mut weak_edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| a[u] != a[v]).collect();
    weak_edges.sort_unstable();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); c.cluster_count() + 1];
    for (v, &cl) in a.iter().enumerate() {
        members[cl].push(v);
    }
    let mut new_edges = Vec::new();
    for group in &members[1..] {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                if !g.has_edge(group[i], group[j]) {
                    new_edges.push((group[i], group[j]));
                }
            }
        }
    }
    new_edges.sort_unstable();
    let cost = weak_edges.len() + new_edges.len();
    Ok(StcLabeling {
        weak_edges,
        new_edges,
        cost,
    })
}

/// True iff every open wedge has one of its two center edges weak or its
/// open pair inserted. Rejects labelings whose weak edges are not graph
/// edges or whose new edges already exist.
pub fn validate_stc(g: &NodeWeightedGraph, lab: &StcLabeling) -> Result<bool> {
    let mut weak = HashSet::new();
    for &(u, v) in &lab.weak_edges {
        check_node(g, u)?;
        check_node(g, v)?;
        if !g.has_edge(u, v) {
            return Err(Error::WeakEdgeNotInGraph(u, v));
        }
        weak.insert(canon(u, v));
    }
    let mut new = HashSet::new();
    for &(u, v) in &lab.new_edges {
        check_node(g, u)?;
        check_node(g, v)?;
        if g.has_edge(u, v) {
            return Err(Error::NewEdgeInGraph(u, v));
        }
        new.insert(canon(u, v));
    }
    for w in enumerate_open_wedges(g) {
        let (v, x) = w.ends;
        if !weak.contains(&canon(w.center, v))
            && !weak.contains(&canon(w.center, x))
            && !new.contains(&canon(v, x))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn canon(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_node(g: &NodeWeightedGraph, v: usize) -> Result<()> {
    if v >= g.node_count() {
        return Err(Error::NodeOutOfRange {
            node: v,
            node_count: g.node_count(),
        });
    }
    Ok(())
}

fn check_assignment(g: &NodeWeightedGraph, c: &Clustering) -> Result<()> {
    if c.assignment().len() != g.node_count() {
        return Err(Error::AssignmentLength {
            expected: g.node_count(),
            got: c.assignment().len(),
        });
    }
    Ok(())
}
