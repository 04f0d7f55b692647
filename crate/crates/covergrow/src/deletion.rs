//! Implicit cover-growing algorithms for three edge-deletion problems.
//!
//! Each problem reduces to vertex cover on a conflict graph whose nodes are
//! the problem's items (edges, arcs, hyperedges). These routines run the
//! weight-proportional cover construction on that graph without ever
//! materializing it: a constant-size side structure per item answers
//! "does this item conflict with one already kept". Visiting items in the
//! same weight-proportional order as the explicit reduction yields exactly
//! the same kept/deleted split, so the expected deleted weight is at most
//! twice the optimum.

use crate::graph::{EdgeColoredHypergraph, EdgeWeightedGraph, WeightedDag};
use crate::sampling::{weighted_shuffle, RandomSource};

/// Items split into a deleted set and a feasible kept set, with the total
/// deleted weight. Item ids are positions in the instance's item list; both
/// id lists are sorted. `labels` carries the node coloring for the colored
/// clustering problem (0 = never labeled, assignable freely at no cost).
#[derive(Debug, Clone, PartialEq)]
pub struct DeletionResult {
    pub deleted: Vec<usize>,
    pub kept: Vec<usize>,
    pub cost: f64,
    pub labels: Option<Vec<usize>>,
}

fn finish(
    mut deleted: Vec<usize>,
    mut kept: Vec<usize>,
    weights: &[f64],
    labels: Option<Vec<usize>>,
) -> DeletionResult {
    deleted.sort_unstable();
    kept.sort_unstable();
    let cost = deleted.iter().map(|&i| weights[i]).sum();
    DeletionResult {
        deleted,
        kept,
        cost,
        labels,
    }
}

/// Deletes a low-weight edge set so the remainder is a matching: edges are
/// visited in weight-proportional random order and kept whenever neither
/// endpoint is matched yet. `O(m log m)` dominated by the shuffle.
pub fn mind2m(g: &EdgeWeightedGraph, rng: &mut RandomSource) -> DeletionResult {
    let weights = g.edge_weights();
    if weights.is_empty() {
        return finish(Vec::new(), Vec::new(), &weights, None);
    }
    let order = weighted_shuffle(&weights, rng).expect("edge weights validated at construction");
    let mut matched = vec![false; g.node_count()];
    let mut deleted = Vec::new();
    let mut kept = Vec::new();
    for e in order.iter() {
        let (i, j, _) = g.edges()[e];
        if matched[i] || matched[j] {
            deleted.push(e);
        } else {
            matched[i] = true;
            matched[j] = true;
            kept.push(e);
        }
    }
    finish(deleted, kept, &weights, None)
}

/// Deletes a low-weight arc set so no directed 2-path remains: an arc
/// `(i, j)` is kept unless `i` is already the head of a kept arc or `j` is
/// already the tail of one.
pub fn ded2(d: &WeightedDag, rng: &mut RandomSource) -> DeletionResult {
    let weights = d.arc_weights();
    if weights.is_empty() {
        return finish(Vec::new(), Vec::new(), &weights, None);
    }
    let order = weighted_shuffle(&weights, rng).expect("arc weights validated at construction");
    let mut kept_head = vec![false; d.node_count()];
    let mut kept_tail = vec![false; d.node_count()];
    let mut deleted = Vec::new();
    let mut kept = Vec::new();
    for e in order.iter() {
        let (i, j, _) = d.arcs()[e];
        if kept_head[i] || kept_tail[j] {
            deleted.push(e);
        } else {
            kept_tail[i] = true;
            kept_head[j] = true;
            kept.push(e);
        }
    }
    finish(deleted, kept, &weights, None)
}

/// Colors nodes to satisfy a maximal set of hyperedges: a hyperedge is
/// satisfiable while every member is unlabeled or already carries its
/// color, in which case all members take that color. Unsatisfied hyperedges
/// are the deleted set. `O(m log m + total arity)`.
pub fn colorec(h: &EdgeColoredHypergraph, rng: &mut RandomSource) -> DeletionResult {
    let weights = h.hyperedge_weights();
    if weights.is_empty() {
        return finish(Vec::new(), Vec::new(), &weights, Some(vec![0; h.node_count()]));
    }
    let order =
        weighted_shuffle(&weights, rng).expect("hyperedge weights validated at construction");
    let mut labels = vec![0usize; h.node_count()];
    let mut deleted = Vec::new();
    let mut kept = Vec::new();
    for e in order.iter() {
        let he = &h.hyperedges()[e];
        if he
            .members
            .iter()
            .all(|&u| labels[u] == 0 || labels[u] == he.color)
        {
            for &u in &he.members {
                labels[u] = he.color;
            }
            kept.push(e);
        } else {
            deleted.push(e);
        }
    }
    finish(deleted, kept, &weights, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::neighbor_cover;
    use crate::graph::{colorec_conflict_graph, ded2_conflict_graph, line_graph, Hyperedge};

    #[test]
    fn mind2m_single_edge_deletes_nothing() {
        let g = EdgeWeightedGraph::new(2, &[(0, 1, 5.0)]).unwrap();
        let r = mind2m(&g, &mut RandomSource::new(0));
        assert!(r.deleted.is_empty());
        assert_eq!(r.kept, vec![0]);
        assert_eq!(r.cost, 0.0);
    }

    #[test]
    fn mind2m_triangle_keeps_one_edge() {
        let g =
            EdgeWeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        for seed in 0..50 {
            let r = mind2m(&g, &mut RandomSource::new(seed));
            assert_eq!(r.kept.len(), 1);
            assert_eq!(r.deleted.len(), 2);
            assert_eq!(r.cost, 2.0);
        }
    }

    #[test]
    fn mind2m_middle_edge_first_costs_two() {
        // path a-b-c-d; find a seed whose shuffle visits the middle edge first
        let g = EdgeWeightedGraph::new(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        let mut seen = false;
        for seed in 0..100 {
            let perm =
                weighted_shuffle(&g.edge_weights(), &mut RandomSource::new(seed)).unwrap();
            if perm.as_slice()[0] == 1 {
                let r = mind2m(&g, &mut RandomSource::new(seed));
                assert_eq!(r.kept, vec![1]);
                assert_eq!(r.deleted, vec![0, 2]);
                assert_eq!(r.cost, 2.0); // optimum deletes only one edge
                seen = true;
                break;
            }
        }
        assert!(seen);
    }

    #[test]
    fn ded2_two_path_traces() {
        let d = WeightedDag::new(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        for seed in 0..100 {
            let perm = weighted_shuffle(&d.arc_weights(), &mut RandomSource::new(seed)).unwrap();
            let r = ded2(&d, &mut RandomSource::new(seed));
            assert_eq!(r.deleted.len(), 1);
            assert_eq!(r.cost, 1.0);
            // whichever arc came first is the one kept
            assert_eq!(r.kept, vec![perm.as_slice()[0]]);
        }
    }

    #[test]
    fn ded2_feasible_configurations_delete_nothing() {
        let disjoint = WeightedDag::new(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let r = ded2(&disjoint, &mut RandomSource::new(3));
        assert!(r.deleted.is_empty());
        // shared tail is not a 2-path
        let fanout = WeightedDag::new(3, &[(0, 1, 1.0), (0, 2, 1.0)]).unwrap();
        let r = ded2(&fanout, &mut RandomSource::new(3));
        assert!(r.deleted.is_empty());
    }

    #[test]
    fn colorec_traces() {
        let he = |members: &[usize], color: usize, weight: f64| Hyperedge {
            members: members.to_vec(),
            color,
            weight,
        };
        let single = EdgeColoredHypergraph::new(3, 2, vec![he(&[0, 1, 2], 1, 4.0)]).unwrap();
        let r = colorec(&single, &mut RandomSource::new(0));
        assert!(r.deleted.is_empty());
        assert_eq!(r.cost, 0.0);
        assert_eq!(r.labels, Some(vec![1, 1, 1]));

        // overlapping different colors: whichever is visited first wins
        let h = EdgeColoredHypergraph::new(
            4,
            2,
            vec![he(&[1, 2], 1, 1.0), he(&[2, 3], 2, 2.0)],
        )
        .unwrap();
        let mut saw_blue_first = false;
        for seed in 0..100 {
            let perm =
                weighted_shuffle(&h.hyperedge_weights(), &mut RandomSource::new(seed)).unwrap();
            let r = colorec(&h, &mut RandomSource::new(seed));
            if perm.as_slice()[0] == 1 {
                saw_blue_first = true;
                assert_eq!(r.deleted, vec![0]);
                assert_eq!(r.cost, 1.0);
                let labels = r.labels.unwrap();
                assert_eq!(labels[2], 2);
                assert_eq!(labels[3], 2);
                assert_eq!(labels[0], 0); // node 0 touched by nothing
            } else {
                assert_eq!(r.deleted, vec![1]);
                assert_eq!(r.cost, 2.0);
            }
        }
        assert!(saw_blue_first);

        // same color overlap is always satisfiable
        let h = EdgeColoredHypergraph::new(
            4,
            2,
            vec![he(&[0, 1], 1, 1.0), he(&[1, 2], 1, 1.0)],
        )
        .unwrap();
        let r = colorec(&h, &mut RandomSource::new(5));
        assert!(r.deleted.is_empty());
    }

    #[test]
    fn colorec_two_edge_mean_matches_enumeration() {
        // visit orders: blue first w.p. 2/3 costs 1, red first w.p. 1/3
        // costs 2, so the mean converges to 4/3
        let h = EdgeColoredHypergraph::new(
            4,
            2,
            vec![
                Hyperedge { members: vec![1, 2], color: 1, weight: 1.0 },
                Hyperedge { members: vec![2, 3], color: 2, weight: 2.0 },
            ],
        )
        .unwrap();
        let runs = 40_000;
        let mut costs = Vec::with_capacity(runs);
        for seed in 0..runs {
            costs.push(colorec(&h, &mut RandomSource::new(seed as u64)).cost);
        }
        let mean: f64 = costs.iter().sum::<f64>() / runs as f64;
        let var: f64 =
            costs.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (runs as f64 - 1.0);
        let expected = 4.0 / 3.0;
        let tol = 4.0 * (var / runs as f64).sqrt();
        assert!((mean - expected).abs() <= tol, "mean {mean} vs {expected}");
    }

    #[test]
    fn kept_sets_are_feasible_and_maximal() {
        let mut rng = RandomSource::new(42);
        for round in 0..100 {
            // matching feasibility and maximality
            let n = 4 + rng.next_below(6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < 0.4 {
                        edges.push((u, v, 1.0 + rng.next_below(9) as f64));
                    }
                }
            }
            let g = EdgeWeightedGraph::new(n, &edges).unwrap();
            let r = mind2m(&g, &mut RandomSource::new(round));
            let mut used = vec![false; n];
            for &e in &r.kept {
                let (i, j, _) = g.edges()[e];
                assert!(!used[i] && !used[j], "kept set is not a matching");
                used[i] = true;
                used[j] = true;
            }
            for &e in &r.deleted {
                let (i, j, _) = g.edges()[e];
                assert!(used[i] || used[j], "deleted edge was addable");
            }
        }
    }

    #[test]
    fn ded2_kept_set_is_two_path_free_and_maximal() {
        let mut rng = RandomSource::new(7);
        for round in 0..100 {
            let n = 4 + rng.next_below(6);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < 0.4 {
                        arcs.push((u, v, 1.0 + rng.next_below(9) as f64));
                    }
                }
            }
            let d = WeightedDag::new(n, &arcs).unwrap();
            let r = ded2(&d, &mut RandomSource::new(round));
            let kept: Vec<(usize, usize, f64)> = r.kept.iter().map(|&e| d.arcs()[e]).collect();
            for a in &kept {
                for b in &kept {
                    assert!(a.1 != b.0 || a == b, "kept arcs form a 2-path");
                }
            }
            let mut head = vec![false; n];
            let mut tail = vec![false; n];
            for &(i, j, _) in &kept {
                tail[i] = true;
                head[j] = true;
            }
            for &e in &r.deleted {
                let (i, j, _) = d.arcs()[e];
                assert!(head[i] || tail[j], "deleted arc was addable");
            }
        }
    }

    #[test]
    fn implicit_runs_match_explicit_reduction_seed_for_seed() {
        let mut rng = RandomSource::new(2024);
        for seed in 0..60u64 {
            let n = 4 + rng.next_below(5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < 0.5 {
                        edges.push((u, v, 1.0 + rng.next_below(9) as f64));
                    }
                }
            }
            let g = EdgeWeightedGraph::new(n, &edges).unwrap();
            let implicit = mind2m(&g, &mut RandomSource::new(seed));
            let lg = line_graph(&g);
            let perm = weighted_shuffle(lg.weights(), &mut RandomSource::new(seed)).unwrap();
            let explicit = neighbor_cover(&lg, &perm).unwrap();
            assert_eq!(implicit.deleted, explicit.cover);
            assert_eq!(implicit.kept, explicit.independent);

            let d = WeightedDag::new(n, &edges).unwrap();
            let implicit = ded2(&d, &mut RandomSource::new(seed));
            let cg = ded2_conflict_graph(&d);
            let perm = weighted_shuffle(cg.weights(), &mut RandomSource::new(seed)).unwrap();
            let explicit = neighbor_cover(&cg, &perm).unwrap();
            assert_eq!(implicit.deleted, explicit.cover);
        }
    }

    #[test]
    fn colorec_matches_conflict_graph_cover() {
        let mut rng = RandomSource::new(31);
        for seed in 0..60u64 {
            let n = 4 + rng.next_below(4);
            let k = 2 + rng.next_below(2);
            let m = 3 + rng.next_below(8);
            let mut hes = Vec::new();
            for _ in 0..m {
                let size = 1 + rng.next_below(3);
                let mut members = Vec::new();
                while members.len() < size {
                    let v = rng.next_below(n);
                    if !members.contains(&v) {
                        members.push(v);
                    }
                }
                hes.push(Hyperedge {
                    members,
                    color: 1 + rng.next_below(k),
                    weight: 1.0 + rng.next_below(9) as f64,
                });
            }
            let h = EdgeColoredHypergraph::new(n, k, hes).unwrap();
            let implicit = colorec(&h, &mut RandomSource::new(seed));
            let cg = colorec_conflict_graph(&h);
            let perm = weighted_shuffle(cg.weights(), &mut RandomSource::new(seed)).unwrap();
            let explicit = neighbor_cover(&cg, &perm).unwrap();
            assert_eq!(implicit.deleted, explicit.cover);
            assert_eq!(implicit.kept, explicit.independent);
        }
    }
}
