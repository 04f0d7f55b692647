//! Whitespace-separated text formats for the four instance kinds.
//!
//! Lines may carry `#` comments; ids are 0-based. Formats:
//!
//! ```text
//! graph <n> <m>      followed by m lines `u v`, plus optional `w <node> <weight>` lines
//! ewgraph <n> <m>    followed by m lines `u v <weight>`
//! dag <n> <m>        followed by m lines `tail head <weight>`
//! chg <n> <m> <k>    followed by m lines `<color> <weight> <size> <v1> ... <vsize>`
//! ```
//!
//! Parsing reports the offending line on failure, and formatting a parsed
//! instance round-trips exactly.

use crate::error::{Error, Result};
use crate::graph::{
    EdgeColoredHypergraph, EdgeWeightedGraph, Hyperedge, Instance, NodeWeightedGraph, WeightedDag,
};
use crate::sampling::Permutation;
use std::fmt::Write as _;

fn fail(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// `(line_number, tokens)` for every line with content, comments stripped.
fn content_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect()
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| fail(line, format!("expected {what}, got '{tok}'")))
}

fn parse_weight(tok: &str, line: usize) -> Result<f64> {
    let w: f64 = tok
        .parse()
        .map_err(|_| fail(line, format!("expected a weight, got '{tok}'")))?;
    if !w.is_finite() || w < 0.0 {
        return Err(fail(line, format!("weight {w} must be finite and >= 0")));
    }
    Ok(w)
}

fn check_node(v: usize, n: usize, line: usize) -> Result<()> {
    if v >= n {
        return Err(fail(line, format!("node {v} out of range 0..{n}")));
    }
    Ok(())
}

fn header<'a>(
    lines: &'a [(usize, Vec<&'a str>)],
    kind: &str,
    fields: usize,
) -> Result<(usize, Vec<usize>)> {
    let Some((line, tokens)) = lines.first() else {
        return Err(fail(0, format!("empty input, expected '{kind}' header")));
    };
    if tokens[0] != kind || tokens.len() != fields + 1 {
        return Err(fail(
            *line,
            format!("expected header '{kind}' with {fields} counts"),
        ));
    }
    let mut vals = Vec::with_capacity(fields);
    for t in &tokens[1..] {
        vals.push(parse_usize(t, *line, "a count")?);
    }
    Ok((*line, vals))
}

pub fn parse_graph(text: &str) -> Result<NodeWeightedGraph> {
    Ok(parse_graph_with_edge_order(text)?.0)
}

/// Like [`parse_graph`] but also returns the edge list in file order
/// (duplicates dropped, first occurrence kept), the default visiting order
/// for the edge-driven cover algorithms.
pub fn parse_graph_with_edge_order(
    text: &str,
) -> Result<(NodeWeightedGraph, Vec<(usize, usize)>)> {
    let lines = content_lines(text);
    let (_, counts) = header(&lines, "graph", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let mut edges = Vec::with_capacity(m);
    let mut weights = vec![1.0; n];
    let mut last_line = 0;
    for (line, tokens) in &lines[1..] {
        last_line = *line;
        if tokens[0] == "w" {
            if tokens.len() != 3 {
                return Err(fail(*line, "expected 'w <node> <weight>'"));
            }
            let v = parse_usize(tokens[1], *line, "a node id")?;
            check_node(v, n, *line)?;
            weights[v] = parse_weight(tokens[2], *line)?;
            continue;
        }
        if tokens.len() != 2 {
            return Err(fail(*line, "expected edge line 'u v'"));
        }
        if edges.len() == m {
            return Err(fail(*line, format!("more than {m} edges")));
        }
        let u = parse_usize(tokens[0], *line, "a node id")?;
        let v = parse_usize(tokens[1], *line, "a node id")?;
        check_node(u, n, *line)?;
        check_node(v, n, *line)?;
        if u == v {
            return Err(fail(*line, format!("self-loop at node {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(fail(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    let g = NodeWeightedGraph::new(n, &edges, Some(&weights))
        .map_err(|e| fail(0, format!("invalid graph: {e}")))?;
    let mut seen = std::collections::HashSet::new();
    let order: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|&(u, v)| seen.insert(if u < v { (u, v) } else { (v, u) }))
        .collect();
    Ok((g, order))
}

pub fn parse_edge_weighted(text: &str) -> Result<EdgeWeightedGraph> {
    let lines = content_lines(text);
    let (_, counts) = header(&lines, "ewgraph", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in &lines[1..] {
        if tokens.len() != 3 {
            return Err(fail(*line, "expected edge line 'u v <weight>'"));
        }
        let u = parse_usize(tokens[0], *line, "a node id")?;
        let v = parse_usize(tokens[1], *line, "a node id")?;
        check_node(u, n, *line)?;
        check_node(v, n, *line)?;
        if u == v {
            return Err(fail(*line, format!("self-loop at node {u}")));
        }
        let w = parse_weight(tokens[2], *line)?;
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(fail(0, format!("expected {m} edges, found {}", edges.len())));
    }
    EdgeWeightedGraph::new(n, &edges).map_err(|e| fail(0, format!("invalid ewgraph: {e}")))
}

pub fn parse_dag(text: &str, check_acyclic: bool) -> Result<WeightedDag> {
    let lines = content_lines(text);
    let (_, counts) = header(&lines, "dag", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let mut arcs = Vec::with_capacity(m);
    for (line, tokens) in &lines[1..] {
        if tokens.len() != 3 {
            return Err(fail(*line, "expected arc line 'tail head <weight>'"));
        }
        let tail = parse_usize(tokens[0], *line, "a node id")?;
        let head = parse_usize(tokens[1], *line, "a node id")?;
        check_node(tail, n, *line)?;
        check_node(head, n, *line)?;
        if tail == head {
            return Err(fail(*line, format!("self-arc at node {tail}")));
        }
        let w = parse_weight(tokens[2], *line)?;
        arcs.push((tail, head, w));
    }
    if arcs.len() != m {
        return Err(fail(0, format!("expected {m} arcs, found {}", arcs.len())));
    }
    if check_acyclic {
        WeightedDag::new(n, &arcs)
    } else {
        WeightedDag::without_acyclicity_check(n, &arcs)
    }
}

pub fn parse_hypergraph(text: &str) -> Result<EdgeColoredHypergraph> {
    let lines = content_lines(text);
    let (_, counts) = header(&lines, "chg", 3)?;
    let (n, m, k) = (counts[0], counts[1], counts[2]);
    let mut hyperedges = Vec::with_capacity(m);
    for (line, tokens) in &lines[1..] {
        if tokens.len() < 3 {
            return Err(fail(
                *line,
                "expected '<color> <weight> <size> <v1> ... <vsize>'",
            ));
        }
        let color = parse_usize(tokens[0], *line, "a color")?;
        if color == 0 || color > k {
            return Err(fail(*line, format!("color {color} outside 1..={k}")));
        }
        let weight = parse_weight(tokens[1], *line)?;
        let size = parse_usize(tokens[2], *line, "a member count")?;
        if size == 0 {
            return Err(fail(*line, "hyperedge must be nonempty"));
        }
        if tokens.len() != 3 + size {
            return Err(fail(
                *line,
                format!("expected {size} members, found {}", tokens.len() - 3),
            ));
        }
        let mut members = Vec::with_capacity(size);
        for t in &tokens[3..] {
            let v = parse_usize(t, *line, "a node id")?;
            check_node(v, n, *line)?;
            if members.contains(&v) {
                return Err(fail(*line, format!("repeated member {v}")));
            }
            members.push(v);
        }
        hyperedges.push(Hyperedge {
            members,
            color,
            weight,
        });
    }
    if hyperedges.len() != m {
        return Err(fail(
            0,
            format!("expected {m} hyperedges, found {}", hyperedges.len()),
        ));
    }
    EdgeColoredHypergraph::new(n, k, hyperedges)
        .map_err(|e| fail(0, format!("invalid hypergraph: {e}")))
}

/// Dispatches on the header keyword. DAG inputs get the acyclicity check.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let lines = content_lines(text);
    let Some((line, tokens)) = lines.first() else {
        return Err(fail(0, "empty input"));
    };
    match tokens[0] {
        "graph" => Ok(Instance::Graph(parse_graph(text)?)),
        "ewgraph" => Ok(Instance::EdgeWeighted(parse_edge_weighted(text)?)),
        "dag" => Ok(Instance::Dag(parse_dag(text, true)?)),
        "chg" => Ok(Instance::Hypergraph(parse_hypergraph(text)?)),
        other => Err(fail(
            *line,
            format!("unknown header '{other}', expected graph|ewgraph|dag|chg"),
        )),
    }
}

/// Permutation file: whitespace-separated item ids, one full ordering.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let mut order = Vec::with_capacity(n);
    for (line, tokens) in content_lines(text) {
        for t in tokens {
            order.push(parse_usize(t, line, "an item id")?);
        }
    }
    if order.len() != n {
        return Err(Error::PermutationLength {
            expected: n,
            got: order.len(),
        });
    }
    Permutation::new(order)
}

pub fn format_graph(g: &NodeWeightedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {}", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for v in 0..g.node_count() {
        if g.weight(v) != 1.0 {
            let _ = writeln!(out, "w {v} {}", g.weight(v));
        }
    }
    out
}

pub fn format_edge_weighted(g: &EdgeWeightedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ewgraph {} {}", g.node_count(), g.edge_count());
    for &(u, v, w) in g.edges() {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}

pub fn format_dag(d: &WeightedDag) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dag {} {}", d.node_count(), d.arc_count());
    for &(tail, head, w) in d.arcs() {
        let _ = writeln!(out, "{tail} {head} {w}");
    }
    out
}

pub fn format_hypergraph(h: &EdgeColoredHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "chg {} {} {}",
        h.node_count(),
        h.hyperedges().len(),
        h.color_count()
    );
    for he in h.hyperedges() {
        let _ = write!(out, "{} {} {}", he.color, he.weight, he.members.len());
        for m in &he.members {
            let _ = write!(out, " {m}");
        }
        let _ = writeln!(out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::sampling::RandomSource;

    #[test]
    fn parse_graph_basics() {
        let g = parse_graph("graph 2 1\n0 1\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_unit_weighted());

        let g = parse_graph("graph 2 1\n0 1\nw 1 3\n").unwrap();
        assert_eq!(g.weights(), &[1.0, 3.0]);

        let err = parse_graph("graph 2 1\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_handles_comments_and_blank_lines() {
        let text = "# a triangle\n\ngraph 3 3   # header\n0 1\n1 2\n0 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parse_reports_useful_lines() {
        assert!(matches!(
            parse_graph("graph 2 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("ewgraph 2 1\n0 1 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("graph 2 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_weighted("ewgraph 2 1\n0 1 -2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_hypergraph("chg 3 1 2\n5 1 1 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn dag_parsing_respects_acyclicity_flag() {
        let text = "dag 3 3\n0 1 1\n1 2 1\n2 0 1\n";
        assert!(matches!(parse_dag(text, true), Err(Error::CyclicInput)));
        assert!(parse_dag(text, false).is_ok());
    }

    #[test]
    fn instance_dispatch() {
        assert!(matches!(
            parse_instance("graph 1 0\n"),
            Ok(Instance::Graph(_))
        ));
        assert!(matches!(
            parse_instance("ewgraph 2 1\n0 1 2\n"),
            Ok(Instance::EdgeWeighted(_))
        ));
        assert!(matches!(
            parse_instance("dag 2 1\n0 1 2\n"),
            Ok(Instance::Dag(_))
        ));
        assert!(matches!(
            parse_instance("chg 2 1 1\n1 1 2 0 1\n"),
            Ok(Instance::Hypergraph(_))
        ));
        assert!(matches!(
            parse_instance("mesh 2 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn permutation_file() {
        let p = parse_permutation("2 0 1\n", 3).unwrap();
        assert_eq!(p.as_slice(), &[2, 0, 1]);
        assert!(parse_permutation("0 1", 3).is_err());
        assert!(parse_permutation("0 0 1", 3).is_err());
    }

    #[test]
    fn round_trip_all_four_kinds() {
        let mut rng = RandomSource::new(6);
        for _ in 0..25 {
            let g = gen::gnp_with_weights(2 + rng.next_below(10), 0.4, 1, 10, &mut rng);
            assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);

            let ew = gen::random_edge_weighted(6, 8, 1, 10, &mut rng);
            assert_eq!(
                parse_edge_weighted(&format_edge_weighted(&ew)).unwrap(),
                ew
            );

            let d = gen::random_dag(6, 8, 1, 10, &mut rng);
            assert_eq!(parse_dag(&format_dag(&d), true).unwrap(), d);

            let h = gen::random_hypergraph(6, 5, 3, 3, 1, 10, &mut rng);
            assert_eq!(parse_hypergraph(&format_hypergraph(&h)).unwrap(), h);
        }
    }

    #[test]
    fn fractional_weights_round_trip() {
        let g = NodeWeightedGraph::new(2, &[(0, 1)], Some(&[0.1, 2.5])).unwrap();
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }
}
