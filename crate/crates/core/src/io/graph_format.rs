//! Line-oriented formats.
//!
//! ```text
//! # comment
//! n 8
//! 1 2 5
//! ```
//!
//! The header `n <count>` comes first; each further line is `u v w` with
//! 1-based ids. Blank lines and lines starting with `#` are skipped. Knapsack
//! files use `capacity <C>` followed by `weight value` lines.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::algorithms::{FlowNetwork, Item, SolverError};
use crate::graph::{GraphError, WeightedGraph};

use super::{parse_error, FormatError};

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn field<T: FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_error(line, format!("invalid {what} {tok:?}")))
}

fn header(
    lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>,
    keyword: &str,
) -> Result<u64, FormatError> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| parse_error(1, format!("missing `{keyword} <count>` header")))?;
    let mut toks = text.as_ref().split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(parse_error(
            line,
            format!("expected `{keyword} <count>` header"),
        ));
    }
    let value = field(line, toks.next(), keyword)?;
    if toks.next().is_some() {
        return Err(parse_error(line, "trailing tokens after header"));
    }
    Ok(value)
}

/// Splits a `u v w` line.
fn triple(line: usize, text: &str) -> Result<(usize, usize, f64), FormatError> {
    let mut toks = text.split_whitespace();
    let u = field(line, toks.next(), "vertex id")?;
    let v = field(line, toks.next(), "vertex id")?;
    let w: f64 = field(line, toks.next(), "weight")?;
    if toks.next().is_some() {
        return Err(parse_error(line, "expected exactly `u v w`"));
    }
    Ok((u, v, w))
}

pub fn parse_graph_file(text: &str) -> Result<WeightedGraph, FormatError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "n")? as usize;
    let mut g = WeightedGraph::new(n);
    for (line, text) in lines {
        let (u, v, w) = triple(line, text)?;
        g.add_edge(u, v, w).map_err(|e| match e {
            GraphError::BadVertexId { id, n } => FormatError::BadVertexId { line, id, n },
            GraphError::DuplicateEdge { u, v } => FormatError::DuplicateEdge { line, u, v },
            GraphError::SelfLoop(v) => parse_error(line, format!("self-loop on vertex {v}")),
            GraphError::InvalidWeight { weight, .. } => {
                parse_error(line, format!("weight {weight} must be finite and >= 0"))
            }
            other => FormatError::Graph {
                line,
                source: other,
            },
        })?;
    }
    Ok(g)
}

pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        let (u, v) = e.ends();
        writeln!(out, "{u} {v} {}", e.weight).unwrap();
    }
    out
}

/// Same layout as a graph file; each line is a directed arc `from to capacity`.
pub fn parse_network_file(text: &str) -> Result<FlowNetwork, FormatError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, "n")? as usize;
    let mut net = FlowNetwork::new(n);
    for (line, text) in lines {
        let (u, v, c) = triple(line, text)?;
        if u == v {
            return Err(parse_error(line, format!("self-loop on vertex {u}")));
        }
        net.add_arc(u, v, c).map_err(|e| match e {
            SolverError::BadVertex { id, n } => FormatError::BadVertexId { line, id, n },
            other => FormatError::Solver {
                line,
                source: other,
            },
        })?;
    }
    Ok(net)
}

pub fn write_network(net: &FlowNetwork) -> String {
    let mut out = format!("n {}\n", net.vertex_count());
    for a in net.arcs() {
        writeln!(out, "{} {} {}", a.from, a.to, a.capacity).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnapsackInstance {
    pub capacity: u64,
    pub items: Vec<Item>,
}

pub fn parse_knapsack_file(text: &str) -> Result<KnapsackInstance, FormatError> {
    let mut lines = content_lines(text);
    let capacity = header(&mut lines, "capacity")?;
    let mut items = Vec::new();
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let weight = field(line, toks.next(), "item weight")?;
        let value: f64 = field(line, toks.next(), "item value")?;
        if toks.next().is_some() {
            return Err(parse_error(line, "expected exactly `weight value`"));
        }
        if !value.is_finite() || value < 0.0 {
            return Err(parse_error(
                line,
                format!("value {value} must be finite and >= 0"),
            ));
        }
        items.push(Item { weight, value });
    }
    Ok(KnapsackInstance { capacity, items })
}

pub fn write_knapsack(k: &KnapsackInstance) -> String {
    let mut out = format!("capacity {}\n", k.capacity);
    for item in &k.items {
        writeln!(out, "{} {}", item.weight, item.value).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn fig1_fixture() {
        let g = parse_graph_file(fixtures::FIG1_GRAPH).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(write_graph(&g), fixtures::FIG1_GRAPH);
    }

    #[test]
    fn header_only() {
        let g = parse_graph_file("n 5\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph_file("# fig\n\nn 3\n# edges\n1 2 1.5\n  \n2 3 4\n").unwrap();
        assert_eq!(g.weight(1, 2), Some(1.5));
        assert_eq!(write_graph(&g), "n 3\n1 2 1.5\n2 3 4\n");
    }

    #[test]
    fn self_loop_is_parse_error() {
        assert!(matches!(
            parse_graph_file("n 2\n1 1 3\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_graph_file("n 3\n1 2 1\n2 1 4\n"),
            Err(FormatError::DuplicateEdge {
                line: 3,
                u: 1,
                v: 2
            })
        );
        assert_eq!(
            parse_graph_file("n 3\n1 4 1\n"),
            Err(FormatError::BadVertexId {
                line: 2,
                id: 4,
                n: 3
            })
        );
        assert!(matches!(
            parse_graph_file("n 3\n1 2\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph_file("1 2 3\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph_file("n 3\n1 2 -1\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph_file("n 3\n1 2 inf\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn network_keeps_parallel_arcs() {
        let text = "n 2\n1 2 3\n1 2 4\n";
        let net = parse_network_file(text).unwrap();
        assert_eq!(net.arcs().len(), 2);
        assert_eq!(write_network(&net), text);
    }

    #[test]
    fn knapsack_file() {
        let text = "capacity 5\n2 3\n3 4\n4 5\n";
        let k = parse_knapsack_file(text).unwrap();
        assert_eq!(k.capacity, 5);
        assert_eq!(k.items.len(), 3);
        assert_eq!(write_knapsack(&k), text);
        assert!(parse_knapsack_file("capacity -1\n").is_err());
        assert!(parse_knapsack_file("capacity 3\n1 -2\n").is_err());
    }

    proptest! {
        #[test]
        fn integer_weight_round_trip(
            n in 1usize..10,
            raw in proptest::collection::vec((1usize..10, 1usize..10, 0u32..1000), 0..30)
        ) {
            let mut g = WeightedGraph::new(n);
            for (u, v, w) in raw {
                let _ = g.add_edge(u, v, w as f64);
            }
            let text = write_graph(&g);
            let back = parse_graph_file(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph(&back), text);
        }
    }
}
