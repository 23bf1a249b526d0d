//! Weighted undirected graphs and the infinity-sentinel weight matrix.
//!
//! Vertex ids are 1-based at the API boundary; storage is 0-based.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex id {id} out of range 1..={n}")]
    BadVertexId { id: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("invalid weight {weight} on edge {{{u},{v}}}: must be finite and >= 0")]
    InvalidWeight { u: usize, v: usize, weight: f64 },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("matrix is not symmetric at ({i},{j})")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("finite diagonal entry at ({0},{0})")]
    FiniteDiagonal(usize),
    #[error("matrix row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
}

/// 1-based vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    /// Returns `None` for 0; ids start at 1.
    pub fn new(id: usize) -> Option<Self> {
        (id >= 1).then_some(VertexId(id))
    }

    pub fn from_index(index: usize) -> Self {
        VertexId(index + 1)
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: f64,
}

impl Edge {
    pub fn new(u: usize, v: usize, weight: f64) -> Self {
        Edge {
            u: VertexId(u),
            v: VertexId(v),
            weight,
        }
    }

    /// Endpoints as a 1-based pair, in stored orientation.
    pub fn ends(&self) -> (usize, usize) {
        (self.u.get(), self.v.get())
    }
}

/// Undirected graph on vertices `1..=n` with at most one edge per pair.
///
/// Edges are kept ordered by `(min(u,v), max(u,v))`, so two graphs with the
/// same edge set compare equal regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), f64>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut g = WeightedGraph::new(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Parallel edges are rejected rather than merged.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: f64) -> Result<(), GraphError> {
        for id in [u, v] {
            if id == 0 || id > self.n {
                return Err(GraphError::BadVertexId { id, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !weight.is_finite() || weight < 0.0 {
            return Err(GraphError::InvalidWeight { u, v, weight });
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
        }
        self.edges.insert(key, weight);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.get() <= self.n
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| Edge::new(u, v, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    /// Neighbour lists indexed by 0-based vertex, each sorted by neighbour index.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (&(u, v), &w) in &self.edges {
            adj[u - 1].push((v - 1, w));
            adj[v - 1].push((u - 1, w));
        }
        for list in &mut adj {
            list.sort_by_key(|&(x, _)| x);
        }
        adj
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.values().sum()
    }
}

/// A weight or the absent-edge sentinel (`inf`).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ExtWeight(f64);

impl ExtWeight {
    pub const INFINITY: ExtWeight = ExtWeight(f64::INFINITY);

    pub fn finite(w: f64) -> Self {
        debug_assert!(w.is_finite());
        ExtWeight(w)
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn value(self) -> Option<f64> {
        self.0.is_finite().then_some(self.0)
    }
}

impl fmt::Display for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(w) => write!(f, "{w}"),
            None => f.write_str("inf"),
        }
    }
}

/// Dense `n x n` matrix of extended weights; absent edges and the diagonal
/// hold [`ExtWeight::INFINITY`].
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    n: usize,
    cells: Vec<ExtWeight>,
}

impl WeightMatrix {
    pub fn infinite(n: usize) -> Self {
        WeightMatrix {
            n,
            cells: vec![ExtWeight::INFINITY; n * n],
        }
    }

    /// Builds a matrix from rows, checking shape, symmetry and the diagonal.
    pub fn from_rows(rows: Vec<Vec<ExtWeight>>) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    n,
                });
            }
            cells.extend(row);
        }
        let m = WeightMatrix { n, cells };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), GraphError> {
        for i in 0..self.n {
            if !self.cells[i * self.n + i].is_infinite() {
                return Err(GraphError::FiniteDiagonal(i + 1));
            }
            for j in i + 1..self.n {
                let a = self.cells[i * self.n + j];
                let b = self.cells[j * self.n + i];
                // NaN never equals itself, so it lands here too.
                if a != b {
                    return Err(GraphError::AsymmetricMatrix { i: i + 1, j: j + 1 });
                }
                if let Some(w) = a.value() {
                    if w < 0.0 {
                        return Err(GraphError::InvalidWeight {
                            u: i + 1,
                            v: j + 1,
                            weight: w,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> ExtWeight {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    /// Entry at 0-based `(i, j)`.
    pub(crate) fn at(&self, i: usize, j: usize) -> ExtWeight {
        self.cells[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[ExtWeight] {
        &self.cells[(i - 1) * self.n..i * self.n]
    }
}

impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn weight_matrix_from_graph(g: &WeightedGraph) -> WeightMatrix {
    let mut c = WeightMatrix::infinite(g.vertex_count());
    let n = c.n;
    for e in g.edges() {
        let (i, j) = (e.u.index(), e.v.index());
        c.cells[i * n + j] = ExtWeight::finite(e.weight);
        c.cells[j * n + i] = ExtWeight::finite(e.weight);
    }
    c
}

pub fn graph_from_weight_matrix(c: &WeightMatrix) -> Result<WeightedGraph, GraphError> {
    c.check()?;
    let mut g = WeightedGraph::new(c.n);
    for i in 0..c.n {
        for j in i + 1..c.n {
            if let Some(w) = c.at(i, j).value() {
                g.add_edge(i + 1, j + 1, w)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    const INF: ExtWeight = ExtWeight::INFINITY;

    fn fin(w: f64) -> ExtWeight {
        ExtWeight::finite(w)
    }

    #[test]
    fn fig1_matrix_first_row() {
        let c = weight_matrix_from_graph(&fixtures::fig1_graph());
        assert_eq!(
            c.row(1),
            &[INF, fin(5.0), INF, fin(2.0), INF, fin(9.0), INF, INF]
        );
    }

    #[test]
    fn fig1_matrix_matches_program_display() {
        // Rows of the matrix printed after the construction loop.
        let expected = "\
inf 5 inf 2 inf 9 inf inf
5 inf 4 3 6 inf inf inf
inf 4 inf inf 7 inf inf 8
2 3 inf inf 1 1 5 inf
inf 6 7 1 inf inf 7 8
9 inf inf 1 inf inf 2 inf
inf inf inf 5 7 2 inf 3
inf inf 8 inf 8 inf 3 inf
";
        let c = weight_matrix_from_graph(&fixtures::fig1_graph());
        assert_eq!(c.to_string(), expected);
    }

    #[test]
    fn empty_graph_is_all_infinite() {
        let c = weight_matrix_from_graph(&WeightedGraph::new(3));
        assert_eq!(c, WeightMatrix::infinite(3));
        assert!((1..=3).all(|i| (1..=3).all(|j| c.get(i, j).is_infinite())));
    }

    #[test]
    fn single_edge_is_symmetric() {
        let g = WeightedGraph::from_edges(2, [(1, 2, 7.0)]).unwrap();
        let c = weight_matrix_from_graph(&g);
        assert_eq!(c.get(1, 2), fin(7.0));
        assert_eq!(c.get(2, 1), fin(7.0));
        assert!(c.get(1, 1).is_infinite() && c.get(2, 2).is_infinite());
    }

    #[test]
    fn fig1_matrix_back_to_edge_list() {
        let g = fixtures::fig1_graph();
        let back = graph_from_weight_matrix(&weight_matrix_from_graph(&g)).unwrap();
        assert_eq!(back.edge_count(), 15);
        assert_eq!(back, g);
    }

    #[test]
    fn all_infinite_matrix_gives_edgeless_graph() {
        let g = graph_from_weight_matrix(&WeightMatrix::infinite(4)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let rows = vec![vec![INF, fin(1.0)], vec![fin(2.0), INF]];
        assert_eq!(
            WeightMatrix::from_rows(rows),
            Err(GraphError::AsymmetricMatrix { i: 1, j: 2 })
        );
    }

    #[test]
    fn finite_diagonal_rejected() {
        let rows = vec![vec![fin(0.0), fin(1.0)], vec![fin(1.0), INF]];
        assert_eq!(
            WeightMatrix::from_rows(rows),
            Err(GraphError::FiniteDiagonal(1))
        );
    }

    #[test]
    fn construction_errors() {
        let mut g = WeightedGraph::new(3);
        assert_eq!(g.add_edge(1, 1, 1.0), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            g.add_edge(1, 4, 1.0),
            Err(GraphError::BadVertexId { id: 4, n: 3 })
        );
        assert!(matches!(
            g.add_edge(1, 2, -1.0),
            Err(GraphError::InvalidWeight { .. })
        ));
        g.add_edge(2, 1, 1.0).unwrap();
        assert_eq!(
            g.add_edge(1, 2, 3.0),
            Err(GraphError::DuplicateEdge { u: 1, v: 2 })
        );
    }

    #[test]
    fn fig1_fixture_shape() {
        let g = fixtures::fig1_graph();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.weight(1, 2), Some(5.0));
        assert_eq!(g.weight(8, 7), Some(3.0));
        assert_eq!(g.weight(5, 8), Some(8.0));
    }

    fn arb_graph() -> impl Strategy<Value = WeightedGraph> {
        (1usize..=12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(proptest::option::of(0u32..50), len).prop_map(move |ws| {
                let edges = pairs
                    .iter()
                    .zip(ws)
                    .filter_map(|(&(u, v), w)| w.map(|w| (u, v, w as f64 / 2.0)));
                WeightedGraph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn matrix_round_trip(g in arb_graph()) {
            let c = weight_matrix_from_graph(&g);
            for i in 1..=c.dim() {
                prop_assert!(c.get(i, i).is_infinite());
                for j in 1..=c.dim() {
                    prop_assert_eq!(c.get(i, j), c.get(j, i));
                }
            }
            prop_assert_eq!(graph_from_weight_matrix(&c).unwrap(), g);
        }
    }
}
