use crate::graph::{
    weight_matrix_from_graph, Edge, ExtWeight, VertexId, WeightMatrix, WeightedGraph,
};

use super::{check_vertex, MstResult, SolverError};

/// Working arrays of the label-setting Prim procedure.
///
/// `near[v]` is the tree vertex closest to `v` and `d[v]` the weight of that
/// connection. Selection scans vertices in ascending order with a strict `<`,
/// so the lowest-index vertex wins ties; label updates use a strict `>`, so an
/// earlier `near` assignment survives an equal-weight alternative.
#[derive(Debug, Clone)]
pub struct PrimState<'a> {
    c: &'a WeightMatrix,
    start: VertexId,
    tree: Vec<Edge>,
    remaining: Vec<bool>,
    near: Vec<usize>,
    d: Vec<ExtWeight>,
}

impl<'a> PrimState<'a> {
    pub fn new(c: &'a WeightMatrix, start: VertexId) -> Self {
        let n = c.dim();
        let w = start.index();
        let mut remaining = vec![true; n];
        remaining[w] = false;
        PrimState {
            c,
            start,
            tree: Vec::with_capacity(n.saturating_sub(1)),
            remaining,
            near: vec![w; n],
            d: (0..n).map(|v| c.at(v, w)).collect(),
        }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn tree(&self) -> &[Edge] {
        &self.tree
    }

    pub fn is_done(&self) -> bool {
        self.tree.len() + 1 >= self.c.dim()
    }

    pub fn is_remaining(&self, v: VertexId) -> bool {
        self.remaining[v.index()]
    }

    pub fn near(&self, v: VertexId) -> VertexId {
        VertexId::from_index(self.near[v.index()])
    }

    pub fn label(&self, v: VertexId) -> ExtWeight {
        self.d[v.index()]
    }

    /// Adds one tree edge. Returns `Ok(None)` once the tree spans the graph.
    pub fn step(&mut self) -> Result<Option<Edge>, SolverError> {
        if self.is_done() {
            return Ok(None);
        }
        let n = self.c.dim();
        let mut dmin = ExtWeight::INFINITY;
        let mut chosen = None;
        for j in 0..n {
            if self.d[j] < dmin && self.remaining[j] {
                chosen = Some(j);
                dmin = self.d[j];
            }
        }
        let v = chosen.ok_or(SolverError::DisconnectedGraph)?;
        let weight = dmin.value().expect("selected label is finite");
        let edge = Edge {
            u: VertexId::from_index(self.near[v]),
            v: VertexId::from_index(v),
            weight,
        };
        self.tree.push(edge);
        self.remaining[v] = false;
        for u in 0..n {
            let cuv = self.c.at(u, v);
            if self.d[u] > cuv && self.remaining[u] {
                self.near[u] = v;
                self.d[u] = cuv;
            }
        }
        Ok(Some(edge))
    }

    pub fn into_result(self) -> MstResult {
        MstResult::from_edges(self.tree)
    }
}

/// Prim's algorithm over the weight matrix of `g`, growing from `start`.
pub fn prim_mst(g: &WeightedGraph, start: VertexId) -> Result<MstResult, SolverError> {
    check_vertex(g, start.get())?;
    let c = weight_matrix_from_graph(g);
    let mut state = PrimState::new(&c, start);
    while state.step()?.is_some() {}
    Ok(state.into_result())
}
