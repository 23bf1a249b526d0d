//! Exact operations-research solvers.

mod brute;
mod flow;
mod knapsack;
mod kruskal;
mod path;
mod prim;

use thiserror::Error;

use crate::graph::{Edge, WeightedGraph};

pub use brute::{enumerate_spanning_trees_min, MAX_BRUTE_FORCE_VERTICES};
pub use flow::{max_flow, Arc, FlowNetwork, FlowResult};
pub use knapsack::{knapsack_01, Item, KnapsackResult};
pub use kruskal::kruskal_mst;
pub use path::{shortest_path, ShortestPath};
pub use prim::{prim_mst, PrimState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("graph is disconnected: no spanning tree exists")]
    DisconnectedGraph,
    #[error("vertex {id} is not in the graph (n = {n})")]
    BadVertex { id: usize, n: usize },
    #[error("{n} vertices exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },
    #[error("source and sink must differ")]
    SourceIsSink,
    #[error("invalid capacity {0}: must be finite and >= 0")]
    InvalidCapacity(f64),
    #[error("invalid item value {0}: must be finite and >= 0")]
    InvalidValue(f64),
}

/// A spanning tree with its edges in the order the algorithm produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct MstResult {
    pub edges: Vec<Edge>,
    pub total_weight: f64,
}

impl MstResult {
    fn from_edges(edges: Vec<Edge>) -> Self {
        let total_weight = edges.iter().map(|e| e.weight).sum();
        MstResult {
            edges,
            total_weight,
        }
    }

    /// True when the edges form a spanning tree of `g` using only edges of `g`.
    pub fn is_spanning_tree_of(&self, g: &WeightedGraph) -> bool {
        let n = g.vertex_count();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let mut sets = DisjointSets::new(n);
        self.edges.iter().all(|e| {
            let (u, v) = e.ends();
            g.weight(u, v) == Some(e.weight) && sets.union(u - 1, v - 1)
        })
    }
}

pub(crate) fn check_vertex(g: &WeightedGraph, id: usize) -> Result<(), SolverError> {
    if id == 0 || id > g.vertex_count() {
        Err(SolverError::BadVertex {
            id,
            n: g.vertex_count(),
        })
    } else {
        Ok(())
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
