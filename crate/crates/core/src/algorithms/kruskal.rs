use crate::graph::{Edge, WeightedGraph};

use super::{DisjointSets, MstResult, SolverError};

/// Kruskal's algorithm; ties in weight are taken in `(u, v)` order.
pub fn kruskal_mst(g: &WeightedGraph) -> Result<MstResult, SolverError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolverError::DisconnectedGraph);
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by(|a, b| a.weight.total_cmp(&b.weight));
    let mut sets = DisjointSets::new(n);
    let mut tree = Vec::with_capacity(n - 1);
    for e in edges {
        if tree.len() == n - 1 {
            break;
        }
        if sets.union(e.u.index(), e.v.index()) {
            tree.push(e);
        }
    }
    if tree.len() != n - 1 {
        return Err(SolverError::DisconnectedGraph);
    }
    Ok(MstResult::from_edges(tree))
}
