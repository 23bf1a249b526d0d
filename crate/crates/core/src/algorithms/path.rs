use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::graph::{VertexId, WeightedGraph};

use super::{check_vertex, SolverError};

#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPath {
    pub path: Vec<VertexId>,
    pub distance: f64,
}

#[derive(PartialEq)]
struct Entry {
    dist: f64,
    vertex: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    // Min-heap on distance, then on vertex index.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra from `source` to `target`.
///
/// Among equally short routes, each vertex keeps the lowest-index predecessor
/// that reaches it at its final distance.
pub fn shortest_path(
    g: &WeightedGraph,
    source: VertexId,
    target: VertexId,
) -> Result<ShortestPath, SolverError> {
    check_vertex(g, source.get())?;
    check_vertex(g, target.get())?;
    let adj = g.adjacency();
    let n = g.vertex_count();
    let (s, t) = (source.index(), target.index());

    let mut dist = vec![f64::INFINITY; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[s] = 0.0;
    heap.push(Entry {
        dist: 0.0,
        vertex: s,
    });

    while let Some(Entry {
        dist: du,
        vertex: u,
    }) = heap.pop()
    {
        if settled[u] {
            continue;
        }
        settled[u] = true;
        for &(v, w) in &adj[u] {
            if settled[v] {
                continue;
            }
            let alt = du + w;
            if alt < dist[v] {
                dist[v] = alt;
                pred[v] = Some(u);
                heap.push(Entry {
                    dist: alt,
                    vertex: v,
                });
            } else if alt == dist[v] && pred[v].is_some_and(|p| u < p) {
                pred[v] = Some(u);
            }
        }
    }

    if !dist[t].is_finite() {
        return Err(SolverError::Unreachable {
            from: source.get(),
            to: target.get(),
        });
    }
    let mut path = vec![target];
    let mut cur = t;
    while let Some(p) = pred[cur] {
        path.push(VertexId::from_index(p));
        cur = p;
    }
    path.reverse();
    Ok(ShortestPath {
        path,
        distance: dist[t],
    })
}
