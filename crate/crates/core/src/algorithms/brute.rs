use crate::graph::{Edge, WeightedGraph};

use super::{MstResult, SolverError};

pub const MAX_BRUTE_FORCE_VERTICES: usize = 10;

/// Minimum spanning tree by enumerating every spanning tree of `g`.
///
/// Each acyclic `(n-1)`-edge subset is visited exactly once; the first
/// minimum in enumeration order is returned. Intended as an oracle for small
/// graphs only.
pub fn enumerate_spanning_trees_min(g: &WeightedGraph) -> Result<MstResult, SolverError> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(SolverError::TooLarge {
            n,
            limit: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    if n == 0 {
        return Err(SolverError::DisconnectedGraph);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut search = Search {
        edges: &edges,
        need: n - 1,
        chosen: Vec::with_capacity(n - 1),
        best: None,
    };
    let component: Vec<usize> = (0..n).collect();
    search.visit(0, &component);
    let best = search.best.ok_or(SolverError::DisconnectedGraph)?;
    Ok(MstResult::from_edges(best.1))
}

struct Search<'a> {
    edges: &'a [Edge],
    need: usize,
    chosen: Vec<Edge>,
    best: Option<(f64, Vec<Edge>)>,
}

impl Search<'_> {
    fn visit(&mut self, next: usize, component: &[usize]) {
        if self.chosen.len() == self.need {
            let w: f64 = self.chosen.iter().map(|e| e.weight).sum();
            if self.best.as_ref().is_none_or(|(b, _)| w < *b) {
                self.best = Some((w, self.chosen.clone()));
            }
            return;
        }
        if self.edges.len() - next < self.need - self.chosen.len() {
            return;
        }
        let e = self.edges[next];
        let (a, b) = (component[e.u.index()], component[e.v.index()]);
        if a != b {
            let merged: Vec<usize> = component
                .iter()
                .map(|&c| if c == b { a } else { c })
                .collect();
            self.chosen.push(e);
            self.visit(next + 1, &merged);
            self.chosen.pop();
        }
        self.visit(next + 1, component);
    }
}
