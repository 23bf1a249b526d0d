use std::collections::VecDeque;

use crate::graph::{VertexId, WeightedGraph};

use super::SolverError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub from: VertexId,
    pub to: VertexId,
    pub capacity: f64,
}

/// Directed capacity network on vertices `1..=n`. Parallel arcs are allowed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FlowNetwork {
    n: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: f64) -> Result<(), SolverError> {
        for id in [from, to] {
            if id == 0 || id > self.n {
                return Err(SolverError::BadVertex { id, n: self.n });
            }
        }
        if !capacity.is_finite() || capacity < 0.0 {
            return Err(SolverError::InvalidCapacity(capacity));
        }
        self.arcs.push(Arc {
            from: VertexId::from_index(from - 1),
            to: VertexId::from_index(to - 1),
            capacity,
        });
        Ok(())
    }

    /// Each undirected edge becomes a pair of opposite arcs of equal capacity.
    pub fn from_undirected(g: &WeightedGraph) -> Self {
        let mut net = FlowNetwork::new(g.vertex_count());
        for e in g.edges() {
            let (u, v) = e.ends();
            net.add_arc(u, v, e.weight)
                .expect("graph edges are valid arcs");
            net.add_arc(v, u, e.weight)
                .expect("graph edges are valid arcs");
        }
        net
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Total capacity of arcs leaving `side` (1-based ids) for the complement.
    pub fn cut_capacity(&self, side: &[VertexId]) -> f64 {
        let mut in_side = vec![false; self.n];
        for v in side {
            in_side[v.index()] = true;
        }
        self.arcs
            .iter()
            .filter(|a| in_side[a.from.index()] && !in_side[a.to.index()])
            .map(|a| a.capacity)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowResult {
    pub value: f64,
    /// Source side of a minimum cut, in ascending order.
    pub source_side: Vec<VertexId>,
}

struct Residual {
    to: usize,
    cap: f64,
}

/// Edmonds-Karp: BFS augmenting paths, arcs explored in insertion order.
pub fn max_flow(
    net: &FlowNetwork,
    source: VertexId,
    sink: VertexId,
) -> Result<FlowResult, SolverError> {
    let n = net.n;
    for id in [source.get(), sink.get()] {
        if id > n {
            return Err(SolverError::BadVertex { id, n });
        }
    }
    if source == sink {
        return Err(SolverError::SourceIsSink);
    }
    let (s, t) = (source.index(), sink.index());

    // Residual arcs are stored in pairs: 2k forward, 2k+1 reverse.
    let mut res: Vec<Residual> = Vec::with_capacity(2 * net.arcs.len());
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in &net.arcs {
        let (u, v) = (a.from.index(), a.to.index());
        out[u].push(res.len());
        res.push(Residual {
            to: v,
            cap: a.capacity,
        });
        out[v].push(res.len());
        res.push(Residual { to: u, cap: 0.0 });
    }

    let mut value = 0.0;
    loop {
        let mut via: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &r in &out[u] {
                let v = res[r].to;
                if !seen[v] && res[r].cap > 0.0 {
                    seen[v] = true;
                    via[v] = Some(r);
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            let source_side = (0..n)
                .filter(|&v| seen[v])
                .map(VertexId::from_index)
                .collect();
            return Ok(FlowResult { value, source_side });
        }
        let mut bottleneck = f64::INFINITY;
        let mut v = t;
        while let Some(r) = via[v] {
            bottleneck = bottleneck.min(res[r].cap);
            v = res[r ^ 1].to;
        }
        let mut v = t;
        while let Some(r) = via[v] {
            res[r].cap -= bottleneck;
            res[r ^ 1].cap += bottleneck;
            v = res[r ^ 1].to;
        }
        value += bottleneck;
    }
}
