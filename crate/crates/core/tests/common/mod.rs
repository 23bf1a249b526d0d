//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the solvers it checks.

#![allow(dead_code, clippy::needless_range_loop)]

use opskit::algorithms::{FlowNetwork, Item};
use opskit::WeightedGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected graph on `n` vertices with integer weights `1..=max_w`: a random
/// spanning tree plus each remaining pair with probability `density`.
pub fn random_connected_graph(
    rng: &mut impl Rng,
    n: usize,
    density: f64,
    max_w: u32,
) -> WeightedGraph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        edges.push((parent.min(child), parent.max(child)));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    WeightedGraph::from_edges(
        n,
        edges
            .into_iter()
            .map(|(u, v)| (u, v, rng.gen_range(1..=max_w) as f64)),
    )
    .unwrap()
}

/// Any graph, possibly disconnected.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64, max_w: u32) -> WeightedGraph {
    let mut g = WeightedGraph::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(density) {
                g.add_edge(u, v, rng.gen_range(0..=max_w) as f64).unwrap();
            }
        }
    }
    g
}

/// Literal transcription of the matrix-based Prim listing: 1-based arrays,
/// `inf` cells, ascending strict-`<` selection, strict-`>` relabelling.
/// Returns tree edges as `(near[v], v)` pairs in discovery order.
pub fn program1_trace(g: &WeightedGraph, w: usize) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let inf = f64::INFINITY;
    let mut c = vec![vec![inf; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            if let Some(x) = g.weight(i, j) {
                if i != j {
                    c[i][j] = x;
                    c[j][i] = x;
                }
            }
        }
    }
    let mut in_w = vec![true; n + 1];
    in_w[w] = false;
    let mut t = Vec::new();
    let mut near = vec![0; n + 1];
    let mut d = vec![inf; n + 1];
    for v in 1..=n {
        near[v] = w;
        d[v] = c[v][w];
    }
    let mut i = 1;
    while i < n {
        let mut dmin = inf;
        let mut v = 0;
        for j in 1..=n {
            if d[j] < dmin && in_w[j] {
                v = j;
                dmin = d[j];
            }
        }
        assert!(v != 0, "listing assumes a connected graph");
        t.push((near[v], v));
        in_w[v] = false;
        for u in 1..=n {
            if d[u] > c[u][v] && in_w[u] {
                near[u] = v;
                d[u] = c[u][v];
            }
        }
        i += 1;
    }
    t
}

/// Minimum over every simple `s`-`t` path by depth-first enumeration.
pub fn brute_shortest_distance(g: &WeightedGraph, s: usize, t: usize) -> Option<f64> {
    fn dfs(
        g: &WeightedGraph,
        at: usize,
        t: usize,
        seen: &mut Vec<bool>,
        len: f64,
        best: &mut Option<f64>,
    ) {
        if at == t {
            if best.is_none_or(|b| len < b) {
                *best = Some(len);
            }
            return;
        }
        for next in 1..=g.vertex_count() {
            if !seen[next] {
                if let Some(w) = g.weight(at, next) {
                    seen[next] = true;
                    dfs(g, next, t, seen, len + w, best);
                    seen[next] = false;
                }
            }
        }
    }
    let mut seen = vec![false; g.vertex_count() + 1];
    seen[s] = true;
    let mut best = None;
    dfs(g, s, t, &mut seen, 0.0, &mut best);
    best
}

/// Path length if `path` walks real edges from `s` to `t`.
pub fn path_length(g: &WeightedGraph, path: &[usize]) -> Option<f64> {
    path.windows(2).map(|p| g.weight(p[0], p[1])).sum()
}

/// Minimum `s`-`t` cut capacity over all vertex bipartitions. Equal to the
/// maximum flow value by the max-flow/min-cut theorem.
pub fn brute_min_cut(net: &FlowNetwork, s: usize, t: usize) -> f64 {
    let n = net.vertex_count();
    let others: Vec<usize> = (1..=n).filter(|&v| v != s && v != t).collect();
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << others.len()) {
        let mut side = vec![false; n + 1];
        side[s] = true;
        for (i, &v) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                side[v] = true;
            }
        }
        let cap: f64 = net
            .arcs()
            .iter()
            .filter(|a| side[a.from.get()] && !side[a.to.get()])
            .map(|a| a.capacity)
            .sum();
        best = best.min(cap);
    }
    best
}

pub fn random_network(rng: &mut impl Rng, n: usize, arcs: usize, max_cap: u32) -> FlowNetwork {
    let mut net = FlowNetwork::new(n);
    for _ in 0..arcs {
        let a = rng.gen_range(1..=n);
        let mut b = rng.gen_range(1..=n);
        while b == a {
            b = rng.gen_range(1..=n);
        }
        net.add_arc(a, b, rng.gen_range(0..=max_cap) as f64)
            .unwrap();
    }
    net
}

/// Best value over all `2^k` subsets.
pub fn brute_knapsack(items: &[Item], capacity: u64) -> f64 {
    let mut best = 0.0f64;
    for mask in 0u32..(1 << items.len()) {
        let (mut w, mut v) = (0u64, 0.0);
        for (i, item) in items.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w += item.weight;
                v += item.value;
            }
        }
        if w <= capacity && v > best {
            best = v;
        }
    }
    best
}

pub fn random_items(rng: &mut impl Rng, k: usize) -> Vec<Item> {
    (0..k)
        .map(|_| Item {
            weight: rng.gen_range(0..=12),
            value: rng.gen_range(0..=30) as f64,
        })
        .collect()
}

/// Kendall's W and its chi-square by direct deviation sums in floating point.
pub fn reference_kendall(rows: &[Vec<i64>]) -> (f64, f64) {
    let m = rows.len() as f64;
    let n = rows[0].len();
    let sums: Vec<f64> = (0..n)
        .map(|i| rows.iter().map(|r| r[i] as f64).sum())
        .collect();
    let mean = sums.iter().sum::<f64>() / n as f64;
    let s: f64 = sums.iter().map(|r| (r - mean).powi(2)).sum();
    let nf = n as f64;
    let w = 12.0 * s / (m * m * (nf.powi(3) - nf));
    let chi = 12.0 * s / (m * nf * (nf + 1.0));
    (w, chi)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<i64> {
    let mut p: Vec<i64> = (1..=n as i64).collect();
    p.shuffle(rng);
    p
}
