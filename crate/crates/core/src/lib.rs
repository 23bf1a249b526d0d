//! Exact operations-research solvers (Prim's MST with brute-force oracles,
//! shortest path, max flow, 0/1 knapsack) and the statistics used to evaluate
//! expert surveys (Kendall's W, chi-square critical values, score aggregation,
//! the angular two-proportion criterion).

pub mod algorithms;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod stats;

pub use algorithms::{MstResult, SolverError};
pub use graph::{Edge, ExtWeight, GraphError, VertexId, WeightMatrix, WeightedGraph};
