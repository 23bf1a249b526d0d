//! Text formats for graphs, networks, knapsack instances and CSV matrices,
//! plus the JSON result report.

mod csv_format;
mod graph_format;
pub mod report;

use thiserror::Error;

use crate::algorithms::SolverError;
use crate::graph::GraphError;
use crate::stats::StatsError;

pub use csv_format::{parse_rank_csv, parse_score_csv, write_rank_csv, write_score_csv};
pub use graph_format::{
    parse_graph_file, parse_knapsack_file, parse_network_file, write_graph, write_knapsack,
    write_network, KnapsackInstance,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    BadVertexId { line: usize, id: usize, n: usize },
    #[error("line {line}: {len} cells, expected {expected}")]
    RaggedRows {
        line: usize,
        len: usize,
        expected: usize,
    },
    #[error("line {line}, column {column}: {cell:?} is not an integer")]
    NonIntegerCell {
        line: usize,
        column: usize,
        cell: String,
    },
    #[error("line {line}, column {column}: score {value} outside the 0..=3 scale")]
    ScoreOutOfScale {
        line: usize,
        column: usize,
        value: String,
    },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: {source}")]
    Solver { line: usize, source: SolverError },
    #[error(transparent)]
    Stats(#[from] StatsError),
}

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}
