//! Embedded copies of the files under the workspace `fixtures/` directory.

use crate::graph::WeightedGraph;
use crate::io::{parse_graph_file, parse_rank_csv, parse_score_csv};
use crate::stats::{RankMatrix, ScoreMatrix};

/// Eight-vertex, fifteen-edge example graph for the Prim exercise.
pub const FIG1_GRAPH: &str = include_str!("../../../fixtures/fig1.graph");
/// Ranks given by 19 experts to 16 quality indicators.
pub const TABLE1_CSV: &str = include_str!("../../../fixtures/table1.csv");
/// Published means of the 7 technical indicators.
pub const SCORES_TECH_CSV: &str = include_str!("../../../fixtures/scores_tech.csv");
/// Published means of the 9 psycho-pedagogical indicators.
pub const SCORES_PSYCH_CSV: &str = include_str!("../../../fixtures/scores_psych.csv");

pub fn fig1_graph() -> WeightedGraph {
    parse_graph_file(FIG1_GRAPH).expect("fig1 fixture parses")
}

pub fn table1() -> RankMatrix {
    parse_rank_csv(TABLE1_CSV).expect("table1 fixture parses")
}

pub fn scores_tech() -> ScoreMatrix {
    parse_score_csv(SCORES_TECH_CSV).expect("technical score fixture parses")
}

pub fn scores_psych() -> ScoreMatrix {
    parse_score_csv(SCORES_PSYCH_CSV).expect("psycho-pedagogical score fixture parses")
}
