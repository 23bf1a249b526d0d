//! Expert-evaluation statistics: rank concordance, score aggregation and the
//! angular two-proportion test.

mod concordance;
pub mod distributions;
mod fisher;
mod scores;

use thiserror::Error;

pub use concordance::{
    kendall_w, kendall_w_with, validate_rank_matrix, ConcordanceResult, RankMatrix, TieCorrection,
    TieWarning,
};
pub use distributions::{chi_square_critical, normal_quantile};
pub use fisher::{angular_transform, fisher_angular_test, FisherResult};
pub use scores::{
    aggregate_scores, AggregateReport, IndicatorMean, ScoreData, ScoreMatrix, SCORE_SCALE_MAX,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("need at least 2 experts and 2 objects, got m = {m}, n = {n}")]
    DegenerateMatrix { m: usize, n: usize },
    #[error("expert {expert} gave rank {rank} to object {object}; ranks must lie in 1..={n}")]
    OutOfRangeRank {
        expert: usize,
        object: usize,
        rank: i64,
        n: usize,
    },
    #[error("row {row} has {len} cells, expected {expected}")]
    RaggedRows {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("significance level {0} must lie strictly between 0 and 1")]
    InvalidAlpha(f64),
    #[error("degrees of freedom must be at least 1")]
    InvalidDegreesOfFreedom,
    #[error("score matrix has no experts")]
    EmptyMatrix,
    #[error("score {value} for indicator {indicator} is outside the 0..={max} scale")]
    ScoreOutOfScale {
        indicator: usize,
        value: f64,
        max: u8,
    },
    #[error("weight {weight} for indicator {indicator} must be positive and finite")]
    InvalidWeight { indicator: usize, weight: f64 },
    #[error("proportion {0} must lie in [0, 1]")]
    InvalidProportion(f64),
    #[error("sample size must be at least 1")]
    InvalidSampleSize,
}
