use super::StatsError;

/// Top of the four-level scale: 0 absent, 1 low, 2 good, 3 very good.
pub const SCORE_SCALE_MAX: u8 = 3;

#[derive(Debug, Clone, PartialEq)]
pub enum ScoreData {
    /// One row per expert, one integer score per indicator.
    Experts(Vec<Vec<u8>>),
    /// Per-indicator means when only the summary has been published.
    Means(Vec<f64>),
}

/// Indicator scores on the four-level scale with per-indicator weights.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix {
    names: Vec<String>,
    weights: Vec<f64>,
    data: ScoreData,
}

impl ScoreMatrix {
    /// `weights` defaults to all ones when `None`.
    pub fn new(
        names: Vec<String>,
        data: ScoreData,
        weights: Option<Vec<f64>>,
    ) -> Result<Self, StatsError> {
        let k = names.len();
        let weights = weights.unwrap_or_else(|| vec![1.0; k]);
        if weights.len() != k {
            return Err(StatsError::RaggedRows {
                row: 0,
                len: weights.len(),
                expected: k,
            });
        }
        for (i, &w) in weights.iter().enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(StatsError::InvalidWeight {
                    indicator: i + 1,
                    weight: w,
                });
            }
        }
        let max = SCORE_SCALE_MAX;
        match &data {
            ScoreData::Experts(rows) => {
                for (j, row) in rows.iter().enumerate() {
                    if row.len() != k {
                        return Err(StatsError::RaggedRows {
                            row: j + 1,
                            len: row.len(),
                            expected: k,
                        });
                    }
                    if let Some((i, &s)) = row.iter().enumerate().find(|(_, &s)| s > max) {
                        return Err(StatsError::ScoreOutOfScale {
                            indicator: i + 1,
                            value: s as f64,
                            max,
                        });
                    }
                }
            }
            ScoreData::Means(means) => {
                if means.len() != k {
                    return Err(StatsError::RaggedRows {
                        row: 1,
                        len: means.len(),
                        expected: k,
                    });
                }
                if let Some((i, &s)) = means
                    .iter()
                    .enumerate()
                    .find(|(_, &s)| !(0.0..=max as f64).contains(&s))
                {
                    return Err(StatsError::ScoreOutOfScale {
                        indicator: i + 1,
                        value: s,
                        max,
                    });
                }
            }
        }
        Ok(ScoreMatrix {
            names,
            weights,
            data,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn data(&self) -> &ScoreData {
        &self.data
    }

    pub fn indicators(&self) -> usize {
        self.names.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorMean {
    pub name: String,
    pub mean: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateReport {
    pub indicators: Vec<IndicatorMean>,
    /// `sum(w_i * mean_i) / sum(w_i)`.
    pub group_mean: f64,
}

pub fn aggregate_scores(s: &ScoreMatrix) -> Result<AggregateReport, StatsError> {
    let means: Vec<f64> = match &s.data {
        ScoreData::Experts(rows) => {
            if rows.is_empty() {
                return Err(StatsError::EmptyMatrix);
            }
            let m = rows.len() as f64;
            (0..s.indicators())
                .map(|i| rows.iter().map(|r| r[i] as f64).sum::<f64>() / m)
                .collect()
        }
        ScoreData::Means(means) => means.clone(),
    };
    if means.is_empty() {
        return Err(StatsError::EmptyMatrix);
    }
    let weight_total: f64 = s.weights.iter().sum();
    let weighted: f64 = means.iter().zip(&s.weights).map(|(m, w)| m * w).sum();
    let indicators = s
        .names
        .iter()
        .zip(means)
        .zip(&s.weights)
        .map(|((name, mean), &weight)| IndicatorMean {
            name: name.clone(),
            mean,
            weight,
        })
        .collect();
    Ok(AggregateReport {
        indicators,
        group_mean: weighted / weight_total,
    })
}
