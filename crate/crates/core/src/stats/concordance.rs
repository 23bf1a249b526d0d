use super::distributions::chi_square_critical;
use super::StatsError;

/// Ranks given by `m` experts (rows) to `n` objects (columns).
///
/// Rows are expected to be permutations of `1..=n`; rows that are not are
/// reported by [`validate_rank_matrix`] but still accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct RankMatrix {
    objects: Vec<String>,
    rows: Vec<Vec<i64>>,
}

impl RankMatrix {
    /// `objects` labels the columns; every row must have one cell per object.
    pub fn new(objects: Vec<String>, rows: Vec<Vec<i64>>) -> Result<Self, StatsError> {
        let n = objects.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(StatsError::RaggedRows {
                row: i + 1,
                len: row.len(),
                expected: n,
            });
        }
        Ok(RankMatrix { objects, rows })
    }

    /// Columns labelled `1..=n`, with `n` taken from the first row.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, StatsError> {
        let n = rows.first().map_or(0, Vec::len);
        RankMatrix::new((1..=n).map(|i| i.to_string()).collect(), rows)
    }

    pub fn experts(&self) -> usize {
        self.rows.len()
    }

    pub fn objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_labels(&self) -> &[String] {
        &self.objects
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Column totals `R_i`.
    pub fn rank_sums(&self) -> Vec<i64> {
        (0..self.objects())
            .map(|i| self.rows.iter().map(|r| r[i]).sum())
            .collect()
    }
}

/// An expert row that is not a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TieWarning {
    /// 1-based row number.
    pub expert: usize,
    /// Ranks that occur more than once.
    pub duplicated: Vec<i64>,
    /// Ranks in `1..=n` that never occur.
    pub missing: Vec<i64>,
    /// Cells outside `1..=n`.
    pub out_of_range: Vec<i64>,
}

pub fn validate_rank_matrix(r: &RankMatrix) -> Vec<TieWarning> {
    let n = r.objects();
    let mut warnings = Vec::new();
    for (j, row) in r.rows.iter().enumerate() {
        let mut counts = vec![0usize; n + 1];
        let mut out_of_range = Vec::new();
        for &x in row {
            match usize::try_from(x) {
                Ok(k) if (1..=n).contains(&k) => counts[k] += 1,
                _ => out_of_range.push(x),
            }
        }
        let duplicated: Vec<i64> = (1..=n)
            .filter(|&k| counts[k] > 1)
            .map(|k| k as i64)
            .collect();
        let missing: Vec<i64> = (1..=n)
            .filter(|&k| counts[k] == 0)
            .map(|k| k as i64)
            .collect();
        if !duplicated.is_empty() || !missing.is_empty() || !out_of_range.is_empty() {
            warnings.push(TieWarning {
                expert: j + 1,
                duplicated,
                missing,
                out_of_range,
            });
        }
    }
    warnings
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieCorrection {
    /// Plain `W = 12S / (m^2 (n^3 - n))`.
    #[default]
    None,
    /// Subtracts `m * sum(t^3 - t)` over groups of equal ranks within each row.
    Standard,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcordanceResult {
    pub m: usize,
    pub n: usize,
    pub rank_sums: Vec<i64>,
    pub mean_rank_sum: f64,
    /// Sum of squared deviations of the rank sums from their mean.
    pub s: f64,
    pub w: f64,
    pub chi_square: f64,
    pub df: u32,
    pub alpha: f64,
    pub critical: f64,
    pub significant: bool,
    pub tie_correction: TieCorrection,
    pub tie_warnings: Vec<TieWarning>,
}

/// Kendall's coefficient of concordance with its chi-square test.
pub fn kendall_w(r: &RankMatrix, alpha: f64) -> Result<ConcordanceResult, StatsError> {
    kendall_w_with(r, alpha, TieCorrection::None)
}

pub fn kendall_w_with(
    r: &RankMatrix,
    alpha: f64,
    correction: TieCorrection,
) -> Result<ConcordanceResult, StatsError> {
    let (m, n) = (r.experts(), r.objects());
    if m < 2 || n < 2 {
        return Err(StatsError::DegenerateMatrix { m, n });
    }
    for (j, row) in r.rows.iter().enumerate() {
        if let Some((i, &rank)) = row.iter().enumerate().find(|(_, &x)| x < 1 || x > n as i64) {
            return Err(StatsError::OutOfRangeRank {
                expert: j + 1,
                object: i + 1,
                rank,
                n,
            });
        }
    }
    let df = u32::try_from(n - 1).map_err(|_| StatsError::DegenerateMatrix { m, n })?;
    let critical = chi_square_critical(df, alpha)?;

    let rank_sums = r.rank_sums();
    let total: i128 = rank_sums.iter().map(|&x| x as i128).sum();
    let total_sq: i128 = rank_sums.iter().map(|&x| (x as i128) * (x as i128)).sum();
    // n * S is an exact integer.
    let n_s = n as i128 * total_sq - total * total;
    let s = n_s as f64 / n as f64;

    let (mf, nf) = (m as f64, n as f64);
    let (w, chi_square) = match correction {
        TieCorrection::None => (
            12.0 * s / (mf * mf * (nf * nf * nf - nf)),
            12.0 * s / (mf * nf * (nf + 1.0)),
        ),
        TieCorrection::Standard => {
            let ties: f64 = r.rows.iter().map(|row| tie_term(row, n)).sum();
            let w = 12.0 * s / (mf * mf * (nf * nf * nf - nf) - mf * ties);
            (w, mf * (nf - 1.0) * w)
        }
    };

    Ok(ConcordanceResult {
        m,
        n,
        rank_sums,
        mean_rank_sum: total as f64 / nf,
        s,
        w,
        chi_square,
        df,
        alpha,
        critical,
        significant: chi_square > critical,
        tie_correction: correction,
        tie_warnings: validate_rank_matrix(r),
    })
}

fn tie_term(row: &[i64], n: usize) -> f64 {
    let mut counts = vec![0u64; n + 1];
    for &x in row {
        counts[x as usize] += 1;
    }
    counts.iter().map(|&t| (t * t * t - t) as f64).sum()
}
