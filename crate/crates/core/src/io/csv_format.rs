//! Rank and score CSVs.
//!
//! Rank CSV: a header of object labels, then one row of integer ranks per
//! expert. Score CSV: a header of indicator names, then either integer expert
//! rows on the 0..=3 scale or a single row labelled `mean` holding published
//! per-indicator means; an optional row labelled `weight` sets the weights.
//! Comma-delimited, cells trimmed, `.` as the decimal point.

use csv::{ReaderBuilder, StringRecord, Trim, WriterBuilder};

use crate::stats::{RankMatrix, ScoreData, ScoreMatrix, SCORE_SCALE_MAX};

use super::{parse_error, FormatError};

const MEAN_LABEL: &str = "mean";
const WEIGHT_LABEL: &str = "weight";

fn records(text: &str) -> Result<Vec<(usize, StringRecord)>, FormatError> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_error(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        // A blank line reads as a single empty cell.
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        out.push((line, rec));
    }
    Ok(out)
}

fn write_rows<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

pub fn parse_rank_csv(text: &str) -> Result<RankMatrix, FormatError> {
    let mut recs = records(text)?.into_iter();
    let (_, head) = recs
        .next()
        .ok_or_else(|| parse_error(1, "missing header row"))?;
    let labels: Vec<String> = head.iter().map(str::to_owned).collect();
    let n = labels.len();
    let mut rows = Vec::new();
    for (line, rec) in recs {
        if rec.len() != n {
            return Err(FormatError::RaggedRows {
                line,
                len: rec.len(),
                expected: n,
            });
        }
        let row = rec
            .iter()
            .enumerate()
            .map(|(i, cell)| {
                cell.parse::<i64>()
                    .map_err(|_| FormatError::NonIntegerCell {
                        line,
                        column: i + 1,
                        cell: cell.to_owned(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(RankMatrix::new(labels, rows)?)
}

pub fn write_rank_csv(r: &RankMatrix) -> String {
    let body = r
        .rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>());
    write_rows(std::iter::once(r.object_labels().to_vec()).chain(body))
}

fn decimal_row(line: usize, rec: &StringRecord, k: usize) -> Result<Vec<f64>, FormatError> {
    if rec.len() != k + 1 {
        return Err(FormatError::RaggedRows {
            line,
            len: rec.len(),
            expected: k + 1,
        });
    }
    rec.iter()
        .skip(1)
        .map(|cell| {
            cell.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| parse_error(line, format!("{cell:?} is not a number")))
        })
        .collect()
}

pub fn parse_score_csv(text: &str) -> Result<ScoreMatrix, FormatError> {
    let mut recs = records(text)?.into_iter();
    let (_, head) = recs
        .next()
        .ok_or_else(|| parse_error(1, "missing header row"))?;
    let names: Vec<String> = head.iter().map(str::to_owned).collect();
    let k = names.len();

    let mut experts: Vec<Vec<u8>> = Vec::new();
    let mut means: Option<Vec<f64>> = None;
    let mut weights: Option<Vec<f64>> = None;
    for (line, rec) in recs {
        match rec.get(0) {
            Some(MEAN_LABEL) => {
                if means.is_some() {
                    return Err(parse_error(line, "more than one `mean` row"));
                }
                let row = decimal_row(line, &rec, k)?;
                if let Some((i, v)) = row
                    .iter()
                    .enumerate()
                    .find(|(_, &v)| !(0.0..=SCORE_SCALE_MAX as f64).contains(&v))
                {
                    return Err(FormatError::ScoreOutOfScale {
                        line,
                        column: i + 2,
                        value: v.to_string(),
                    });
                }
                means = Some(row);
            }
            Some(WEIGHT_LABEL) => {
                if weights.is_some() {
                    return Err(parse_error(line, "more than one `weight` row"));
                }
                weights = Some(decimal_row(line, &rec, k)?);
            }
            _ => {
                if rec.len() != k {
                    return Err(FormatError::RaggedRows {
                        line,
                        len: rec.len(),
                        expected: k,
                    });
                }
                let mut row = Vec::with_capacity(k);
                for (i, cell) in rec.iter().enumerate() {
                    let value: i64 = cell.parse().map_err(|_| FormatError::NonIntegerCell {
                        line,
                        column: i + 1,
                        cell: cell.to_owned(),
                    })?;
                    match u8::try_from(value) {
                        Ok(s) if s <= SCORE_SCALE_MAX => row.push(s),
                        _ => {
                            return Err(FormatError::ScoreOutOfScale {
                                line,
                                column: i + 1,
                                value: cell.to_owned(),
                            })
                        }
                    }
                }
                experts.push(row);
            }
        }
    }
    let data = match means {
        Some(_) if !experts.is_empty() => {
            return Err(parse_error(
                1,
                "a `mean` row cannot be mixed with expert rows",
            ))
        }
        Some(m) => ScoreData::Means(m),
        None => ScoreData::Experts(experts),
    };
    Ok(ScoreMatrix::new(names, data, weights)?)
}

/// The `weight` row is written only when some weight differs from 1.
pub fn write_score_csv(s: &ScoreMatrix) -> String {
    let mut rows: Vec<Vec<String>> = vec![s.names().to_vec()];
    match s.data() {
        ScoreData::Experts(experts) => {
            rows.extend(
                experts
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect()),
            );
        }
        ScoreData::Means(means) => {
            let mut row = vec![MEAN_LABEL.to_owned()];
            row.extend(means.iter().map(ToString::to_string));
            rows.push(row);
        }
    }
    if s.weights().iter().any(|&w| w != 1.0) {
        let mut row = vec![WEIGHT_LABEL.to_owned()];
        row.extend(s.weights().iter().map(ToString::to_string));
        rows.push(row);
    }
    write_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::stats::{validate_rank_matrix, StatsError};
    use proptest::prelude::*;

    #[test]
    fn table1_fixture() {
        let r = parse_rank_csv(fixtures::TABLE1_CSV).unwrap();
        assert_eq!((r.experts(), r.objects()), (19, 16));
        assert_eq!(validate_rank_matrix(&r).len(), 1);
        assert_eq!(write_rank_csv(&r), fixtures::TABLE1_CSV);
    }

    #[test]
    fn table1_column_total() {
        // m * n(n+1)/2 plus one for expert 5's second 16.
        let r = parse_rank_csv(fixtures::TABLE1_CSV).unwrap();
        let total: i64 = r.rank_sums().iter().sum();
        assert_eq!(total, 19 * 16 * 17 / 2 + 1);
    }

    #[test]
    fn one_by_one() {
        let r = parse_rank_csv("1\n1\n").unwrap();
        assert_eq!((r.experts(), r.objects()), (1, 1));
    }

    #[test]
    fn rank_errors() {
        assert_eq!(
            parse_rank_csv("1,2\n1,2\n1\n"),
            Err(FormatError::RaggedRows {
                line: 3,
                len: 1,
                expected: 2
            })
        );
        assert_eq!(
            parse_rank_csv("1,2\n1, 2.5\n"),
            Err(FormatError::NonIntegerCell {
                line: 2,
                column: 2,
                cell: "2.5".into()
            })
        );
    }

    #[test]
    fn score_fixtures_round_trip() {
        for text in [fixtures::SCORES_TECH_CSV, fixtures::SCORES_PSYCH_CSV] {
            let s = parse_score_csv(text).unwrap();
            assert_eq!(write_score_csv(&s), text);
        }
    }

    #[test]
    fn score_cell_four_out_of_scale() {
        assert_eq!(
            parse_score_csv("a,b\n1,4\n"),
            Err(FormatError::ScoreOutOfScale {
                line: 2,
                column: 2,
                value: "4".into()
            })
        );
        assert!(matches!(
            parse_score_csv("a,b\nmean,1,3.5\n"),
            Err(FormatError::ScoreOutOfScale { column: 3, .. })
        ));
    }

    #[test]
    fn score_weights_row() {
        let s = parse_score_csv("a,b\n3,1\n2,2\nweight,2,1\n").unwrap();
        assert_eq!(s.weights(), &[2.0, 1.0]);
        assert_eq!(write_score_csv(&s), "a,b\n3,1\n2,2\nweight,2,1\n");
        assert!(matches!(
            parse_score_csv("a,b\n3,1\nweight,0,1\n"),
            Err(FormatError::Stats(StatsError::InvalidWeight { .. }))
        ));
    }

    #[test]
    fn mixed_rows_rejected() {
        assert!(parse_score_csv("a\n1\nmean,2\n").is_err());
    }

    proptest! {
        #[test]
        fn rank_csv_round_trip(rows in proptest::collection::vec(proptest::collection::vec(-5i64..40, 6), 0..10)) {
            let r = RankMatrix::from_rows(rows).unwrap();
            if r.objects() > 0 {
                let text = write_rank_csv(&r);
                prop_assert_eq!(parse_rank_csv(&text).unwrap(), r);
            }
        }

        #[test]
        fn score_csv_round_trip(
            rows in proptest::collection::vec(proptest::collection::vec(0u8..=3, 3), 0..10),
            weights in proptest::option::of(proptest::collection::vec(1u32..20, 3)),
        ) {
            let names = vec!["x".to_owned(), "y, z".to_owned(), "w".to_owned()];
            let weights = weights.map(|w| w.into_iter().map(|x| x as f64 / 4.0).collect());
            let s = ScoreMatrix::new(names, ScoreData::Experts(rows), weights).unwrap();
            prop_assert_eq!(parse_score_csv(&write_score_csv(&s)).unwrap(), s);
        }
    }
}
