//! Versioned JSON report shared by every CLI subcommand.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algorithms::{FlowResult, KnapsackResult, MstResult, ShortestPath};
use crate::stats::{AggregateReport, ConcordanceResult, FisherResult, TieCorrection};

pub const REPORT_FORMAT: u32 = 1;

/// Full-precision value with its two-decimal presentation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Num {
    pub value: f64,
    pub display: String,
}

impl From<f64> for Num {
    fn from(value: f64) -> Self {
        Num {
            value,
            display: format!("{value:.2}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEdge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportTieWarning {
    pub expert: usize,
    pub duplicated: Vec<i64>,
    pub missing: Vec<i64>,
    pub out_of_range: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportIndicator {
    pub name: String,
    pub mean: Num,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "kebab-case")]
pub enum TaskResult {
    Mst {
        algorithm: String,
        start: Option<usize>,
        edges: Vec<ReportEdge>,
        total_weight: Num,
    },
    ShortestPath {
        source: usize,
        target: usize,
        path: Vec<usize>,
        distance: Num,
    },
    MaxFlow {
        source: usize,
        sink: usize,
        value: Num,
        source_side: Vec<usize>,
        cut_capacity: Num,
    },
    Knapsack {
        capacity: u64,
        best_value: Num,
        /// 1-based item numbers.
        chosen: Vec<usize>,
        chosen_weight: u64,
    },
    Concordance {
        m: usize,
        n: usize,
        rank_sums: Vec<i64>,
        s: Num,
        w: Num,
        chi_square: Num,
        df: u32,
        alpha: f64,
        critical: Num,
        tie_correction: bool,
        tie_warnings: Vec<ReportTieWarning>,
    },
    Aggregate {
        indicators: Vec<ReportIndicator>,
        group_mean: Num,
    },
    Fisher {
        p1: f64,
        n1: u64,
        p2: f64,
        n2: u64,
        phi1: Num,
        phi2: Num,
        phi_emp: Num,
        alpha: f64,
        phi_crit: Num,
    },
    Chi2Critical {
        df: u32,
        alpha: f64,
        critical: Num,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultReport {
    pub format: u32,
    pub tool_version: String,
    /// SHA-256 of the input bytes, hex encoded.
    pub input_digest: String,
    pub result: TaskResult,
    pub significant: Option<bool>,
}

impl ResultReport {
    pub fn new(input: &[u8], result: TaskResult) -> Self {
        let significant = match &result {
            TaskResult::Concordance {
                chi_square,
                critical,
                ..
            } => Some(chi_square.value > critical.value),
            TaskResult::Fisher {
                phi_emp, phi_crit, ..
            } => Some(phi_emp.value > phi_crit.value),
            _ => None,
        };
        ResultReport {
            format: REPORT_FORMAT,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            input_digest: hex::encode(Sha256::digest(input)),
            result,
            significant,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable summary with values rounded for display.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            TaskResult::Mst {
                algorithm,
                edges,
                total_weight,
                ..
            } => {
                writeln!(
                    out,
                    "minimum spanning tree ({algorithm}), {} edges",
                    edges.len()
                )
                .unwrap();
                for e in edges {
                    writeln!(out, "  {} - {}  weight {}", e.u, e.v, e.weight).unwrap();
                }
                writeln!(out, "total weight: {}", total_weight.value).unwrap();
            }
            TaskResult::ShortestPath { path, distance, .. } => {
                let route: Vec<String> = path.iter().map(ToString::to_string).collect();
                writeln!(out, "path: {}", route.join(" -> ")).unwrap();
                writeln!(out, "distance: {}", distance.value).unwrap();
            }
            TaskResult::MaxFlow {
                source,
                sink,
                value,
                source_side,
                cut_capacity,
            } => {
                writeln!(out, "max flow {source} -> {sink}: {}", value.value).unwrap();
                let side: Vec<String> = source_side.iter().map(ToString::to_string).collect();
                writeln!(out, "min cut source side: {{{}}}", side.join(", ")).unwrap();
                writeln!(out, "cut capacity: {}", cut_capacity.value).unwrap();
            }
            TaskResult::Knapsack {
                capacity,
                best_value,
                chosen,
                chosen_weight,
            } => {
                let items: Vec<String> = chosen.iter().map(ToString::to_string).collect();
                writeln!(out, "best value: {}", best_value.value).unwrap();
                writeln!(out, "chosen items: [{}]", items.join(", ")).unwrap();
                writeln!(out, "weight used: {chosen_weight} of {capacity}").unwrap();
            }
            TaskResult::Concordance {
                m,
                n,
                s,
                w,
                chi_square,
                df,
                alpha,
                critical,
                tie_correction,
                tie_warnings,
                ..
            } => {
                writeln!(out, "experts: {m}, objects: {n}").unwrap();
                if *tie_correction {
                    writeln!(out, "tie correction: on").unwrap();
                }
                writeln!(out, "S = {}", s.display).unwrap();
                writeln!(out, "W = {:.3}", w.value).unwrap();
                writeln!(out, "chi-square = {} (df = {df})", chi_square.display).unwrap();
                writeln!(
                    out,
                    "critical value at alpha = {alpha}: {}",
                    critical.display
                )
                .unwrap();
                for t in tie_warnings {
                    writeln!(
                        out,
                        "warning: expert {} is not a permutation (duplicated {:?}, missing {:?}{})",
                        t.expert,
                        t.duplicated,
                        t.missing,
                        if t.out_of_range.is_empty() {
                            String::new()
                        } else {
                            format!(", out of range {:?}", t.out_of_range)
                        }
                    )
                    .unwrap();
                }
            }
            TaskResult::Aggregate {
                indicators,
                group_mean,
            } => {
                for i in indicators {
                    writeln!(
                        out,
                        "  {}: {} (weight {})",
                        i.name, i.mean.display, i.weight
                    )
                    .unwrap();
                }
                writeln!(out, "group mean: {}", group_mean.display).unwrap();
            }
            TaskResult::Fisher {
                phi1,
                phi2,
                phi_emp,
                alpha,
                phi_crit,
                ..
            } => {
                writeln!(out, "phi1 = {:.4}, phi2 = {:.4}", phi1.value, phi2.value).unwrap();
                writeln!(out, "phi_emp = {}", phi_emp.display).unwrap();
                writeln!(
                    out,
                    "critical value at alpha = {alpha}: {}",
                    phi_crit.display
                )
                .unwrap();
            }
            TaskResult::Chi2Critical {
                df,
                alpha,
                critical,
            } => {
                writeln!(
                    out,
                    "chi-square critical value (df = {df}, alpha = {alpha}): {:.3}",
                    critical.value
                )
                .unwrap();
            }
        }
        if let Some(sig) = self.significant {
            let verdict = if sig {
                "SIGNIFICANT"
            } else {
                "NOT SIGNIFICANT"
            };
            writeln!(out, "verdict: {verdict}").unwrap();
        }
        out
    }
}

impl TaskResult {
    pub fn mst(algorithm: &str, start: Option<usize>, r: &MstResult) -> Self {
        TaskResult::Mst {
            algorithm: algorithm.to_owned(),
            start,
            edges: r
                .edges
                .iter()
                .map(|e| ReportEdge {
                    u: e.u.get(),
                    v: e.v.get(),
                    weight: e.weight,
                })
                .collect(),
            total_weight: r.total_weight.into(),
        }
    }

    pub fn shortest_path(source: usize, target: usize, p: &ShortestPath) -> Self {
        TaskResult::ShortestPath {
            source,
            target,
            path: p.path.iter().map(|v| v.get()).collect(),
            distance: p.distance.into(),
        }
    }

    pub fn max_flow(source: usize, sink: usize, f: &FlowResult, cut_capacity: f64) -> Self {
        TaskResult::MaxFlow {
            source,
            sink,
            value: f.value.into(),
            source_side: f.source_side.iter().map(|v| v.get()).collect(),
            cut_capacity: cut_capacity.into(),
        }
    }

    pub fn knapsack(capacity: u64, r: &KnapsackResult, chosen_weight: u64) -> Self {
        TaskResult::Knapsack {
            capacity,
            best_value: r.best_value.into(),
            chosen: r.chosen.iter().map(|i| i + 1).collect(),
            chosen_weight,
        }
    }

    pub fn concordance(r: &ConcordanceResult) -> Self {
        TaskResult::Concordance {
            m: r.m,
            n: r.n,
            rank_sums: r.rank_sums.clone(),
            s: r.s.into(),
            w: r.w.into(),
            chi_square: r.chi_square.into(),
            df: r.df,
            alpha: r.alpha,
            critical: r.critical.into(),
            tie_correction: r.tie_correction == TieCorrection::Standard,
            tie_warnings: r
                .tie_warnings
                .iter()
                .map(|t| ReportTieWarning {
                    expert: t.expert,
                    duplicated: t.duplicated.clone(),
                    missing: t.missing.clone(),
                    out_of_range: t.out_of_range.clone(),
                })
                .collect(),
        }
    }

    pub fn aggregate(r: &AggregateReport) -> Self {
        TaskResult::Aggregate {
            indicators: r
                .indicators
                .iter()
                .map(|i| ReportIndicator {
                    name: i.name.clone(),
                    mean: i.mean.into(),
                    weight: i.weight,
                })
                .collect(),
            group_mean: r.group_mean.into(),
        }
    }

    pub fn fisher(r: &FisherResult) -> Self {
        TaskResult::Fisher {
            p1: r.p1,
            n1: r.n1,
            p2: r.p2,
            n2: r.n2,
            phi1: r.phi1.into(),
            phi2: r.phi2.into(),
            phi_emp: r.phi_emp.into(),
            alpha: r.alpha,
            phi_crit: r.phi_crit.into(),
        }
    }
}
