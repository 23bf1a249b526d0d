//! `opskit` command-line front end.
//!
//! Exit codes: 0 on success, 1 when the solver or statistic rejects the
//! input (disconnected graph, degenerate matrix, ...), 2 on usage, I/O or
//! file-format errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use crate::algorithms::{
    enumerate_spanning_trees_min, knapsack_01, kruskal_mst, max_flow, prim_mst, shortest_path,
    FlowNetwork, SolverError,
};
use crate::graph::VertexId;
use crate::io::report::{ResultReport, TaskResult};
use crate::io::{
    parse_graph_file, parse_knapsack_file, parse_network_file, parse_rank_csv, parse_score_csv,
    FormatError,
};
use crate::stats::{
    aggregate_scores, chi_square_critical, fisher_angular_test, kendall_w_with, StatsError,
    TieCorrection,
};

const GRAPH_FORMAT: &str = "\
FILE is a graph in edge-list form ('-' reads stdin):

    n 8          first line: vertex count
    1 2 5        one undirected edge per line: u v weight
    # comment    lines starting with '#' are ignored

Vertex ids are 1-based. Weights are non-negative decimals. Each vertex pair
may appear at most once and self-loops are rejected.";

const NETWORK_FORMAT: &str = "\
FILE has the graph layout ('-' reads stdin):

    n 4          first line: vertex count
    1 2 3        one arc per line: from to capacity

Arcs are directed and parallel arcs are allowed. With --undirected the file is
read as an undirected graph and every edge becomes two opposite arcs.";

const KNAPSACK_FORMAT: &str = "\
FILE lists the instance ('-' reads stdin):

    capacity 5   first line: integer capacity
    2 3          one item per line: integer weight, non-negative value

Chosen items are reported by 1-based line order.";

const RANK_FORMAT: &str = "\
FILE is a comma-separated rank matrix ('-' reads stdin):

    1,2,3,4      header: object labels
    2,1,4,3      one row per expert, integer ranks 1..n

Rows that are not permutations of 1..n are reported as warnings.";

const SCORE_FORMAT: &str = "\
FILE is a comma-separated score table ('-' reads stdin):

    access,interface,speed     header: indicator names
    3,2,2                      one row per expert, scores 0..3
    weight,1,2,1               optional: indicator weights (default 1)

Instead of expert rows, a single row 'mean,2.1,2.4,...' may give published
per-indicator means.";

#[derive(Debug, Parser)]
#[command(
    name = "opskit",
    version,
    about = "Operations-research solvers and expert-evaluation statistics"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MstAlgorithm {
    Prim,
    Kruskal,
    Brute,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum spanning tree of an undirected graph.
    #[command(after_long_help = GRAPH_FORMAT)]
    Mst {
        /// Input file, or '-' for stdin.
        file: PathBuf,
        /// Start vertex for Prim's algorithm.
        #[arg(long, default_value_t = 1)]
        start: usize,
        /// Prim's labels, Kruskal's union-find, or exhaustive enumeration (n <= 10).
        #[arg(long, value_enum, default_value_t = MstAlgorithm::Prim)]
        algo: MstAlgorithm,
    },
    /// Shortest route between two vertices (Dijkstra).
    #[command(after_long_help = GRAPH_FORMAT)]
    ShortestPath {
        /// Input file, or '-' for stdin.
        file: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
    },
    /// Maximum flow and a minimum cut certificate (Edmonds-Karp).
    #[command(after_long_help = NETWORK_FORMAT)]
    MaxFlow {
        /// Input file, or '-' for stdin.
        file: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        sink: usize,
        /// Read FILE as an undirected graph.
        #[arg(long)]
        undirected: bool,
    },
    /// Exact 0/1 knapsack by dynamic programming.
    #[command(after_long_help = KNAPSACK_FORMAT)]
    Knapsack {
        /// Input file, or '-' for stdin.
        file: PathBuf,
    },
    /// Kendall's coefficient of concordance with its chi-square test.
    #[command(after_long_help = RANK_FORMAT)]
    Concordance {
        /// Input file, or '-' for stdin.
        file: PathBuf,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        /// Correct W for tied ranks within expert rows.
        #[arg(long)]
        tie_correction: bool,
    },
    /// Weighted mean of per-indicator scores on the 0..3 scale.
    #[command(after_long_help = SCORE_FORMAT)]
    Aggregate {
        /// Input file, or '-' for stdin.
        file: PathBuf,
    },
    /// Angular-transform comparison of two proportions.
    Fisher {
        #[arg(long)]
        p1: f64,
        #[arg(long)]
        n1: u64,
        #[arg(long)]
        p2: f64,
        #[arg(long)]
        n2: u64,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
    },
    /// Upper critical value of the chi-square distribution.
    #[command(name = "chi2-critical")]
    Chi2Critical {
        #[arg(long)]
        df: u32,
        #[arg(long)]
        alpha: f64,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Format(FormatError),
    Solver(SolverError),
    Stats(StatsError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Format(_) => 2,
            CliError::Solver(_) | CliError::Stats(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Format(e) => format!("invalid input: {e}"),
            CliError::Solver(e) => format!("{}: {e}", variant_name(e)),
            CliError::Stats(e) => format!("{}: {e}", variant_name(e)),
        }
    }
}

/// Leading identifier of the `Debug` form, i.e. the enum variant.
fn variant_name(e: &impl std::fmt::Debug) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric() && c != '_')
        .next()
        .unwrap_or_default()
        .to_owned()
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        CliError::Solver(e)
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        CliError::Stats(e)
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn vertex(id: usize) -> Result<VertexId, CliError> {
    VertexId::new(id).ok_or_else(|| CliError::Input("vertex ids start at 1".to_owned()))
}

fn execute(command: &Command) -> Result<ResultReport, CliError> {
    let report = match command {
        Command::Mst { file, start, algo } => {
            let text = read_input(file)?;
            let g = parse_graph_file(&text)?;
            let result = match algo {
                MstAlgorithm::Prim => {
                    TaskResult::mst("prim", Some(*start), &prim_mst(&g, vertex(*start)?)?)
                }
                MstAlgorithm::Kruskal => TaskResult::mst("kruskal", None, &kruskal_mst(&g)?),
                MstAlgorithm::Brute => {
                    TaskResult::mst("brute", None, &enumerate_spanning_trees_min(&g)?)
                }
            };
            ResultReport::new(text.as_bytes(), result)
        }
        Command::ShortestPath {
            file,
            source,
            target,
        } => {
            let text = read_input(file)?;
            let g = parse_graph_file(&text)?;
            let p = shortest_path(&g, vertex(*source)?, vertex(*target)?)?;
            ResultReport::new(
                text.as_bytes(),
                TaskResult::shortest_path(*source, *target, &p),
            )
        }
        Command::MaxFlow {
            file,
            source,
            sink,
            undirected,
        } => {
            let text = read_input(file)?;
            let net = if *undirected {
                FlowNetwork::from_undirected(&parse_graph_file(&text)?)
            } else {
                parse_network_file(&text)?
            };
            let f = max_flow(&net, vertex(*source)?, vertex(*sink)?)?;
            let cut = net.cut_capacity(&f.source_side);
            ResultReport::new(
                text.as_bytes(),
                TaskResult::max_flow(*source, *sink, &f, cut),
            )
        }
        Command::Knapsack { file } => {
            let text = read_input(file)?;
            let k = parse_knapsack_file(&text)?;
            let r = knapsack_01(&k.items, k.capacity)?;
            let used = r.chosen.iter().map(|&i| k.items[i].weight).sum();
            ResultReport::new(text.as_bytes(), TaskResult::knapsack(k.capacity, &r, used))
        }
        Command::Concordance {
            file,
            alpha,
            tie_correction,
        } => {
            let text = read_input(file)?;
            let ranks = parse_rank_csv(&text)?;
            let correction = if *tie_correction {
                TieCorrection::Standard
            } else {
                TieCorrection::None
            };
            let r = kendall_w_with(&ranks, *alpha, correction)?;
            ResultReport::new(text.as_bytes(), TaskResult::concordance(&r))
        }
        Command::Aggregate { file } => {
            let text = read_input(file)?;
            let scores = parse_score_csv(&text)?;
            let r = aggregate_scores(&scores)?;
            ResultReport::new(text.as_bytes(), TaskResult::aggregate(&r))
        }
        Command::Fisher {
            p1,
            n1,
            p2,
            n2,
            alpha,
        } => {
            let r = fisher_angular_test(*p1, *n1, *p2, *n2, *alpha)?;
            let input = format!("fisher {p1} {n1} {p2} {n2} {alpha}");
            ResultReport::new(input.as_bytes(), TaskResult::fisher(&r))
        }
        Command::Chi2Critical { df, alpha } => {
            let critical = chi_square_critical(*df, *alpha)?;
            let input = format!("chi2-critical {df} {alpha}");
            ResultReport::new(
                input.as_bytes(),
                TaskResult::Chi2Critical {
                    df: *df,
                    alpha: *alpha,
                    critical: critical.into(),
                },
            )
        }
    };
    Ok(report)
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let rendered = match cli.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => report.to_json() + "\n",
            };
            match out.write_all(rendered.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: writing output: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
