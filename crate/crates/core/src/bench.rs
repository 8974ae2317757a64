//! Benchmark harness: solve instances with and without decomposition and
//! record one CSV row per (instance, mode).

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::dimacs::load_dimacs;
use crate::error::{Error, Result};
use crate::graph::{Graph, Solution, Status, VertexSet, Weight};
use crate::md_solver::solve;
use crate::wclique::{max_weight_clique, SolverConfig};

pub const CSV_HEADER: [&str; 11] = [
    "instance",
    "n",
    "m",
    "mode",
    "clique_weight",
    "status",
    "md_time_s",
    "solve_time_s",
    "total_time_s",
    "prime_nodes",
    "tree_depth",
];

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(300);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Md,
    Plain,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Md => "MD",
            Mode::Plain => "Plain",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchStatus {
    Optimal,
    TimedOut,
    Error,
}

impl From<Status> for BenchStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Optimal => BenchStatus::Optimal,
            Status::TimedOut => BenchStatus::TimedOut,
        }
    }
}

impl fmt::Display for BenchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchStatus::Optimal => "Optimal",
            BenchStatus::TimedOut => "TimedOut",
            BenchStatus::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    pub clique_weight: Weight,
    pub status: BenchStatus,
    pub md_time: Duration,
    pub solve_time: Duration,
    /// MD mode only.
    pub prime_nodes: Option<usize>,
    pub tree_depth: Option<usize>,
    pub witness: VertexSet,
    pub error: Option<String>,
}

impl BenchRecord {
    pub fn total_time(&self) -> Duration {
        self.md_time + self.solve_time
    }

    fn error_row(instance: &str, mode: Mode, message: String) -> Self {
        BenchRecord {
            instance: instance.to_string(),
            n: 0,
            m: 0,
            mode,
            clique_weight: 0,
            status: BenchStatus::Error,
            md_time: Duration::ZERO,
            solve_time: Duration::ZERO,
            prime_nodes: None,
            tree_depth: None,
            witness: VertexSet::new(),
            error: Some(message),
        }
    }

    fn csv_fields(&self) -> Vec<String> {
        let secs = |d: Duration| format!("{:.6}", d.as_secs_f64());
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        if self.status == BenchStatus::Error {
            let mut row = vec![String::new(); CSV_HEADER.len()];
            row[0] = self.instance.clone();
            row[3] = self.mode.to_string();
            row[5] = self.status.to_string();
            return row;
        }
        vec![
            self.instance.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.mode.to_string(),
            self.clique_weight.to_string(),
            self.status.to_string(),
            secs(self.md_time),
            secs(self.solve_time),
            secs(self.total_time()),
            opt(self.prime_nodes),
            opt(self.tree_depth),
        ]
    }
}

fn checked(instance: &str, mode: Mode, g: &Graph, sol: &Solution) -> Result<()> {
    if sol.verify(g)? {
        Ok(())
    } else {
        Err(Error::WitnessMismatch { instance: instance.to_string(), mode: mode.to_string() })
    }
}

/// Solves one graph in one mode. A witness that fails re-verification is an error.
pub fn run_instance(instance: &str, g: &Graph, mode: Mode, cfg: &SolverConfig) -> Result<BenchRecord> {
    let mut record = BenchRecord {
        instance: instance.to_string(),
        n: g.n(),
        m: g.m(),
        mode,
        clique_weight: 0,
        status: BenchStatus::Optimal,
        md_time: Duration::ZERO,
        solve_time: Duration::ZERO,
        prime_nodes: None,
        tree_depth: None,
        witness: VertexSet::new(),
        error: None,
    };
    let solution = match mode {
        Mode::Md if g.n() == 0 => Solution::empty(),
        Mode::Md => {
            let report = solve(g, cfg)?;
            record.md_time = report.timings.md;
            record.solve_time = report.timings.solve;
            record.prime_nodes = Some(report.tree.kind_counts().prime);
            record.tree_depth = Some(report.tree.depth());
            report.solution
        }
        Mode::Plain => {
            let start = Instant::now();
            let s = max_weight_clique(g, cfg);
            record.solve_time = start.elapsed();
            s
        }
    };
    checked(instance, mode, g, &solution)?;
    record.clique_weight = solution.weight;
    record.status = solution.status.into();
    record.witness = solution.vertices;
    Ok(record)
}

/// A named benchmark input; `graph` holds the load error when it could not be read.
#[derive(Debug, Clone)]
pub struct BenchInput {
    pub name: String,
    pub graph: std::result::Result<Graph, String>,
}

impl BenchInput {
    pub fn from_graph(name: impl Into<String>, graph: Graph) -> Self {
        BenchInput { name: name.into(), graph: Ok(graph) }
    }

    pub fn load(path: &Path) -> Self {
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string());
        BenchInput { name, graph: load_dimacs(path).map_err(|e| e.to_string()) }
    }
}

/// Expands directories into their regular files (sorted by name), keeping the
/// given order otherwise.
pub fn collect_inputs(paths: &[PathBuf]) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(p)
                .map(|rd| rd.filter_map(|e| e.ok()).map(|e| e.path()).filter(|f| f.is_file()).collect())
                .unwrap_or_default();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    out
}

/// Runs every input in every mode. Rows follow input order with modes in the
/// given order. `jobs` > 1 spreads instances over worker threads; each run
/// still owns its worker for its whole duration.
pub fn run_bench(inputs: &[BenchInput], modes: &[Mode], cfg: &SolverConfig, jobs: usize) -> Result<Vec<BenchRecord>> {
    let run_one = |input: &BenchInput| -> Result<Vec<BenchRecord>> {
        modes
            .iter()
            .map(|&mode| match &input.graph {
                Ok(g) => run_instance(&input.name, g, mode, cfg),
                Err(msg) => Ok(BenchRecord::error_row(&input.name, mode, msg.clone())),
            })
            .collect()
    };
    let per_input: Vec<Result<Vec<BenchRecord>>> = if jobs <= 1 {
        inputs.iter().map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        pool.install(|| inputs.par_iter().map(run_one).collect())
    };
    let mut rows = Vec::new();
    for r in per_input {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(out: W, records: &[BenchRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::figure1;

    #[test]
    fn both_modes_on_figure1() {
        let inputs = [BenchInput::from_graph("figure1", figure1())];
        let rows = run_bench(&inputs, &[Mode::Md, Mode::Plain], &SolverConfig::default(), 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.clique_weight == 4 && r.status == BenchStatus::Optimal));
        assert_eq!(rows[0].mode, Mode::Md);
        assert_eq!(rows[0].prime_nodes, Some(1));
        assert_eq!(rows[1].md_time, Duration::ZERO);
    }

    #[test]
    fn csv_layout() {
        let inputs = [
            BenchInput::from_graph("k3", Graph::complete(3)),
            BenchInput { name: "broken".into(), graph: Err("line 1: nope".into()) },
        ];
        let rows = run_bench(&inputs, &[Mode::Md, Mode::Plain], &SolverConfig::default(), 2).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert!(lines[1].starts_with("k3,3,3,MD,3,Optimal,"));
        assert!(lines[1].ends_with(",0,1"));
        assert!(lines[2].starts_with("k3,3,3,Plain,3,Optimal,0.000000,"));
        assert!(lines[2].ends_with(",,"));
        assert_eq!(lines[3], "broken,,,MD,,ERROR,,,,,");
        assert_eq!(lines[4], "broken,,,Plain,,ERROR,,,,,");
        let fields: Vec<&str> = lines[1].split(',').collect();
        assert!(fields[6..9].iter().all(|f| f.split('.').nth(1).map(str::len) == Some(6)));
    }
}
