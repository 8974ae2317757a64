use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mdclique::bench::{collect_inputs, run_bench, write_csv, BenchInput, Mode, DEFAULT_TIME_LIMIT};
use mdclique::generators::{coprime_graph, gnp, random_cograph};
use mdclique::{decompose, load_dimacs, max_weight_clique, solve, verify_tree, write_dimacs, Graph, SolverConfig, Status, VertexOrdering};

/// Maximum-weight clique search with modular decomposition.
#[derive(Parser)]
#[command(name = "mdclique", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one DIMACS instance. Exit code 0 = optimal, 2 = timed out, 1 = error.
    Solve {
        path: PathBuf,
        /// Decompose first and branch only on prime quotients (default).
        #[arg(long, conflicts_with = "plain")]
        md: bool,
        /// Plain branch and bound on the whole graph.
        #[arg(long)]
        plain: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Print the modular decomposition tree with node counts and depth.
    Md {
        path: PathBuf,
        /// Check every tree invariant and list violations.
        #[arg(long)]
        verify: bool,
    },
    /// Write a generated graph in DIMACS format.
    Gen {
        kind: GenKind,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for gnp.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Benchmark files (directories are expanded) and emit CSV.
    Bench {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_delimiter = ',', default_values_t = [ModeArg::Md, ModeArg::Plain])]
        modes: Vec<ModeArg>,
        /// CSV destination; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads. Use 1 for timings that do not share the machine.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args)]
struct SolverArgs {
    /// Seconds per solve; 0 disables the limit.
    #[arg(long, default_value_t = DEFAULT_TIME_LIMIT.as_secs_f64())]
    time_limit: f64,
    #[arg(long, value_enum, default_value_t = OrderingArg::Coloring)]
    ordering: OrderingArg,
}

impl SolverArgs {
    fn config(&self) -> anyhow::Result<SolverConfig> {
        if !self.time_limit.is_finite() || self.time_limit < 0.0 {
            bail!("time limit must be a non-negative number of seconds");
        }
        let ordering = match self.ordering {
            OrderingArg::Coloring => VertexOrdering::GreedyColoring,
            OrderingArg::Degree => VertexOrdering::DegreeDesc,
            OrderingArg::Weight => VertexOrdering::WeightDesc,
            OrderingArg::Natural => VertexOrdering::Natural,
        };
        Ok(SolverConfig::default()
            .with_time_limit(Duration::from_secs_f64(self.time_limit))
            .with_ordering(ordering))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    Coloring,
    Degree,
    Weight,
    Natural,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Coprime,
    Cograph,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Md,
    Plain,
}

impl std::fmt::Display for ModeArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModeArg::Md => "md",
            ModeArg::Plain => "plain",
        })
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve { path, plain, solver, .. } => cmd_solve(&path, plain, &solver.config()?),
        Command::Md { path, verify } => cmd_md(&path, verify),
        Command::Gen { kind, n, seed, p, output } => cmd_gen(kind, n, seed, p, output.as_deref()),
        Command::Bench { paths, modes, output, jobs, solver } => cmd_bench(&paths, &modes, output.as_deref(), jobs, &solver.config()?),
    }
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    load_dimacs(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_solve(path: &Path, plain: bool, cfg: &SolverConfig) -> anyhow::Result<ExitCode> {
    let g = load(path)?;
    let (solution, md_time, solve_time) = if plain {
        let start = Instant::now();
        let s = max_weight_clique(&g, cfg);
        (s, Duration::ZERO, start.elapsed())
    } else {
        let r = solve(&g, cfg)?;
        (r.solution, r.timings.md, r.timings.solve)
    };
    if !solution.verify(&g)? {
        bail!("internal error: reported clique failed verification");
    }
    let ids: Vec<String> = solution.vertices.iter().map(|v| (v + 1).to_string()).collect();
    let mut out = io::stdout().lock();
    writeln!(out, "weight: {}", solution.weight)?;
    writeln!(out, "vertices: {}", ids.join(" "))?;
    if g.labels().is_some() {
        let labels: Vec<String> = solution.vertices.iter().map(|&v| g.label(v)).collect();
        writeln!(out, "labels: {}", labels.join(" "))?;
    }
    writeln!(out, "status: {}", solution.status)?;
    writeln!(out, "md_time_s: {:.6}", md_time.as_secs_f64())?;
    writeln!(out, "solve_time_s: {:.6}", solve_time.as_secs_f64())?;
    writeln!(out, "total_time_s: {:.6}", (md_time + solve_time).as_secs_f64())?;
    Ok(match solution.status {
        Status::Optimal => ExitCode::SUCCESS,
        Status::TimedOut => ExitCode::from(2),
    })
}

fn cmd_md(path: &Path, verify: bool) -> anyhow::Result<ExitCode> {
    let g = load(path)?;
    let tree = decompose(&g)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", tree.to_bracket(&g))?;
    writeln!(out, "{}", tree.kind_counts())?;
    writeln!(out, "depth: {}", tree.depth())?;
    if verify {
        let violations = verify_tree(&g, &tree);
        if violations.is_empty() {
            writeln!(out, "verify: ok")?;
        } else {
            for v in &violations {
                writeln!(out, "violation: {v}")?;
            }
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(kind: GenKind, n: usize, seed: u64, p: f64, output: Option<&Path>) -> anyhow::Result<ExitCode> {
    let g = match kind {
        GenKind::Coprime => coprime_graph(n)?,
        GenKind::Cograph => random_cograph(n, seed)?,
        GenKind::Gnp => gnp(n, p, seed)?,
    };
    let text = write_dimacs(&g);
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(paths: &[PathBuf], modes: &[ModeArg], output: Option<&Path>, jobs: usize, cfg: &SolverConfig) -> anyhow::Result<ExitCode> {
    let mut modes: Vec<Mode> = modes
        .iter()
        .map(|m| match m {
            ModeArg::Md => Mode::Md,
            ModeArg::Plain => Mode::Plain,
        })
        .collect();
    // MD rows always precede Plain rows for an instance.
    modes.sort_by_key(|&m| m == Mode::Plain);
    modes.dedup();
    let inputs: Vec<BenchInput> = collect_inputs(paths).iter().map(|p| BenchInput::load(p)).collect();
    let records = run_bench(&inputs, &modes, cfg, jobs.max(1))?;
    match output {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(BufWriter::new(file), &records)?;
        }
        None => write_csv(io::stdout().lock(), &records)?,
    }
    Ok(ExitCode::SUCCESS)
}
