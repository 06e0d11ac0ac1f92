//! `bgd`: solve, kernelize, verify and generate block graph deletion
//! instances. Reports are single JSON objects on standard output; exit
//! code 0 means the run completed (whatever the answer), 2 is an input
//! error, 3 an internal assertion failure.

mod format;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use bgd_core::kernel::{kernelize, Instance, KernelOptions, KernelResult};
use bgd_core::oracle::{gen_gnp, gen_planted, min_deletion_bruteforce, verify, PlantedSpec};
use bgd_core::solver::solve_with_stats;
use bgd_core::{Graph, VertexId, VertexSet};

#[derive(Parser)]
#[command(name = "bgd", about = "exact block graph deletion toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArg {
    /// Instance file (`p bgd <n> <m>` header, `e <u> <v>` edges).
    instance: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the instance exactly and emit a witness when one exists.
    Solve {
        #[command(flatten)]
        instance: InstanceArg,
        /// Deletion budget.
        #[arg(long)]
        k: u32,
    },
    /// Reduce the instance; emits the answer or kernel statistics.
    Kernelize {
        #[command(flatten)]
        instance: InstanceArg,
        /// Deletion budget.
        #[arg(long)]
        k: u32,
        /// Dump the reduction trace as JSON to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Probe vertices concurrently with this many threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a proposed deletion set against the instance.
    Verify {
        #[command(flatten)]
        instance: InstanceArg,
        /// Deletion budget.
        #[arg(long)]
        k: u32,
        /// Vertices of the proposed solution.
        #[arg(value_name = "VERTEX")]
        solution: Vec<VertexId>,
    },
    /// Brute-force minimum deletion size up to a bound.
    Oracle {
        #[command(flatten)]
        instance: InstanceArg,
        /// Largest deletion size to try.
        #[arg(long)]
        kmax: usize,
    },
    /// Generate an instance: G(n, p) with --p, planted with --k.
    Gen {
        /// Vertex count.
        #[arg(long)]
        n: u32,
        /// Edge probability; generates an Erdős–Rényi sample.
        #[arg(long)]
        p: Option<f64>,
        /// Planted noise size; generates a block graph plus k noise vertices.
        #[arg(long)]
        k: Option<u32>,
        /// Random seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Structural statistics of an instance.
    Stats {
        #[command(flatten)]
        instance: InstanceArg,
    },
}

#[derive(Serialize)]
struct KernelStats {
    n: usize,
    m: usize,
    k: u32,
    bound: u128,
    rules: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    warning: Option<String>,
}

#[derive(Serialize)]
struct Counters {
    branch_nodes: u64,
    probes: u64,
    rule_events: u64,
}

#[derive(Serialize)]
struct RunReport {
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<Vec<VertexId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel: Option<KernelStats>,
    counters: Counters,
    wall_ms: f64,
}

#[derive(Debug)]
struct InternalFailure(bgd_core::Error);

impl std::fmt::Display for InternalFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "internal assertion failure: {}", self.0)
    }
}

impl std::error::Error for InternalFailure {}

fn main() {
    let cli = Cli::parse();
    let code = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<InternalFailure>().is_some() {
                3
            } else {
                2
            }
        }
        Err(_) => {
            eprintln!("error: internal assertion failure");
            3
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve { instance, k } => {
            let g = load(&instance)?;
            let start = Instant::now();
            let (sol, stats) = solve_with_stats(&g, k as usize).map_err(internal)?;
            let report = RunReport {
                status: if sol.is_some() { "yes" } else { "no" }.into(),
                solution: sol.map(|s| s.vertices().iter().copied().collect()),
                kernel: None,
                counters: Counters {
                    branch_nodes: stats.branch_nodes,
                    probes: 0,
                    rule_events: 0,
                },
                wall_ms: start.elapsed().as_secs_f64() * 1e3,
            };
            emit(&report)
        }
        Command::Kernelize { instance, k, trace, jobs } => {
            let g = load(&instance)?;
            let bound = bgd_core::kernel::size_bound(k as u64);
            let warning = (bound > g.n() as u128).then(|| {
                format!("size bound {bound} exceeds |V| = {}; the kernel is the input", g.n())
            });
            let start = Instant::now();
            let opts = KernelOptions { jobs, ..Default::default() };
            let result = kernelize(Instance::new(g, k), &opts).map_err(internal)?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let (status, inst) = match &result {
                KernelResult::Answer(true) => ("yes", None),
                KernelResult::Answer(false) => ("no", None),
                KernelResult::Reduced(inst) => ("reduced", Some(inst.as_ref())),
            };
            if let (Some(path), Some(inst)) = (&trace, inst) {
                std::fs::write(path, serde_json::to_string_pretty(inst.trace())?)
                    .with_context(|| format!("writing trace to {}", path.display()))?;
            }
            let report = RunReport {
                status: status.into(),
                solution: None,
                kernel: inst.map(|i| KernelStats {
                    n: i.graph().n(),
                    m: i.graph().m(),
                    k: i.k(),
                    bound: bgd_core::kernel::size_bound(i.k() as u64),
                    rules: i.rule_histogram(),
                    warning: warning.clone(),
                }),
                counters: Counters {
                    branch_nodes: 0,
                    probes: inst.map_or(0, |i| i.probes()),
                    rule_events: inst.map_or(0, |i| i.trace().len() as u64),
                },
                wall_ms,
            };
            emit(&report)
        }
        Command::Verify { instance, k, solution } => {
            let g = load(&instance)?;
            let start = Instant::now();
            let set: VertexSet = solution.iter().copied().collect();
            let ok = verify(&g, &set, k as usize);
            let report = RunReport {
                status: if ok { "yes" } else { "no" }.into(),
                solution: Some(solution),
                kernel: None,
                counters: Counters { branch_nodes: 0, probes: 0, rule_events: 0 },
                wall_ms: start.elapsed().as_secs_f64() * 1e3,
            };
            emit(&report)
        }
        Command::Oracle { instance, kmax } => {
            let g = load(&instance)?;
            let start = Instant::now();
            let found = min_deletion_bruteforce(&g, kmax);
            let report = RunReport {
                status: if found.is_some() { "yes" } else { "no" }.into(),
                solution: found.map(|(_, s)| s.vertices().iter().copied().collect()),
                kernel: None,
                counters: Counters { branch_nodes: 0, probes: 0, rule_events: 0 },
                wall_ms: start.elapsed().as_secs_f64() * 1e3,
            };
            emit(&report)
        }
        Command::Gen { n, p, k, seed } => {
            let g = match (p, k) {
                (Some(p), None) => gen_gnp(n, p, seed),
                (None, Some(k)) => gen_planted(PlantedSpec { n, k, seed }),
                _ => anyhow::bail!("pass exactly one of --p (random) or --k (planted)"),
            };
            print!("{}", format::emit_instance(&g)?);
            Ok(0)
        }
        Command::Stats { instance } => {
            let g = load(&instance)?;
            let dec = g.block_decomposition();
            #[derive(Serialize)]
            struct Stats {
                n: usize,
                m: usize,
                m_star: usize,
                blocks: usize,
                cut_vertices: usize,
                components: usize,
                is_block_graph: bool,
            }
            let stats = Stats {
                n: g.n(),
                m: g.m(),
                m_star: g.m_star(),
                blocks: dec.blocks().len(),
                cut_vertices: dec.cut_vertices().len(),
                components: g.components().len(),
                is_block_graph: bgd_core::obstruction::is_block_graph(&g),
            };
            println!("{}", serde_json::to_string_pretty(&stats)?);
            Ok(0)
        }
    }
}

fn load(arg: &InstanceArg) -> Result<Graph> {
    let text = std::fs::read_to_string(&arg.instance)
        .with_context(|| format!("reading {}", arg.instance.display()))?;
    format::parse_instance(&text)
}

fn emit(report: &RunReport) -> Result<i32> {
    println!("{}", serde_json::to_string_pretty(report)?);
    Ok(0)
}

fn internal(err: bgd_core::Error) -> anyhow::Error {
    anyhow::Error::new(InternalFailure(err))
}
