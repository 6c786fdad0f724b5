//! Command-line front end: file formats, configuration and subcommands.

pub mod config;
pub mod format;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use dpaths_gadget::build_gadget_graph;
use dpaths_graph::{random_instance, EdgeId, Instance, RandomSpec};
use dpaths_hardness::{mis_via_solver, reduce_mis, HardnessError};
use dpaths_oracle::{
    enumerate_solutions, max_independent_sets, DEFAULT_MIS_CAP, DEFAULT_VERTEX_CAP,
};
use dpaths_solver::{
    path_system_length, prepare, solve_prepared, Engine, SolutionIndex, SolveError, SolveOptions,
};
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use config::Config;
use format::{
    ComponentPoly, ConfigEcho, InstanceFile, LengthField, MisResult, ResultFile, RunInfo,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_INFEASIBLE: u8 = 4;
pub const EXIT_INTERNAL: u8 = 5;
pub const EXIT_CAPACITY: u8 = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Hardness(#[from] HardnessError),
    #[error("oracle: {0}")]
    Oracle(String),
}

fn solve_exit_code(err: &SolveError) -> u8 {
    match err {
        SolveError::Validation(_)
        | SolveError::NonPlanar
        | SolveError::Embedding(_)
        | SolveError::IndexOutOfRange { .. } => EXIT_VALIDATION,
        SolveError::Infeasible => EXIT_INFEASIBLE,
        SolveError::CapacityExceeded { .. } => EXIT_CAPACITY,
        _ => EXIT_INTERNAL,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::Solve(e) => solve_exit_code(e),
            CliError::Hardness(HardnessError::Solve(e)) => solve_exit_code(e),
            CliError::Hardness(HardnessError::InternalInconsistency(_)) => EXIT_INTERNAL,
            CliError::Hardness(_) => EXIT_VALIDATION,
            CliError::Oracle(_) => EXIT_CAPACITY,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dpaths",
    version,
    about = "Counts shortest disjoint A,B-path systems in planar subcubic graphs"
)]
pub struct Cli {
    /// TOML file whose keys supply defaults for any flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SolverArgs {
    #[arg(long, env = "DPATHS_THREADS")]
    pub threads: Option<usize>,
    /// auto, exact or modular.
    #[arg(long)]
    pub engine: Option<String>,
    /// Refuse instances whose estimated running time exceeds this many nanoseconds.
    #[arg(long)]
    pub max_work: Option<f64>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal length and number of optimal solutions.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Include the coefficients of every component polynomial.
        #[arg(long)]
        dump_poly: bool,
    },
    /// The optimal solution at a 1-based index in canonical order.
    Witness {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        index: Option<String>,
    },
    /// A uniformly random optimal solution.
    Sample {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Size and number of maximum independent sets of a cubic planar graph.
    Mis {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Also write the reduced disjoint-paths instance to this path.
        #[arg(long)]
        emit_reduced: Option<PathBuf>,
    },
    /// A seeded random instance.
    GenRandom {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_length: Option<u64>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        removed_edges: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force reference answers for small inputs.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Inspection of intermediate constructions.
    Gadget {
        #[command(subcommand)]
        command: GadgetCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    Solve {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    Mis {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GadgetCommand {
    /// The matching graph of every component as JSON.
    Dump { file: PathBuf },
}

/// Text to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub fn parse_engine(name: &str) -> Result<Engine, CliError> {
    match name {
        "auto" => Ok(Engine::Auto),
        "exact" => Ok(Engine::Exact),
        "modular" => Ok(Engine::Modular),
        other => Err(CliError::Usage(format!(
            "engine {other:?} is not one of auto, exact, modular"
        ))),
    }
}

fn engine_name(engine: Engine) -> &'static str {
    match engine {
        Engine::Auto => "auto",
        Engine::Exact => "exact",
        Engine::Modular => "modular",
    }
}

struct Resolved {
    options: SolveOptions,
    output: Option<PathBuf>,
}

fn resolve(args: &SolverArgs, config: &Config) -> Result<Resolved, CliError> {
    let mut options = SolveOptions::default();
    options.threads = args.threads.or(config.threads).unwrap_or(1);
    if options.threads == 0 {
        return Err(CliError::Usage("threads must be at least 1".into()));
    }
    if let Some(name) = args.engine.as_ref().or(config.engine.as_ref()) {
        options.engine = parse_engine(name)?;
    }
    if let Some(limit) = args.max_work.or(config.max_work) {
        options.max_work = limit;
    }
    let output = args
        .output
        .clone()
        .or_else(|| config.output.as_ref().map(PathBuf::from));
    Ok(Resolved { options, output })
}

fn read_instance_file(path: &Path) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    InstanceFile::parse(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn deliver(text: String, output: Option<&Path>) -> Result<String, CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, format!("{text}\n"))
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn edge_triples(instance: &Instance, edges: &[EdgeId]) -> Vec<[usize; 3]> {
    edges
        .iter()
        .map(|&e| {
            let edge = instance.graph.edge(e);
            [edge.u, edge.v, edge.length as usize]
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match &cli.command {
        Command::Solve {
            file,
            solver,
            dump_poly,
        } => cmd_solve(
            file,
            &resolve(solver, &config)?,
            *dump_poly || config.dump_poly.unwrap_or(false),
        ),
        Command::Witness {
            file,
            solver,
            index,
        } => {
            let index = index
                .clone()
                .or(config.index.clone())
                .unwrap_or_else(|| "1".into());
            let index: BigUint = index.parse().map_err(|_| {
                CliError::Usage(format!("index {index:?} is not a non-negative integer"))
            })?;
            cmd_witness(file, &resolve(solver, &config)?, Pick::Index(index))
        }
        Command::Sample { file, solver, seed } => {
            let seed = seed.or(config.seed).unwrap_or(0);
            cmd_witness(file, &resolve(solver, &config)?, Pick::Seed(seed))
        }
        Command::Mis {
            file,
            solver,
            emit_reduced,
        } => {
            let emit = emit_reduced
                .clone()
                .or_else(|| config.emit_reduced.as_ref().map(PathBuf::from));
            cmd_mis(file, &resolve(solver, &config)?, emit.as_deref())
        }
        Command::GenRandom {
            n,
            max_length,
            a,
            b,
            seed,
            removed_edges,
            output,
        } => {
            let spec = RandomSpec {
                n: n.or(config.n).unwrap_or(20),
                max_length: max_length.or(config.max_length).unwrap_or(4),
                a_count: a.or(config.a).unwrap_or(2),
                b_count: b.or(config.b).unwrap_or(2),
                removed_edges: removed_edges.or(config.removed_edges).unwrap_or(0),
                seed: seed.or(config.seed).unwrap_or(0),
            };
            let output = output
                .clone()
                .or_else(|| config.output.as_ref().map(PathBuf::from));
            cmd_gen_random(&spec, output.as_deref())
        }
        Command::Oracle {
            command: OracleCommand::Solve { file, cap },
        } => cmd_oracle_solve(file, cap.or(config.cap).unwrap_or(DEFAULT_VERTEX_CAP)),
        Command::Oracle {
            command: OracleCommand::Mis { file, cap },
        } => cmd_oracle_mis(file, cap.or(config.cap).unwrap_or(DEFAULT_MIS_CAP)),
        Command::Gadget {
            command: GadgetCommand::Dump { file },
        } => cmd_gadget_dump(file),
    }
}

fn cmd_solve(file: &Path, resolved: &Resolved, dump_poly: bool) -> Result<Outcome, CliError> {
    let parsed = read_instance_file(file)?;
    let instance = parsed.instance()?;
    let embedding = parsed.embedding()?;
    let start = Instant::now();
    let prepared = prepare(&instance, embedding.as_ref())?;
    let report = solve_prepared(&prepared, &resolved.options)?;
    let poly = dump_poly.then(|| {
        report
            .components
            .iter()
            .map(|c| ComponentPoly {
                lambda: c.lambda,
                terminals: c.terminal_count,
                length_offset: c.length_offset,
                coefficients: c.poly.coeffs.iter().map(ToString::to_string).collect(),
            })
            .collect()
    });
    let result = ResultFile {
        instance: parsed.name.clone(),
        command: "solve".into(),
        length: LengthField::from_option(report.summary.length),
        count: report.summary.count.to_string(),
        index: None,
        seed: None,
        witness: None,
        poly,
        config: echo(&resolved.options),
        run: RunInfo {
            threads: resolved.options.threads,
            elapsed_ms: start.elapsed().as_millis(),
        },
    };
    let code = if report.summary.length.is_some() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    Ok(Outcome {
        stdout: deliver(result.to_json(), resolved.output.as_deref())?,
        code,
    })
}

fn echo(options: &SolveOptions) -> ConfigEcho {
    ConfigEcho {
        engine: engine_name(options.engine).into(),
        max_work: options.max_work,
    }
}

enum Pick {
    Index(BigUint),
    Seed(u64),
}

fn cmd_witness(file: &Path, resolved: &Resolved, pick: Pick) -> Result<Outcome, CliError> {
    let parsed = read_instance_file(file)?;
    let instance = parsed.instance()?;
    let embedding = parsed.embedding()?;
    let start = Instant::now();
    let prepared = prepare(&instance, embedding.as_ref())?;
    let index = SolutionIndex::new(&prepared, &resolved.options)?;
    if index.total() == &BigUint::default() {
        return Err(SolveError::Infeasible.into());
    }
    let (edges, command, shown_index, seed) = match &pick {
        Pick::Index(i) => (index.witness(i)?, "witness", Some(i.to_string()), None),
        Pick::Seed(s) => (index.sample(*s)?, "sample", None, Some(*s)),
    };
    let length = path_system_length(&instance, &edges)
        .ok_or_else(|| SolveError::InternalInconsistency("witness is not a path system".into()))?;
    let result = ResultFile {
        instance: parsed.name.clone(),
        command: command.into(),
        length: LengthField::Finite(length),
        count: index.total().to_string(),
        index: shown_index,
        seed,
        witness: Some(edge_triples(&instance, &edges)),
        poly: None,
        config: echo(&resolved.options),
        run: RunInfo {
            threads: resolved.options.threads,
            elapsed_ms: start.elapsed().as_millis(),
        },
    };
    Ok(Outcome::ok(deliver(
        result.to_json(),
        resolved.output.as_deref(),
    )?))
}

fn cmd_mis(file: &Path, resolved: &Resolved, emit: Option<&Path>) -> Result<Outcome, CliError> {
    let parsed = read_instance_file(file)?;
    let graph = parsed.graph()?;
    if let Some(path) = emit {
        let embedding = dpaths_graph::planar_embed(&graph).map_err(SolveError::from)?;
        let reduction = reduce_mis(&graph, &embedding)?;
        let name = parsed.name.as_ref().map(|n| format!("{n}-reduced"));
        let text = InstanceFile::from_instance(&reduction.instance, name, None).emit();
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let (alpha, count) = mis_via_solver(&graph, &resolved.options)?;
    let result = MisResult {
        instance: parsed.name.clone(),
        alpha,
        count: count.to_string(),
        method: "solver".into(),
    };
    Ok(Outcome::ok(deliver(
        to_json(&result),
        resolved.output.as_deref(),
    )?))
}

fn cmd_gen_random(spec: &RandomSpec, output: Option<&Path>) -> Result<Outcome, CliError> {
    let instance = random_instance(spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let name = format!("random-n{}-seed{}", spec.n, spec.seed);
    let text = InstanceFile::from_instance(&instance, Some(name), Some(spec.seed)).emit();
    Ok(Outcome::ok(deliver(text.trim_end().to_string(), output)?))
}

#[derive(Serialize)]
struct OracleSolveResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    instance: Option<String>,
    length: LengthField,
    count: String,
    solutions: Vec<Vec<[usize; 3]>>,
}

fn cmd_oracle_solve(file: &Path, cap: usize) -> Result<Outcome, CliError> {
    let parsed = read_instance_file(file)?;
    let instance = parsed.instance()?;
    let report = dpaths_graph::validate(&instance);
    if !report.is_valid() {
        return Err(SolveError::Validation(report).into());
    }
    let set = enumerate_solutions(&instance, cap).map_err(|e| CliError::Oracle(e.to_string()))?;
    let result = OracleSolveResult {
        instance: parsed.name.clone(),
        length: LengthField::from_option(set.min_length),
        count: set.count().to_string(),
        solutions: set
            .solutions
            .iter()
            .map(|s| edge_triples(&instance, s))
            .collect(),
    };
    let code = if set.min_length.is_some() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    Ok(Outcome {
        stdout: to_json(&result),
        code,
    })
}

fn cmd_oracle_mis(file: &Path, cap: usize) -> Result<Outcome, CliError> {
    let parsed = read_instance_file(file)?;
    let graph = parsed.graph()?;
    let (alpha, count) =
        max_independent_sets(&graph, cap).map_err(|e| CliError::Oracle(e.to_string()))?;
    let result = MisResult {
        instance: parsed.name.clone(),
        alpha,
        count: count.to_string(),
        method: "oracle".into(),
    };
    Ok(Outcome::ok(to_json(&result)))
}

#[derive(Serialize)]
struct GadgetDump {
    vertices: usize,
    edges: Vec<[usize; 3]>,
    terminals: Vec<usize>,
    centers: Vec<usize>,
}

fn cmd_gadget_dump(file: &Path) -> Result<Outcome, CliError> {
    let parsed = read_instance_file(file)?;
    let instance = parsed.instance()?;
    let prepared = prepare(&instance, parsed.embedding()?.as_ref())?;
    let parts = prepared.parts.map_err(|reason| {
        CliError::Solve(SolveError::InternalInconsistency(format!(
            "no gadget graph: {reason}"
        )))
    })?;
    let dumps: Vec<GadgetDump> = parts
        .iter()
        .map(|part| {
            let gadget = build_gadget_graph(&part.normalized.instance, &part.normalized.embedding)
                .map_err(|e| SolveError::InternalInconsistency(e.to_string()))?;
            Ok(GadgetDump {
                vertices: gadget.graph.vertex_count(),
                edges: gadget
                    .graph
                    .edges()
                    .iter()
                    .map(|e| [e.u, e.v, e.length as usize])
                    .collect(),
                terminals: gadget.terminals.clone(),
                centers: gadget.centers.clone(),
            })
        })
        .collect::<Result<_, SolveError>>()?;
    Ok(Outcome::ok(to_json(&dumps)))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("results always serialize")
}
