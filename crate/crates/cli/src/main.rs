use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use tokslide::cw::{parse_expression, solve_vcd_cw};
use tokslide::format::{
    format_set, parse_graph_prefix, parse_instance, parse_moves, parse_x3c, write_instance, write_moves,
};
use tokslide::fvs::{enumerate_compact_representations, solve_with_reps, CompactRepresentation};
use tokslide::oracle::{discover_min_moves_capped, DEFAULT_STATE_CAP};
use tokslide::reductions::{
    diameterize_fvs, diameterize_vc, first_vertices, search_to_discovery, vcd_to_fvsd, x3c_to_vcd, x3c_witness_to_moves,
};
use tokslide::split::{
    enumerate_maximal_independent_sets_split, enumerate_minimal_fvs_split, enumerate_minimal_vertex_covers_split,
    solve_split,
};
use tokslide::{validate_sequence, Discovery, DiscoveryInstance, Graph, Problem, VertexSet};

const STATE_CAP_VAR: &str = "TOKSLIDE_STATE_CAP";

/// Solution discovery under token sliding.
///
/// Exit status: 0 for YES (or a valid, feasible sequence), 1 for NO, 2 for
/// usage and input errors.
#[derive(Parser)]
#[command(name = "tokslide", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print `YES <steps>` or `NO`.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Shorthand for `--method auto`.
        #[arg(long, conflicts_with = "method")]
        auto: bool,
        /// Expression file, required by `--method cw`.
        #[arg(long)]
        expr: Option<PathBuf>,
        /// Write the witness move sequence here.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Print the compact representations before the answer (fvs-fpt only).
        #[arg(long)]
        dump_reps: bool,
    },
    /// Replay a move file against an instance.
    Verify { instance: PathBuf, moves: PathBuf },
    /// Build an instance from a reduction and print it.
    Generate {
        #[arg(long, value_enum)]
        reduction: Reduction,
        /// Input: an X3C file for `x3c`, an instance for `triangulate`, a graph or instance otherwise.
        input: PathBuf,
        /// Solution size for `diam-vc`, `diam-fvs` and `search`.
        #[arg(long)]
        k: Option<usize>,
        /// Problem for `search`.
        #[arg(long)]
        problem: Option<Problem>,
        /// For `x3c`: 1-based set numbers of an exact cover, turned into a move file.
        #[arg(long, value_delimiter = ',')]
        cover: Vec<usize>,
        /// Where to write the moves derived from `--cover`.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive search; the state cap comes from TOKSLIDE_STATE_CAP.
    Oracle {
        instance: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// List candidate solutions of a split graph, one set per line.
    Enumerate {
        #[arg(long, value_enum)]
        what: Candidates,
        /// A graph or instance file.
        input: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Cw,
    FvsFpt,
    Split,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    X3c,
    Triangulate,
    DiamVc,
    DiamFvs,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum Candidates {
    Covers,
    Mis,
    Mfvs,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_instance(path: &Path) -> Result<DiscoveryInstance> {
    parse_instance(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph_prefix(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn state_cap() -> Result<usize> {
    match std::env::var(STATE_CAP_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{STATE_CAP_VAR}={v} is not a number")),
        Err(_) => Ok(DEFAULT_STATE_CAP),
    }
}

fn representation_line(g: &Graph, rep: &CompactRepresentation) -> String {
    if rep.classes.is_empty() {
        return "{}".into();
    }
    rep.classes.iter().map(|c| format_set(g, c.iter().copied())).collect::<Vec<_>>().join(" ")
}

/// Prints the decision line and writes the witness; returns whether the answer is YES.
fn report(inst: &DiscoveryInstance, answer: Option<Discovery>, witness: Option<&Path>) -> Result<bool> {
    let Some(d) = answer else {
        println!("NO");
        return Ok(false);
    };
    println!("YES {}", d.steps);
    if let Some(path) = witness {
        fs::write(path, write_moves(&inst.graph, &d.witness))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(true)
}

fn solve(
    instance: &Path,
    method: Method,
    expr: Option<&Path>,
    witness: Option<&Path>,
    dump_reps: bool,
) -> Result<bool> {
    let inst = load_instance(instance)?;
    let method = match method {
        Method::Auto if inst.kind != Problem::DominatingSet && inst.graph.split_partition().is_some() => Method::Split,
        Method::Auto if inst.kind == Problem::FeedbackVertexSet => Method::FvsFpt,
        Method::Auto => Method::Oracle,
        m => m,
    };
    if dump_reps && method != Method::FvsFpt {
        bail!("--dump-reps needs the fvs-fpt method");
    }
    match method {
        Method::Oracle => report(&inst, discover_min_moves_capped(&inst, state_cap()?)?, witness),
        Method::FvsFpt => {
            let reps = enumerate_compact_representations(&inst.graph, inst.k());
            if dump_reps {
                for rep in &reps {
                    println!("{}", representation_line(&inst.graph, rep));
                }
            }
            report(&inst, solve_with_reps(&inst, &reps)?, witness)
        }
        Method::Split => report(&inst, solve_split(&inst)?, witness),
        Method::Cw => {
            let path = expr.context("--method cw needs --expr")?;
            let e = parse_expression(&read(path)?).with_context(|| format!("{}", path.display()))?;
            if witness.is_some() {
                bail!("the cw method decides without producing a witness");
            }
            match solve_vcd_cw(&e, &inst)? {
                Some(steps) => {
                    println!("YES {steps}");
                    Ok(true)
                }
                None => {
                    println!("NO");
                    Ok(false)
                }
            }
        }
        Method::Auto => unreachable!(),
    }
}

fn verify(instance: &Path, moves: &Path) -> Result<bool> {
    let inst = load_instance(instance)?;
    let seq = parse_moves(&read(moves)?, &inst.graph).with_context(|| format!("{}", moves.display()))?;
    let replay = validate_sequence(&inst, &seq)?;
    let status = if replay.feasible { "feasible" } else { "infeasible" };
    println!("VALID {} {status} {}", replay.steps, format_set(&inst.graph, replay.final_config.iter().copied()));
    Ok(replay.feasible)
}

#[allow(clippy::too_many_arguments)]
fn generate(
    reduction: Reduction,
    input: &Path,
    k: Option<usize>,
    problem: Option<Problem>,
    cover: &[usize],
    witness: Option<&Path>,
    output: Option<&Path>,
) -> Result<()> {
    let need_k = || k.context("this reduction needs --k");
    let inst = match reduction {
        Reduction::X3c => {
            let x = parse_x3c(&read(input)?).with_context(|| format!("{}", input.display()))?;
            let inst = x3c_to_vcd(&x);
            if !cover.is_empty() {
                let path = witness.context("--cover needs --witness")?;
                if cover.contains(&0) {
                    bail!("set numbers in --cover start at 1");
                }
                let zero_based: Vec<usize> = cover.iter().map(|i| i - 1).collect();
                let moves = x3c_witness_to_moves(&x, &zero_based)?;
                fs::write(path, write_moves(&inst.graph, &moves))?;
            }
            inst
        }
        Reduction::Triangulate => vcd_to_fvsd(&load_instance(input)?)?,
        Reduction::DiamVc => {
            let (g, k) = diameterize_vc(&load_graph(input)?, need_k()?);
            search_to_discovery(&g, Problem::VertexCover, k, &first_vertices(&g, k))?
        }
        Reduction::DiamFvs => {
            let (g, k) = diameterize_fvs(&load_graph(input)?, need_k()?);
            search_to_discovery(&g, Problem::FeedbackVertexSet, k, &first_vertices(&g, k))?
        }
        Reduction::Search => {
            let g = load_graph(input)?;
            let k = need_k()?;
            if k > g.n() {
                bail!("--k {k} exceeds the {} vertices", g.n());
            }
            search_to_discovery(&g, problem.context("search needs --problem")?, k, &first_vertices(&g, k))?
        }
    };
    let text = write_instance(&inst);
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn enumerate(what: Candidates, input: &Path) -> Result<()> {
    let g = load_graph(input)?;
    let sets: Vec<VertexSet> = match what {
        Candidates::Covers => enumerate_minimal_vertex_covers_split(&g)?,
        Candidates::Mis => enumerate_maximal_independent_sets_split(&g)?,
        Candidates::Mfvs => enumerate_minimal_fvs_split(&g)?,
    };
    let mut lines: Vec<String> = sets.iter().map(|s| format_set(&g, s.iter().copied())).collect();
    lines.sort();
    for line in lines {
        println!("{line}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { instance, method, auto, expr, witness, dump_reps } => {
            let method = if auto { Method::Auto } else { method };
            solve(&instance, method, expr.as_deref(), witness.as_deref(), dump_reps)
        }
        Command::Verify { instance, moves } => verify(&instance, &moves),
        Command::Generate { reduction, input, k, problem, cover, witness, output } => {
            generate(reduction, &input, k, problem, &cover, witness.as_deref(), output.as_deref()).map(|_| true)
        }
        Command::Oracle { instance, witness } => solve(&instance, Method::Oracle, None, witness.as_deref(), false),
        Command::Enumerate { what, input } => enumerate(what, &input).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
