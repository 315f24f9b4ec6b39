//! The `cdt` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bench::{sample_widths, BenchRow, BENCH_HEADER};
use crate::contraction::{component_orbit, contract};
use crate::error::{Error, Result};
use crate::gen::{self, LabelMode};
use crate::graph::EmbeddedGraph;
use crate::group::Group;
use crate::io::{load, GraphFile};
use crate::layering::{build_zsets, check_layer_invariants, layers_of};
use crate::oracle::{brute_force, has_violation, OracleLimits};
use crate::problem::{Instance, ProblemKind, Solution};
use crate::solver::{self, SolveRequest, SolveResult, DEFAULT_MAX_PAIRS};
use crate::treewidth::{exact_treewidth, heuristic_decompose, DecompositionJson, EXACT_TREEWIDTH_CAP};

#[derive(Parser, Debug)]
#[command(name = "cdt", version, about = "Planar contraction decomposition and layered solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Stacked,
    Grid,
    Nested,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Labelling {
    Uniform,
    Nonidentity,
}

#[derive(clap::Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertex count (stacked).
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Rows (grid).
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Columns (grid).
    #[arg(long, default_value_t = 3)]
    c: usize,
    /// Number of cycles (nested).
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Cycle length (nested).
    #[arg(long, default_value_t = 6)]
    len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep each edge with this probability, resampling until connected.
    #[arg(long)]
    keep_prob: Option<f64>,
    /// Attach labels over the cyclic group of this order.
    #[arg(long)]
    group: Option<usize>,
    #[arg(long, value_enum, default_value = "uniform")]
    label_mode: Labelling,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the onion-peeling layers and invariant report.
    Layers { graph: PathBuf },
    /// Print the residue-class sets Z_1..Z_p.
    Zsets {
        #[arg(long)]
        p: usize,
        graph: PathBuf,
    },
    /// Contract the components of G[X].
    Contract {
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        /// Also report component orbits for this problem.
        #[arg(long)]
        problem: Option<ProblemKind>,
        graph: PathBuf,
    },
    /// Min-fill tree decomposition (JSON or edge-list input).
    Treedecomp {
        #[arg(long)]
        exact: bool,
        graph: PathBuf,
    },
    /// Run the layered solver.
    Solve {
        #[arg(long)]
        problem: ProblemKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_PAIRS)]
        max_pairs: u64,
        graph: PathBuf,
    },
    /// Exhaustive optimum (JSON or edge-list input).
    Oracle {
        #[arg(long)]
        problem: ProblemKind,
        graph: PathBuf,
    },
    /// Emit a generated instance as graph JSON.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a deletion set.
    Verify {
        #[arg(long)]
        problem: ProblemKind,
        /// Solution JSON: a bare array or a solve result.
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        graph: PathBuf,
    },
    /// Solve a generated instance and print CSV rows.
    Bench {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "oct")]
        problem: ProblemKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_PAIRS)]
        max_pairs: u64,
        /// Additionally sample this many random exception sets per p in
        /// 2..=5 and report their width ratios.
        #[arg(long, default_value_t = 0)]
        width_samples: usize,
        #[arg(long, default_value_t = 8)]
        max_zprime: usize,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Results go to `out`, diagnostics to standard error.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn load_embedded(path: &Path) -> Result<(GraphFile, EmbeddedGraph)> {
    let file = load(path)?;
    let eg = file.embedded()?;
    Ok((file, eg))
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Layers { graph } => {
            let (_, eg) = load_embedded(&graph)?;
            let (fs, _, lay) = layers_of(&eg)?;
            let report = check_layer_invariants(&eg, &fs, &lay);
            emit(
                out,
                &json!({"m": lay.m(), "layers": lay.layers, "level_of": lay.level_of,
                        "faces": fs.len(), "outer_face": fs.boundary[fs.outer],
                        "invariants_ok": report.ok(), "report": report}),
            )?;
        }
        Command::Zsets { p, graph } => {
            if p == 0 {
                return Err(Error::InvalidRequest("p must be at least 1".into()));
            }
            let (_, eg) = load_embedded(&graph)?;
            let (_, _, lay) = layers_of(&eg)?;
            emit(out, &build_zsets(&lay, p))?;
        }
        Command::Contract { x, problem, graph } => {
            let file = load(&graph)?;
            let g = file.graph()?;
            if let Some(&v) = x.iter().find(|&&v| v >= g.n()) {
                return Err(Error::InvalidRequest(format!("vertex {v} out of range")));
            }
            let cm = contract(&g, &x);
            let provenance: Vec<Vec<(usize, usize)>> = cm
                .edge_provenance
                .iter()
                .map(|p| p.iter().map(|&e| g.edges()[e]).collect())
                .collect();
            let mut value = json!({
                "super_vertices": cm.super_vertices(),
                "rep": cm.rep,
                "members": cm.members,
                "is_contracted": cm.is_contracted,
                "quotient_edges": cm.quotient.edges(),
                "edge_provenance": provenance,
            });
            if let Some(kind) = problem {
                let inst = file.instance(kind)?;
                let orbits: Vec<_> = cm
                    .members
                    .iter()
                    .zip(&cm.is_contracted)
                    .filter(|(_, &c)| c)
                    .map(|(m, _)| component_orbit(&inst, m))
                    .collect();
                value["orbits"] = serde_json::to_value(orbits)?;
            }
            emit(out, &value)?;
        }
        Command::Treedecomp { exact, graph } => {
            let g = load(&graph)?.graph()?;
            let td = heuristic_decompose(&g);
            let mut value = serde_json::to_value(DecompositionJson::from(&td))?;
            if exact {
                value["exact_width"] = json!(exact_treewidth(&g, EXACT_TREEWIDTH_CAP)?);
            }
            emit(out, &value)?;
        }
        Command::Solve {
            problem,
            k,
            p,
            max_pairs,
            graph,
        } => {
            let (file, eg) = load_embedded(&graph)?;
            let inst = file.instance(problem)?;
            let result = run_solve(inst, eg, k, p, max_pairs)?;
            emit(out, &result_json(&result))?;
        }
        Command::Oracle { problem, graph } => {
            let file = load(&graph)?;
            let inst = file.instance(problem)?;
            let (opt, sol) = brute_force(&inst, OracleLimits::default())?;
            emit(out, &json!({"problem": problem, "opt": opt, "solution": sol}))?;
        }
        Command::Gen { family, output } => {
            let (file, _) = generate(&family)?;
            let text = serde_json::to_string(&file)?;
            match output {
                Some(path) => std::fs::write(path, text + "\n")?,
                None => writeln!(out, "{text}")?,
            }
        }
        Command::Verify {
            problem,
            solution,
            k,
            graph,
        } => {
            let file = load(&graph)?;
            let inst = file.instance(problem)?;
            let sol = read_solution(&solution, problem)?;
            check_solution_ids(&inst, &sol)?;
            let violation = has_violation(&inst, &sol);
            let within = k.is_none_or(|k| sol.len() <= k);
            let valid = !violation && within;
            emit(out, &json!({"valid": valid, "size": sol.len(), "violation": violation}))?;
            return Ok(if valid { 0 } else { 1 });
        }
        Command::Bench {
            family,
            problem,
            k,
            p,
            max_pairs,
            width_samples,
            max_zprime,
        } => {
            let (file, eg) = generate(&family)?;
            let name = instance_name(&family);
            let inst = file.instance(problem)?;
            let r = run_solve(inst, eg.clone(), k, p, max_pairs)?;
            writeln!(out, "{BENCH_HEADER}")?;
            let row = BenchRow {
                instance: name.clone(),
                n: eg.graph().n(),
                m: eg.graph().m(),
                p: r.stats.p,
                pairs: r.stats.pairs,
                max_width: r.stats.max_width,
                width_ratio: r.stats.max_width_ratio,
                opt: r.opt,
                time_ms: r.stats.time_ms,
            };
            writeln!(out, "{}", row.to_csv())?;
            if width_samples > 0 {
                for probe_p in 2..=5 {
                    let start = std::time::Instant::now();
                    let samples = sample_widths(&eg, probe_p, width_samples, max_zprime, family.seed)?;
                    let row = BenchRow {
                        instance: format!("{name}/widths"),
                        n: eg.graph().n(),
                        m: eg.graph().m(),
                        p: probe_p,
                        pairs: samples.len(),
                        max_width: samples.iter().map(|s| s.width).max().unwrap_or(0),
                        width_ratio: samples.iter().map(|s| s.ratio).fold(0.0, f64::max),
                        opt: None,
                        time_ms: start.elapsed().as_millis(),
                    };
                    writeln!(out, "{}", row.to_csv())?;
                }
            }
        }
    }
    Ok(0)
}

fn run_solve(
    inst: Instance,
    eg: EmbeddedGraph,
    k: usize,
    p: Option<usize>,
    max_pairs: u64,
) -> Result<SolveResult> {
    if inst.graph().is_connected() {
        let mut req = SolveRequest::new(inst, eg, k).with_max_pairs(max_pairs);
        if let Some(p) = p {
            req = req.with_p(p);
        }
        solver::solve(&req)
    } else {
        solver::solve_split(&inst, &eg, k, p, max_pairs)
    }
}

/// The documented result object; `opt` and `solution` are null when
/// infeasible.
pub fn result_json(r: &SolveResult) -> serde_json::Value {
    json!({
        "problem": r.problem,
        "k": r.k,
        "feasible": r.feasible,
        "opt": r.opt,
        "solution": r.solution,
        "stats": {
            "pairs": r.stats.pairs,
            "max_width": r.stats.max_width,
            "mean_width": r.stats.mean_width,
            "p": r.stats.p,
            "time_ms": r.stats.time_ms,
        }
    })
}

fn instance_name(f: &FamilyArgs) -> String {
    let mut name = match f.family {
        Family::Stacked => format!("stacked-n{}-s{}", f.n, f.seed),
        Family::Grid => format!("grid-{}x{}", f.r, f.c),
        Family::Nested => format!("nested-m{}-len{}", f.m, f.len),
    };
    if let Some(q) = f.keep_prob {
        name.push_str(&format!("-keep{q}-s{}", f.seed));
    }
    name
}

fn generate(f: &FamilyArgs) -> Result<(GraphFile, EmbeddedGraph)> {
    let mut eg = match f.family {
        Family::Stacked => gen::gen_stacked_triangulation(f.n, f.seed)?,
        Family::Grid => gen::gen_grid(f.r, f.c)?,
        Family::Nested => gen::gen_nested_cycles(f.m, f.len)?,
    };
    if let Some(q) = f.keep_prob {
        eg = gen::thin_edges(&eg, q, f.seed)?;
    }
    let labels = match f.group {
        Some(order) if order >= 1 => {
            let mode = match f.label_mode {
                Labelling::Uniform => LabelMode::Uniform,
                Labelling::Nonidentity => LabelMode::NonIdentity,
            };
            Some(gen::gen_labels(eg.graph(), &Group::cyclic(order), mode, f.seed)?)
        }
        Some(_) => return Err(Error::InvalidGroup("group order must be positive".into())),
        None => None,
    };
    Ok((GraphFile::from_embedded(&eg, labels.as_ref()), eg))
}

fn read_solution(path: &Path, kind: ProblemKind) -> Result<Solution> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let raw = match value.get("solution") {
        Some(inner) => inner.clone(),
        None => value,
    };
    let sol = if kind.deletes_vertices() {
        Solution::Vertices(serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?)
    } else {
        Solution::Edges(serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?)
    };
    Ok(sol.normalized())
}

fn check_solution_ids(inst: &Instance, sol: &Solution) -> Result<()> {
    let g = inst.graph();
    match sol {
        Solution::Vertices(vs) => {
            if let Some(v) = vs.iter().find(|&&v| v >= g.n()) {
                return Err(Error::InvalidRequest(format!("vertex {v} out of range")));
            }
        }
        Solution::Edges(es) => {
            if let Some((u, v)) = es.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
                return Err(Error::InvalidRequest(format!("({u}, {v}) is not an edge")));
            }
        }
    }
    Ok(())
}
