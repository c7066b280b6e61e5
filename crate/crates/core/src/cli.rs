//! Command-line front end. `main.rs` parses arguments and calls [`run`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complex::{
    count_formula_two_one, count_formula_uniform, wedge_count, Cell, ColorVector, ComplexSpec,
    FVector, Separation,
};
use crate::error::Error;
use crate::graph::{NamedGraph, SimpleGraph};
use crate::planner::{plan, plan_bfs, verify_plan, MovePlan, PlanFile};
use crate::skeleton::build_one_skeleton;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_PLAN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EMPTY: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Parser)]
#[command(name = "stirling", version, about = "Grouped Stirling complexes of graphs")]
pub struct Cli {
    #[command(flatten)]
    pub complex: ComplexArgs,

    /// Output format. Reports default to json, cell listings and plans to plain text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    /// Named graph: P<n>, T<n>, C<n> or K<n>.
    #[arg(long, global = true, conflicts_with = "graph_file")]
    pub graph: Option<NamedGraph>,

    /// Edge-list file: `n m` header, then `u v` per edge.
    #[arg(long, global = true)]
    pub graph_file: Option<PathBuf>,

    /// Group sizes, e.g. `2,1,1,1`.
    #[arg(long, global = true)]
    pub colors: Option<ColorVector>,

    /// Drop the requirement that every vertex holds a robot.
    #[arg(long, global = true)]
    pub no_cover: bool,

    /// Keep every pair of robots apart, not only robots of one color.
    #[arg(long, global = true)]
    pub separate_all: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Constructive,
    Bfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Edges,
    Nodes,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F-vector by enumeration, checked against closed forms when they apply.
    Count,
    /// List cells in canonical order.
    Enumerate {
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Connected components of the 1-skeleton.
    Components,
    /// Size of the 1-skeleton, or an export of it.
    Skeleton {
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Plan robot moves between two 0-cells.
    Plan {
        #[arg(long)]
        from: Cell,
        #[arg(long)]
        to: Cell,
        #[arg(long, value_enum, default_value = "constructive")]
        mode: Mode,
    },
    /// Replay a plan file.
    Verify {
        file: PathBuf,
        /// Expected end cell; overrides the file's `# end:` line.
        #[arg(long)]
        end: Option<Cell>,
    },
}

/// Failure that ends a command with a specific exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::HypothesisNotMet(_) => EXIT_HYPOTHESIS,
            Error::EmptyComplex => EXIT_EMPTY,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // Reader went away, e.g. `| head`; nothing left to report.
            return Failure { code: EXIT_OK, message: String::new() };
        }
        Failure { code: EXIT_INTERNAL, message: format!("write failed: {e}") }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one command; returns the exit status. Errors go to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let spec = build_spec(&cli.complex)?;
    match &cli.command {
        Command::Count => cmd_count(&spec, cli.format.unwrap_or(Format::Json), out),
        Command::Enumerate { dim } => cmd_enumerate(&spec, *dim, cli.format.unwrap_or(Format::Tsv), out),
        Command::Components => cmd_components(&spec, cli.format.unwrap_or(Format::Json), out),
        Command::Skeleton { export } => cmd_skeleton(&spec, *export, cli.format.unwrap_or(Format::Json), out),
        Command::Plan { from, to, mode } => cmd_plan(&spec, from, to, *mode, cli.format, out),
        Command::Verify { file, end } => cmd_verify(&spec, file, end.as_ref(), cli.format.unwrap_or(Format::Json), out),
    }
}

pub fn build_spec(args: &ComplexArgs) -> std::result::Result<ComplexSpec, Failure> {
    let graph = match (&args.graph, &args.graph_file) {
        (Some(named), None) => named.build()?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            SimpleGraph::parse_edge_list(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(usage("one of --graph or --graph-file is required")),
        (Some(_), Some(_)) => return Err(usage("--graph and --graph-file are exclusive")),
    };
    let colors = args.colors.clone().ok_or_else(|| usage("--colors is required"))?;
    let mut spec = ComplexSpec::new(graph, colors);
    if args.no_cover {
        spec = spec.without_cover();
    }
    if args.separate_all {
        spec = spec.separating_all_robots();
    }
    Ok(spec)
}

fn strings(f: &FVector) -> Vec<String> {
    f.counts().iter().map(ToString::to_string).collect()
}

fn join(f: &FVector) -> String {
    strings(f).join(",")
}

/// Which closed form applies to the color vector, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaFamily {
    TwoOne,
    Uniform,
}

impl FormulaFamily {
    pub fn detect(spec: &ComplexSpec) -> Option<Self> {
        if !spec.is_standard() {
            return None;
        }
        let n = spec.graph.vertex_count();
        let sizes = spec.colors.sizes();
        let mut sorted = sizes.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if n >= 2 && sizes.len() == n && sorted[0] == 2 && sorted[1..].iter().all(|&l| l == 1) {
            return Some(FormulaFamily::TwoOne);
        }
        if n >= 2 && sizes.len() >= 2 && sizes.iter().all(|&l| l == n - 1) {
            return Some(FormulaFamily::Uniform);
        }
        None
    }

    fn name(self) -> &'static str {
        match self {
            FormulaFamily::TwoOne => "two-one",
            FormulaFamily::Uniform => "uniform",
        }
    }
}

fn cmd_count(spec: &ComplexSpec, format: Format, out: &mut dyn Write) -> Outcome {
    let f = spec.f_vector();
    let empty = f.total() == 0;
    let family = FormulaFamily::detect(spec);
    let formula = match family {
        Some(FormulaFamily::TwoOne) => {
            let (f0, f1) = count_formula_two_one(&spec.graph)?;
            Some(FVector::new(vec![f0, f1]))
        }
        Some(FormulaFamily::Uniform) => Some(count_formula_uniform(&spec.graph, spec.colors.colors())?),
        None => None,
    };
    let agrees = formula.as_ref().map(|g| g.same_counts(&f));
    let wedge = match family {
        Some(FormulaFamily::TwoOne) if spec.graph.is_connected() => Some(wedge_count(&spec.graph)?),
        _ => None,
    };
    let chi = f.euler_characteristic();
    let separation = match spec.separation {
        Separation::WithinColor => "within-color",
        Separation::AllRobots => "all-robots",
    };

    match format {
        Format::Json => {
            let formula_json = match (family, &formula) {
                (Some(fam), Some(g)) => json!({
                    "family": fam.name(),
                    "f_vector": strings(g),
                    "agrees": agrees,
                    "wedge_count": wedge.map(|l| l.to_string()),
                }),
                _ => Value::Null,
            };
            let report = json!({
                "vertices": spec.graph.vertex_count(),
                "edges": spec.graph.edge_count(),
                "colors": spec.colors.sizes(),
                "require_cover": spec.require_cover,
                "separation": separation,
                "empty": empty,
                "f_vector": strings(&f),
                "euler_characteristic": chi.to_string(),
                "formula": formula_json,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json value"))?;
        }
        Format::Tsv => {
            let sizes: Vec<String> = spec.colors.sizes().iter().map(ToString::to_string).collect();
            let mut rows = vec![
                ("vertices", spec.graph.vertex_count().to_string()),
                ("edges", spec.graph.edge_count().to_string()),
                ("colors", sizes.join(",")),
                ("require_cover", spec.require_cover.to_string()),
                ("separation", separation.to_string()),
                ("empty", empty.to_string()),
                ("f_vector", join(&f)),
                ("euler_characteristic", chi.to_string()),
            ];
            if let (Some(fam), Some(g)) = (family, &formula) {
                rows.push(("formula.family", fam.name().to_string()));
                rows.push(("formula.f_vector", join(g)));
                rows.push(("formula.agrees", agrees.unwrap_or(false).to_string()));
                if let Some(l) = wedge {
                    rows.push(("formula.wedge_count", l.to_string()));
                }
            }
            for (k, v) in rows {
                writeln!(out, "{k}\t{v}")?;
            }
        }
    }
    Ok(if empty { EXIT_EMPTY } else { EXIT_OK })
}

fn cmd_enumerate(spec: &ComplexSpec, dim: Option<usize>, format: Format, out: &mut dyn Write) -> Outcome {
    let mut count = 0usize;
    match format {
        Format::Tsv => {
            for c in spec.enumerate_cells(dim) {
                writeln!(out, "{c}")?;
                count += 1;
            }
        }
        Format::Json => {
            let cells: Vec<Value> = spec
                .enumerate_cells(dim)
                .map(|c| json!({ "dim": c.dim(), "cell": c.to_string() }))
                .collect();
            count = cells.len();
            let report = json!({ "count": count, "cells": cells });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json value"))?;
        }
    }
    let empty = count == 0 && (dim.is_none() || spec.enumerate_cells(None).next().is_none());
    Ok(if empty { EXIT_EMPTY } else { EXIT_OK })
}

fn cmd_components(spec: &ComplexSpec, format: Format, out: &mut dyn Write) -> Outcome {
    let comps = build_one_skeleton(spec)?.components();
    let sizes = comps.sizes();
    match format {
        Format::Json => {
            let report = json!({ "components": comps.count, "sizes": sizes });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json value"))?;
        }
        Format::Tsv => {
            writeln!(out, "components\t{}", comps.count)?;
            let sizes: Vec<String> = sizes.iter().map(ToString::to_string).collect();
            writeln!(out, "sizes\t{}", sizes.join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_skeleton(spec: &ComplexSpec, export: Option<Export>, format: Format, out: &mut dyn Write) -> Outcome {
    let sk = build_one_skeleton(spec)?;
    match export {
        Some(Export::Edges) => write!(out, "{}", sk.to_edge_list())?,
        Some(Export::Nodes) => write!(out, "{}", sk.to_node_listing())?,
        None => {
            let comps = sk.components();
            let rows = [
                ("nodes", sk.nodes().len()),
                ("arcs", sk.arcs().len()),
                ("components", comps.count),
            ];
            match format {
                Format::Json => {
                    let map: serde_json::Map<String, Value> =
                        rows.into_iter().map(|(k, v)| (k.to_string(), Value::from(v))).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(map)).expect("json value"))?;
                }
                Format::Tsv => {
                    for (k, v) in rows {
                        writeln!(out, "{k}\t{v}")?;
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_plan(
    spec: &ComplexSpec,
    from: &Cell,
    to: &Cell,
    mode: Mode,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Outcome {
    for c in [from, to] {
        spec.check_cell(c).map_err(|e| usage(format!("{c}: {e}")))?;
        if c.dim() != 0 {
            return Err(usage(format!("{c} is not a 0-cell")));
        }
    }
    let p: MovePlan = match mode {
        Mode::Constructive => plan(spec, from, to)?,
        Mode::Bfs => match plan_bfs(spec, from, to)? {
            Some(p) => p,
            None => {
                return Err(Failure {
                    code: EXIT_EMPTY,
                    message: format!("{to} is unreachable from {from}"),
                })
            }
        },
    };
    match format {
        Some(Format::Json) => {
            let moves: Vec<Value> =
                p.moves.iter().map(|m| json!([m.color, m.from, m.to])).collect();
            let report = json!({
                "start": p.start.to_string(),
                "end": p.end.to_string(),
                "length": p.moves.len(),
                "moves": moves,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json value"))?;
        }
        _ => write!(out, "{}", p.to_text())?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    spec: &ComplexSpec,
    file: &PathBuf,
    end: Option<&Cell>,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let text = std::fs::read_to_string(file)
        .map_err(|e| usage(format!("cannot read {}: {e}", file.display())))?;
    let parsed = PlanFile::parse(&text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let end = end
        .cloned()
        .or_else(|| parsed.end.clone())
        .ok_or_else(|| usage("no end cell: pass --end or add a `# end:` line"))?;
    let p = parsed.into_plan(end);
    let result = verify_plan(spec, &p);
    let (step, reason) = match &result {
        Ok(()) => (None, None),
        Err(fault) => (Some(fault.step(&p)), Some(fault.to_string())),
    };
    match format {
        Format::Json => {
            let report = json!({ "valid": result.is_ok(), "step": step, "reason": reason });
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json value"))?;
        }
        Format::Tsv => {
            writeln!(out, "valid\t{}", result.is_ok())?;
            if let (Some(s), Some(r)) = (step, reason) {
                writeln!(out, "step\t{s}")?;
                writeln!(out, "reason\t{r}")?;
            }
        }
    }
    Ok(if result.is_ok() { EXIT_OK } else { EXIT_INVALID_PLAN })
}
