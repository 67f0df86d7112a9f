//! The `color` command: dispatch, recomputed verdicts and the run report.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use umlist_core::colorers::{region_hereditary_colorer, DelaunayColorer, ExactColorer, IntervalColorer, DEFAULT_EXACT_GUARD};
use umlist_core::geometry::has_point_inside_triangle;
use umlist_core::intervals::interval_list_size;
use umlist_core::oracle::{exhaustive_chromatic, hereditary_chromatic_number};
use umlist_core::planar::required_path_list_size;
use umlist_core::refinement::required_refinement_list_size;
use umlist_core::{
    cf_color_intervals_median, cf_color_paths_from_lists, choice_from_chromatic, few_edges_list_sizes,
    um_choice_bound, um_color_few_edges, um_color_from_lists, verify, verify_from_lists, Coloring, EngineError,
    HereditaryColorer, Hypergraph, Mode,
};

use crate::instance::Instance;
use crate::lists::{build_lists, ListPolicy};

/// Exact colorer guard once `--guard-override` is given.
const OVERRIDE_EXACT_GUARD: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Potential,
    Median,
    FewEdges,
    Separator,
    Refine,
}

impl Algorithm {
    fn id(self) -> &'static str {
        match self {
            Algorithm::Potential => "potential",
            Algorithm::Median => "median",
            Algorithm::FewEdges => "few-edges",
            Algorithm::Separator => "separator",
            Algorithm::Refine => "refine",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColorArgs {
    pub instance: PathBuf,
    pub algorithm: Algorithm,
    pub lists: ListPolicy,
    pub seed: Option<u64>,
    pub mode: Mode,
    pub base: Option<PathBuf>,
    pub out: PathBuf,
    pub guard_override: bool,
    pub omit_timing: bool,
}

#[derive(Debug, Serialize)]
pub struct Verdicts {
    pub um: bool,
    pub cf: bool,
    pub proper: bool,
    pub from_lists: bool,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub instance: Value,
    pub algorithm: &'static str,
    pub seed: Option<u64>,
    pub list_policy: String,
    pub list_sizes: Option<[usize; 2]>,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub colors_used: Option<usize>,
    pub verdicts: Option<Verdicts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification_skipped: Option<String>,
    pub trace: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Output of one algorithm before verification.
struct Produced {
    coloring: Coloring,
    trace: Option<Value>,
}

fn core<E: Into<umlist_core::Error>>(e: E) -> anyhow::Error {
    anyhow::Error::new(e.into())
}

fn colorer_for(inst: &Instance, h: &Hypergraph, exact_guard: usize) -> Result<Box<dyn HereditaryColorer>> {
    Ok(match inst {
        Instance::Intervals { .. } => Box::new(IntervalColorer),
        Instance::PointsDiscs { .. } => Box::new(DelaunayColorer { k: 4, guard: exact_guard }),
        Instance::PointsHalfplanes { points } => {
            let k = if has_point_inside_triangle(points) { 4 } else { 3 };
            Box::new(DelaunayColorer { k, guard: exact_guard })
        }
        Instance::Discs { discs } => Box::new(region_hereditary_colorer(discs)),
        _ => {
            let k = hereditary_chromatic_number(h).map_err(core)?.max(2);
            Box::new(ExactColorer { k, guard: exact_guard })
        }
    })
}

fn base_coloring(args: &ColorArgs, inst: &Instance, h: &Hypergraph) -> Result<Coloring> {
    if let Some(path) = &args.base {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return serde_json::from_str(&text).with_context(|| format!("parsing base coloring {}", path.display()));
    }
    if let (Instance::Intervals { n }, Mode::Cf) = (inst, args.mode) {
        let lists = umlist_core::ColorListFamily::uniform(*n, interval_list_size(*n));
        return cf_color_intervals_median(*n, &lists).map_err(core);
    }
    let report = exhaustive_chromatic(h).map_err(core)?;
    Ok(match args.mode {
        Mode::Cf => report.cf_witness,
        Mode::Proper => report.proper_witness,
        Mode::Um => report.um_witness,
    })
}

/// Runs `color` and writes `coloring.json`, `trace.json` and
/// `report.json` into the output directory. Returns the report and the
/// error that ended the run, if any.
pub fn color(args: &ColorArgs) -> Result<(RunReport, Option<anyhow::Error>)> {
    let inst = Instance::load(&args.instance)?;
    let n = inst.n_vertices();
    let graph = inst.graph();
    match (args.algorithm, &inst) {
        (Algorithm::Median, Instance::Intervals { .. }) => {}
        (Algorithm::Median, _) => bail!("median applies to interval instances only"),
        (Algorithm::Separator, _) if graph.is_none() => bail!("separator applies to graph instances only"),
        _ => {}
    }
    let exact_guard = if args.guard_override { OVERRIDE_EXACT_GUARD } else { DEFAULT_EXACT_GUARD };
    // graphs are colored without the path hypergraph unless an algorithm needs it
    let hypergraph = inst.hypergraph(args.guard_override);
    let needs_h = !matches!(args.algorithm, Algorithm::Separator | Algorithm::Median);
    let h = match (&hypergraph, needs_h) {
        (Ok(h), _) => Some(h),
        (Err(_), false) => None,
        (Err(_), true) => return Err(hypergraph.unwrap_err()),
    };

    let mut base = None;
    let lists = build_lists(
        &args.lists,
        n,
        || {
            let need_h = || h.context("this algorithm needs the instance hypergraph");
            Ok(match args.algorithm {
                Algorithm::Potential => {
                    let k = colorer_for(&inst, need_h()?, exact_guard)?.k();
                    vec![um_choice_bound(n.max(1), k.max(2)); n]
                }
                Algorithm::Median => vec![interval_list_size(n); n],
                Algorithm::FewEdges => few_edges_list_sizes(need_h()?),
                Algorithm::Separator => vec![required_path_list_size(n); n],
                Algorithm::Refine => {
                    let b = base_coloring(args, &inst, need_h()?)?;
                    let size = required_refinement_list_size(n, b.distinct_colors());
                    base = Some(b);
                    vec![size; n]
                }
            })
        },
        args.seed,
    )?;

    let mut failure_trace = None;
    let start = Instant::now();
    let produced: Result<Produced> = match args.algorithm {
        Algorithm::Potential => {
            let h = h.expect("potential needs the hypergraph");
            let colorer = colorer_for(&inst, h, exact_guard)?;
            match um_color_from_lists(h, &lists, colorer.as_ref()) {
                Ok(r) => Ok(Produced { coloring: r.coloring, trace: Some(serde_json::to_value(&r.trace)?) }),
                Err(EngineError::ListExhausted { vertex, iteration, trace }) => {
                    failure_trace = Some(serde_json::to_value(&trace)?);
                    Err(core(EngineError::ListExhausted { vertex, iteration, trace }))
                }
                Err(e) => Err(core(e)),
            }
        }
        Algorithm::Median => cf_color_intervals_median(n, &lists)
            .map(|coloring| Produced { coloring, trace: None })
            .map_err(core),
        Algorithm::FewEdges => um_color_few_edges(h.expect("few-edges needs the hypergraph"), &lists)
            .map_err(core)
            .and_then(|r| Ok(Produced { coloring: r.coloring, trace: Some(serde_json::to_value(&r.steps)?) })),
        Algorithm::Separator => cf_color_paths_from_lists(graph.expect("checked"), &lists)
            .map_err(core)
            .and_then(|r| Ok(Produced { coloring: r.coloring, trace: Some(serde_json::to_value(&r.levels)?) })),
        Algorithm::Refine => {
            let h = h.expect("refine needs the hypergraph");
            let base = match base {
                Some(b) => b,
                None => base_coloring(args, &inst, h)?,
            };
            choice_from_chromatic(h, &base, &lists, args.mode, args.seed.unwrap_or(0))
                .map_err(core)
                .map(|r| {
                    let trace = json!({ "redraws": r.redraws, "witness": r.witness });
                    Produced { coloring: r.coloring, trace: Some(trace) }
                })
        }
    };
    let wall = start.elapsed().as_secs_f64() * 1000.0;

    let sizes = lists.lists().iter().map(Vec::len);
    let list_sizes = (n > 0).then(|| [sizes.clone().min().unwrap(), sizes.max().unwrap()]);
    let mut report = RunReport {
        instance: json!({
            "file": args.instance.display().to_string(),
            "kind": inst.kind(),
            "n_vertices": n,
            "n_edges": h.map(Hypergraph::n_edges),
        }),
        algorithm: args.algorithm.id(),
        seed: args.seed,
        list_policy: args.lists.to_string(),
        list_sizes,
        outcome: "success",
        error: None,
        colors_used: None,
        verdicts: None,
        verification_skipped: None,
        trace: None,
        wall_time_ms: (!args.omit_timing).then_some(wall),
    };

    // outputs of an earlier run in the same directory must not survive
    for stale in ["coloring.json", "trace.json"] {
        let path = args.out.join(stale);
        if path.is_file() {
            std::fs::remove_file(&path).with_context(|| format!("removing {}", path.display()))?;
        }
    }
    let trace = match &produced {
        Ok(p) => p.trace.as_ref(),
        Err(_) => failure_trace.as_ref(),
    };
    if let Some(t) = trace {
        write_json(&args.out.join("trace.json"), t)?;
        report.trace = Some("trace.json".into());
    }
    let failure = match produced {
        Ok(p) => {
            write_json(&args.out.join("coloring.json"), &p.coloring)?;
            report.colors_used = Some(p.coloring.distinct_colors());
            match h {
                Some(h) => {
                    report.verdicts = Some(Verdicts {
                        um: verify(Mode::Um, h, &p.coloring)?.is_valid(),
                        cf: verify(Mode::Cf, h, &p.coloring)?.is_valid(),
                        proper: verify(Mode::Proper, h, &p.coloring)?.is_valid(),
                        from_lists: verify_from_lists(&p.coloring, &lists)?,
                    })
                }
                None => {
                    let why = hypergraph.as_ref().err().map(|e| e.to_string()).unwrap_or_default();
                    report.verification_skipped = Some(why);
                }
            }
            None
        }
        Err(e) => {
            report.outcome = match crate::exit_code(&e) {
                3 => "infeasible",
                4 => "guard",
                _ => "error",
            };
            report.error = Some(format!("{e:#}"));
            Some(e)
        }
    };
    write_json(&args.out.join("report.json"), &report)?;
    Ok((report, failure))
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
