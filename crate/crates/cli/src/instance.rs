//! Instance files: each module's JSON format plus a `"kind"` tag.

use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use umlist_core::geometry::{
    build_disc_hypergraph, build_halfplane_hypergraph, build_interval_hypergraph, build_region_hypergraph,
    random_convex_points, random_disc_family, random_point_set, DiscFamily, PointSet,
};
use umlist_core::planar::{paths_hypergraph_with_guard, PlanarGraph, PATHS_GUARD, PATHS_HARD_LIMIT};
use umlist_core::Hypergraph;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Intervals {
        n: usize,
    },
    PointsDiscs {
        #[serde(flatten)]
        points: PointSet,
    },
    PointsHalfplanes {
        #[serde(flatten)]
        points: PointSet,
    },
    Discs {
        #[serde(flatten)]
        discs: DiscFamily,
    },
    Grid {
        rows: usize,
        cols: usize,
        #[serde(flatten)]
        graph: PlanarGraph,
    },
    Star {
        #[serde(flatten)]
        graph: PlanarGraph,
    },
    Planar {
        #[serde(flatten)]
        graph: PlanarGraph,
    },
    Hypergraph {
        #[serde(flatten)]
        hypergraph: Hypergraph,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    Intervals,
    PointsDiscs,
    PointsHalfplanes,
    Discs,
    Grid,
    Star,
    Planar,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GenParams {
    /// Number of vertices, points or discs.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Coordinates are drawn from 0..bound.
    #[arg(long, default_value_t = 64)]
    pub bound: i64,
    /// Largest squared disc radius.
    #[arg(long, default_value_t = 400)]
    pub max_r2: i64,
    /// Edge survival probability for random planar graphs.
    #[arg(long, default_value_t = 0.7)]
    pub keep: f64,
    /// Points in convex position (halfplane instances only).
    #[arg(long)]
    pub convex: bool,
    /// Redraws allowed when a random draw is degenerate.
    #[arg(long, default_value_t = 1000)]
    pub retries: usize,
}

fn need(value: Option<usize>, name: &str) -> Result<usize> {
    match value {
        Some(v) if v >= 1 => Ok(v),
        Some(_) => bail!("--{name} must be at least 1"),
        None => bail!("--{name} is required for this kind"),
    }
}

pub fn generate(kind: GenKind, p: &GenParams, seed: Option<u64>) -> Result<Instance> {
    let rng = || -> Result<ChaCha8Rng> {
        let seed = seed.context("--seed is required for random instances")?;
        Ok(ChaCha8Rng::seed_from_u64(seed))
    };
    Ok(match kind {
        GenKind::Intervals => Instance::Intervals { n: need(p.n, "n")? },
        GenKind::Grid => {
            let (rows, cols) = (need(p.rows, "rows")?, need(p.cols, "cols")?);
            Instance::Grid { rows, cols, graph: PlanarGraph::grid(rows, cols) }
        }
        GenKind::Star => {
            let n = need(p.n, "n")?;
            Instance::Star { graph: PlanarGraph::star(n) }
        }
        GenKind::Planar => {
            if !(0.0..=1.0).contains(&p.keep) {
                bail!("--keep must lie in [0, 1]");
            }
            Instance::Planar { graph: PlanarGraph::random(need(p.n, "n")?, p.keep, &mut rng()?) }
        }
        GenKind::PointsDiscs => {
            let points = random_point_set(need(p.n, "n")?, p.bound, &mut rng()?, p.retries)
                .map_err(umlist_core::Error::from)?;
            Instance::PointsDiscs { points }
        }
        GenKind::PointsHalfplanes => {
            let n = need(p.n, "n")?;
            let points = if p.convex {
                random_convex_points(n, p.bound, &mut rng()?, p.retries)
            } else {
                random_point_set(n, p.bound, &mut rng()?, p.retries)
            }
            .map_err(umlist_core::Error::from)?;
            Instance::PointsHalfplanes { points }
        }
        GenKind::Discs => {
            let discs = random_disc_family(need(p.n, "n")?, p.bound, p.max_r2, &mut rng()?, p.retries)
                .map_err(umlist_core::Error::from)?;
            Instance::Discs { discs }
        }
    })
}

impl Instance {
    pub fn load(path: &Path) -> Result<Instance> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let inst: Instance =
            serde_json::from_str(&text).with_context(|| format!("parsing instance {}", path.display()))?;
        if let Instance::Grid { rows, cols, graph } = &inst {
            if rows * cols != graph.n_vertices() {
                bail!("grid {rows}x{cols} does not match its {} vertices", graph.n_vertices());
            }
        }
        Ok(inst)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Intervals { .. } => "intervals",
            Instance::PointsDiscs { .. } => "points-discs",
            Instance::PointsHalfplanes { .. } => "points-halfplanes",
            Instance::Discs { .. } => "discs",
            Instance::Grid { .. } => "grid",
            Instance::Star { .. } => "star",
            Instance::Planar { .. } => "planar",
            Instance::Hypergraph { .. } => "hypergraph",
        }
    }

    pub fn n_vertices(&self) -> usize {
        match self {
            Instance::Intervals { n } => *n,
            Instance::PointsDiscs { points } | Instance::PointsHalfplanes { points } => points.len(),
            Instance::Discs { discs } => discs.len(),
            Instance::Grid { graph, .. } | Instance::Star { graph } | Instance::Planar { graph } => graph.n_vertices(),
            Instance::Hypergraph { hypergraph } => hypergraph.n_vertices(),
        }
    }

    pub fn graph(&self) -> Option<&PlanarGraph> {
        match self {
            Instance::Grid { graph, .. } | Instance::Star { graph } | Instance::Planar { graph } => Some(graph),
            _ => None,
        }
    }

    /// The hypergraph the coloring notions refer to. For graphs this is the
    /// simple-path hypergraph, enumerated only under the path guard.
    pub fn hypergraph(&self, guard_override: bool) -> Result<Hypergraph> {
        let h = match self {
            Instance::Intervals { n } => build_interval_hypergraph(*n).map_err(umlist_core::Error::from)?,
            Instance::PointsDiscs { points } => build_disc_hypergraph(points).map_err(umlist_core::Error::from)?,
            Instance::PointsHalfplanes { points } => {
                build_halfplane_hypergraph(points).map_err(umlist_core::Error::from)?
            }
            Instance::Discs { discs } => build_region_hypergraph(discs).map_err(umlist_core::Error::from)?,
            Instance::Grid { graph, .. } | Instance::Star { graph } | Instance::Planar { graph } => {
                let guard = if guard_override { PATHS_HARD_LIMIT } else { PATHS_GUARD };
                paths_hypergraph_with_guard(graph, guard).map_err(umlist_core::Error::from)?
            }
            Instance::Hypergraph { hypergraph } => hypergraph.clone(),
        };
        Ok(h)
    }
}
