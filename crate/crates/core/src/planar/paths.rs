use serde::Serialize;

use super::separator::{c_rec, find_separator, SeparatorDecomposition};
use super::{PlanarError, PlanarGraph};
use crate::coloring::{Color, ColorListFamily, Coloring};
use crate::hypergraph::Hypergraph;

/// Largest graph whose simple-path hypergraph is enumerated by default.
pub const PATHS_GUARD: usize = 14;
/// Ceiling for an explicitly raised guard.
pub const PATHS_HARD_LIMIT: usize = 20;

/// Hypergraph whose edges are the vertex sets of all simple paths of `g`
/// (single vertices included), by dynamic programming over
/// (visited set, endpoint).
pub fn paths_hypergraph(g: &PlanarGraph) -> Result<Hypergraph, PlanarError> {
    paths_hypergraph_with_guard(g, PATHS_GUARD)
}

/// As [`paths_hypergraph`] with a caller-chosen guard, capped at
/// [`PATHS_HARD_LIMIT`].
pub fn paths_hypergraph_with_guard(g: &PlanarGraph, guard: usize) -> Result<Hypergraph, PlanarError> {
    let n = g.n_vertices();
    let guard = guard.min(PATHS_HARD_LIMIT);
    if n > guard {
        return Err(PlanarError::GuardExceeded { n, guard });
    }
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] |= 1 << v;
    }
    for mask in 1usize..(1 << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in (0..n).filter(|&v| e & (1 << v) != 0) {
            for &u in g.neighbors(v) {
                if mask & (1 << u) == 0 {
                    ends[mask | (1 << u)] |= 1 << u;
                }
            }
        }
    }
    let edges: Vec<Vec<usize>> = (1usize..(1 << n))
        .filter(|&m| ends[m] != 0)
        .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    Ok(Hypergraph::new(n, edges).expect("masks are valid edges"))
}

/// `ceil(c_rec * sqrt(n))`, the list size the separator recursion needs.
pub fn required_path_list_size(n: usize) -> usize {
    (c_rec() * (n as f64).sqrt()).ceil() as usize
}

#[derive(Debug, Clone, Copy)]
pub struct PathColoringOptions {
    /// Reject lists shorter than [`required_path_list_size`] up front.
    pub enforce_list_bound: bool,
}

impl Default for PathColoringOptions {
    fn default() -> Self {
        PathColoringOptions { enforce_list_bound: true }
    }
}

/// One recursion step, in the vertex ids of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorRecord {
    pub depth: usize,
    pub vertices: Vec<usize>,
    pub decomposition: SeparatorDecomposition,
}

impl SeparatorRecord {
    /// Checks the decomposition against the subgraph it was computed on.
    pub fn check(&self, g: &PlanarGraph) -> Result<(), String> {
        let local = |xs: &[usize]| -> Result<Vec<usize>, String> {
            xs.iter()
                .map(|v| self.vertices.binary_search(v).map_err(|_| format!("vertex {v} outside the subproblem")))
                .collect()
        };
        SeparatorDecomposition {
            s: local(&self.decomposition.s)?,
            r: local(&self.decomposition.r)?,
            b: local(&self.decomposition.b)?,
        }
        .check(&g.induced(&self.vertices))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathColoringRun {
    pub coloring: Coloring,
    pub levels: Vec<SeparatorRecord>,
}

pub fn cf_color_paths_from_lists(
    g: &PlanarGraph,
    lists: &ColorListFamily,
) -> Result<PathColoringRun, PlanarError> {
    cf_color_paths_from_lists_with(g, lists, PathColoringOptions::default())
}

/// Conflict-free coloring with respect to paths by separator recursion:
/// the separator gets pairwise distinct colors, which are struck from every
/// list below it, and both sides recurse. Any path meets the separator of
/// the first level that cuts it, where the colors are unique.
pub fn cf_color_paths_from_lists_with(
    g: &PlanarGraph,
    lists: &ColorListFamily,
    opts: PathColoringOptions,
) -> Result<PathColoringRun, PlanarError> {
    let n = g.n_vertices();
    if lists.len() != n {
        return Err(PlanarError::ListCount { lists: lists.len(), n });
    }
    if opts.enforce_list_bound {
        let need = required_path_list_size(n);
        if let Some(v) = (0..n).find(|&v| lists.list(v).len() < need) {
            return Err(PlanarError::ListTooSmall { vertex: v, have: lists.list(v).len(), need });
        }
    }
    let mut remaining: Vec<Vec<Color>> = lists.lists().to_vec();
    let mut colors: Vec<Color> = vec![0; n];
    let mut levels = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = Vec::new();
    if n > 0 {
        stack.push(((0..n).collect(), 0));
    }
    while let Some((vertices, depth)) = stack.pop() {
        let sub = g.induced(&vertices);
        let local = find_separator(&sub)?;
        let lift = |xs: &[usize]| xs.iter().map(|&i| vertices[i]).collect::<Vec<_>>();
        let dec = SeparatorDecomposition { s: lift(&local.s), r: lift(&local.r), b: lift(&local.b) };

        let mut used: Vec<Color> = Vec::with_capacity(dec.s.len());
        for &v in &dec.s {
            let c = remaining[v]
                .iter()
                .copied()
                .find(|c| !used.contains(c))
                .ok_or(PlanarError::GreedyStuck { vertex: v })?;
            colors[v] = c;
            used.push(c);
        }
        for &v in dec.r.iter().chain(&dec.b) {
            remaining[v].retain(|c| !used.contains(c));
            if remaining[v].is_empty() {
                return Err(PlanarError::GreedyStuck { vertex: v });
            }
        }
        for part in [&dec.b, &dec.r] {
            if !part.is_empty() {
                stack.push((part.clone(), depth + 1));
            }
        }
        levels.push(SeparatorRecord { depth, vertices, decomposition: dec });
    }
    Ok(PathColoringRun {
        coloring: Coloring::new(colors).map_err(PlanarError::Lists)?,
        levels,
    })
}

/// Lists on the star `K_{1,n-1}` (center 0): the center gets `1..=s`,
/// every leaf gets `s+1..=2s`.
///
/// # Panics
/// If `n < 3` or `s == 0`.
pub fn star_lower_bound_lists(n: usize, s: usize) -> ColorListFamily {
    assert!(n >= 3 && s >= 1, "star lists need n >= 3 and s >= 1");
    let s = s as Color;
    let mut lists = vec![(1..=s).collect::<Vec<Color>>()];
    lists.extend((1..n).map(|_| (s + 1..=2 * s).collect::<Vec<Color>>()));
    ColorListFamily::new(lists).expect("nonempty positive lists")
}
