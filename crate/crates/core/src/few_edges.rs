//! Unique-maximum list coloring for hypergraphs with few edges or small
//! degrees: lists of size `min(deg(v) + 1, s(H))` suffice.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, ColorListFamily, Coloring, ColoringError};
use crate::hypergraph::{s_for_edge_count, Hypergraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FewEdgesError {
    #[error(transparent)]
    Lists(#[from] ColoringError),
    #[error("list of vertex {vertex} has {have} colors, needs {need}")]
    ListTooSmall { vertex: usize, have: usize, need: usize },
    #[error("step {step}: vertex {vertex} has {have} colors left, needs {need}")]
    InductiveConditionBroken { step: usize, vertex: usize, have: usize, need: usize },
    #[error("step {step}: removed {removed} edges while s stayed at {s}")]
    EdgeDifferenceBroken { step: usize, removed: usize, s: usize },
}

/// `min(deg(v) + 1, s(H))` for every vertex.
pub fn few_edges_list_sizes(h: &Hypergraph) -> Vec<usize> {
    let s = h.s_value();
    h.degrees().into_iter().map(|d| (d + 1).min(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FewEdgesStep {
    pub vertex: usize,
    pub color: Color,
    pub edges_removed: usize,
    pub s_before: usize,
    pub s_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FewEdgesRun {
    pub coloring: Coloring,
    pub steps: Vec<FewEdgesStep>,
}

/// Repeatedly gives the largest remaining color `c` to a holder of maximum
/// degree (ties by id), deletes that vertex with its edges and strikes `c`
/// from every vertex that shared a deleted edge. The first colored vertex
/// of an edge holds its unique maximum.
///
/// After each step the remaining lists are checked against
/// `min(deg' + 1, s')` on the remaining hypergraph, and whenever `s` did
/// not drop, fewer than `s - 1` edges may have been deleted.
pub fn um_color_few_edges(h: &Hypergraph, lists: &ColorListFamily) -> Result<FewEdgesRun, FewEdgesError> {
    lists.check_aligned(h)?;
    let n = h.n_vertices();
    for (v, need) in few_edges_list_sizes(h).into_iter().enumerate() {
        let have = lists.list(v).len();
        if have < need {
            return Err(FewEdgesError::ListTooSmall { vertex: v, have, need });
        }
    }
    let edges = h.edges();
    let mut edge_alive = vec![true; edges.len()];
    let mut live_edges = edges.len();
    let mut deg = h.degrees();
    let mut remaining: Vec<Vec<Color>> = lists.lists().to_vec();
    let mut colors: Vec<Color> = vec![0; n];
    let mut steps = Vec::with_capacity(n);

    for step in 1..=n {
        let c = (0..n)
            .filter(|&v| colors[v] == 0)
            .filter_map(|v| remaining[v].last().copied())
            .max()
            .expect("uncolored vertices keep nonempty lists");
        let v = (0..n)
            .filter(|&v| colors[v] == 0 && remaining[v].last() == Some(&c))
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .unwrap();
        colors[v] = c;
        let s_before = s_for_edge_count(live_edges);
        let mut removed = 0;
        for (i, e) in edges.iter().enumerate() {
            if !edge_alive[i] || e.binary_search(&v).is_err() {
                continue;
            }
            edge_alive[i] = false;
            removed += 1;
            for &u in e {
                deg[u] -= 1;
                if colors[u] == 0 {
                    // c is the maximum remaining color, so it sits last
                    if remaining[u].last() == Some(&c) {
                        remaining[u].pop();
                    }
                }
            }
        }
        live_edges -= removed;
        let s_after = s_for_edge_count(live_edges);
        if s_after == s_before && removed > 0 && removed + 1 >= s_before {
            return Err(FewEdgesError::EdgeDifferenceBroken { step, removed, s: s_before });
        }
        for u in (0..n).filter(|&u| colors[u] == 0) {
            let need = (deg[u] + 1).min(s_after);
            if remaining[u].len() < need {
                return Err(FewEdgesError::InductiveConditionBroken {
                    step,
                    vertex: u,
                    have: remaining[u].len(),
                    need,
                });
            }
        }
        steps.push(FewEdgesStep { vertex: v, color: c, edges_removed: removed, s_before, s_after });
    }
    Ok(FewEdgesRun { coloring: Coloring::new(colors)?, steps })
}
