//! Planar graphs: embedding, balanced separators and conflict-free list
//! coloring with respect to simple paths.

mod embed;
mod graph;
mod paths;
mod separator;

use thiserror::Error;

use crate::coloring::ColoringError;

pub use embed::{embed, is_planar, Embedding};
pub use graph::PlanarGraph;
pub use paths::{
    cf_color_paths_from_lists, cf_color_paths_from_lists_with, paths_hypergraph, paths_hypergraph_with_guard,
    required_path_list_size, star_lower_bound_lists, PathColoringOptions, PathColoringRun,
    SeparatorRecord, PATHS_GUARD, PATHS_HARD_LIMIT,
};
pub use separator::{c_rec, c_sep, find_separator, SeparatorDecomposition, EXHAUSTIVE_SEPARATOR_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("adjacency has {rows} rows for n = {n}")]
    AdjacencyLength { n: usize, rows: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("repeated neighbor at vertex {0}")]
    ParallelEdge(usize),
    #[error("edge {0}-{1} is not listed symmetrically")]
    Asymmetric(usize, usize),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("refused: {n} vertices exceeds the guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("no balanced separator found")]
    SeparatorNotFound,
    #[error("{lists} lists for {n} vertices")]
    ListCount { lists: usize, n: usize },
    #[error("list of vertex {vertex} has {have} colors, needs {need}")]
    ListTooSmall { vertex: usize, have: usize, need: usize },
    #[error("no admissible color left for vertex {vertex}")]
    GreedyStuck { vertex: usize },
    #[error("invariant broken: {0}")]
    InvariantBreach(String),
    #[error(transparent)]
    Lists(#[from] ColoringError),
}
