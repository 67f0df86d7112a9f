//! List unique-maximum and conflict-free coloring of hypergraphs.
//!
//! The centerpiece is [`potential::um_color_from_lists`], which turns any
//! hereditary proper k-colorer into a unique-maximum list colorer whenever
//! `sum_v ((k-1)/k)^|L_v| < 1`. Around it sit exact constructors for
//! interval, halfplane, disc and disc-coverage hypergraphs, separator-based
//! coloring of planar graphs with respect to paths, a degree-bounded
//! colorer, the reduction from coloring to list coloring for
//! refinement-closed notions, and brute-force oracles.

pub mod colorers;
pub mod coloring;
pub mod few_edges;
pub mod geometry;
pub mod hypergraph;
pub mod intervals;
pub mod oracle;
pub mod planar;
pub mod potential;
pub mod refinement;

pub use colorers::{
    degeneracy_greedy_color, exact_k_color, interval_two_color, region_hereditary_colorer,
    ColorerError, DelaunayColorer, ExactColorer, HereditaryColorer, InducedView, IntervalColorer,
    ProperColoringCertificate, RegionColorer,
};
pub use coloring::{
    verify, verify_cf, verify_from_lists, verify_proper, verify_um, Color, ColorListFamily,
    Coloring, ColoringError, Mode, Verdict,
};
pub use few_edges::{few_edges_list_sizes, um_color_few_edges, FewEdgesError, FewEdgesRun};
pub use geometry::{
    build_disc_hypergraph, build_halfplane_hypergraph, build_interval_hypergraph,
    build_region_hypergraph, Disc, DiscFamily, GeometryError, PointSet,
};
pub use hypergraph::{DelaunayGraph, Hypergraph, HypergraphError, Induced};
pub use intervals::{
    brute_force_um_list_colorable, cf_color_intervals_median, make_tightness_instance,
    IntervalError, TightnessInstance,
};
pub use oracle::{exhaustive_choosable, exhaustive_chromatic, ExhaustiveReport, OracleError};
pub use planar::{
    cf_color_paths_from_lists, find_separator, paths_hypergraph, star_lower_bound_lists,
    PlanarError, PlanarGraph, SeparatorDecomposition,
};
pub use potential::{
    check_list_condition, um_choice_bound, um_color_from_lists, EngineError, PotentialTrace,
    UmListResult,
};
pub use refinement::{choice_from_chromatic, is_refinement, PartitionWitness, RefinementError};

use thiserror::Error;

/// How a failure should be reported to a caller such as a command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inapplicable input.
    Input,
    /// The algorithm ran and the instance has no solution on this path.
    Infeasible,
    /// A size guard refused the work.
    Guard,
    /// An internal invariant failed.
    Internal,
}

/// Any error of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Colorer(#[from] ColorerError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    FewEdges(#[from] FewEdgesError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Refinement(#[from] RefinementError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use ErrorKind::*;
        match self {
            Error::Hypergraph(_) | Error::Coloring(_) | Error::Geometry(_) => Input,
            Error::Colorer(e) => colorer_kind(e),
            Error::Engine(e) => match e {
                EngineError::ListExhausted { .. } => Infeasible,
                EngineError::Colorer(c) => colorer_kind(c),
                EngineError::ColorerViolation { .. } | EngineError::InvariantBreach { .. } => Internal,
                EngineError::DegenerateK(_) | EngineError::Lists(_) => Input,
            },
            Error::Planar(e) => match e {
                PlanarError::GuardExceeded { .. } => Guard,
                PlanarError::GreedyStuck { .. } => Infeasible,
                PlanarError::SeparatorNotFound | PlanarError::InvariantBreach(_) => Internal,
                _ => Input,
            },
            Error::FewEdges(e) => match e {
                FewEdgesError::Lists(_) | FewEdgesError::ListTooSmall { .. } => Input,
                _ => Internal,
            },
            Error::Interval(e) => match e {
                IntervalError::GuardExceeded { .. } => Guard,
                _ => Input,
            },
            Error::Refinement(e) => match e {
                RefinementError::RedrawCapExceeded { .. } => Infeasible,
                RefinementError::InvariantBreach => Internal,
                _ => Input,
            },
            Error::Oracle(e) => match e {
                OracleError::UniverseTooSmall { .. } => Input,
                _ => Guard,
            },
        }
    }
}

fn colorer_kind(e: &ColorerError) -> ErrorKind {
    match e {
        ColorerError::GuardExceeded { .. } => ErrorKind::Guard,
        ColorerError::Infeasible { .. } => ErrorKind::Infeasible,
        ColorerError::TooManyClasses { .. } => ErrorKind::Internal,
        ColorerError::MissingPositions | ColorerError::Geometry(_) => ErrorKind::Input,
    }
}
