//! Proper k-colorers for induced sub-hypergraphs, consumed by the potential
//! engine: the interval 2-colorer, exact backtracking, degeneracy greedy on
//! Delaunay graphs, and a Delaunay-based colorer for geometric instances.

use thiserror::Error;

use crate::coloring::{verify_proper, Color, Coloring};
use crate::geometry::{build_region_hypergraph, DiscFamily, GeometryError};
use crate::hypergraph::{DelaunayGraph, Hypergraph, Induced};

/// Default vertex-count guard for exact backtracking.
pub const DEFAULT_EXACT_GUARD: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorerError {
    #[error("exact coloring refused: {n} vertices exceeds the guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("no proper coloring with {k} colors exists")]
    Infeasible { k: usize },
    #[error("hypergraph carries no position tags")]
    MissingPositions,
    #[error("colorer used {used} classes but claims at most {k}")]
    TooManyClasses { used: usize, k: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A proper coloring with classes labelled `1..=classes_used`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoringCertificate {
    pub coloring: Coloring,
    pub classes_used: usize,
    pub k_claimed: usize,
}

impl ProperColoringCertificate {
    fn from_labels(labels: Vec<Color>, k_claimed: usize) -> Self {
        let classes_used = labels.iter().copied().max().unwrap_or(0) as usize;
        ProperColoringCertificate {
            coloring: Coloring::new(labels).expect("labels start at 1"),
            classes_used,
            k_claimed,
        }
    }
}

/// The sub-hypergraph of `parent` induced by `vertices` (sorted ascending),
/// materialized only on demand.
#[derive(Debug, Clone, Copy)]
pub struct InducedView<'a> {
    pub parent: &'a Hypergraph,
    pub vertices: &'a [usize],
}

impl InducedView<'_> {
    pub fn materialize(&self) -> Induced {
        self.parent
            .induce(self.vertices)
            .expect("engine passes valid sorted subsets")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A colorer that properly colors every induced sub-hypergraph of the
/// instances it is used on with at most `k()` classes.
pub trait HereditaryColorer {
    fn k(&self) -> usize;

    /// Returns a coloring of the view's vertices, in local order.
    fn color(&self, view: &InducedView<'_>) -> Result<ProperColoringCertificate, ColorerError>;

    fn name(&self) -> &'static str;
}

/// Alternating 1, 2, 1, 2, ... in position order.
pub fn interval_two_color(h: &Hypergraph) -> Result<ProperColoringCertificate, ColorerError> {
    let pos = h.positions().ok_or(ColorerError::MissingPositions)?;
    Ok(alternate_by_position(pos))
}

fn alternate_by_position(pos: &[i64]) -> ProperColoringCertificate {
    let mut order: Vec<usize> = (0..pos.len()).collect();
    order.sort_by_key(|&i| (pos[i], i));
    let mut labels = vec![0; pos.len()];
    for (rank, &v) in order.iter().enumerate() {
        labels[v] = 1 + (rank % 2) as Color;
    }
    ProperColoringCertificate::from_labels(labels, 2)
}

/// Hereditary 2-colorer for position-tagged interval hypergraphs. Never
/// materializes the induced sub-hypergraph.
#[derive(Debug, Clone, Copy, Default)]
pub struct IntervalColorer;

impl HereditaryColorer for IntervalColorer {
    fn k(&self) -> usize {
        2
    }

    fn color(&self, view: &InducedView<'_>) -> Result<ProperColoringCertificate, ColorerError> {
        let pos = view.parent.positions().ok_or(ColorerError::MissingPositions)?;
        let sub: Vec<i64> = view.vertices.iter().map(|&v| pos[v]).collect();
        Ok(alternate_by_position(&sub))
    }

    fn name(&self) -> &'static str {
        "interval"
    }
}

/// Exact proper coloring with at most `k` colors by backtracking, or `None`
/// if none exists.
///
/// Vertices are visited by decreasing degree (ties by id); each tries the
/// lowest color first and never opens more than one new color at a time.
pub fn exact_k_color(
    h: &Hypergraph,
    k: usize,
    guard: usize,
) -> Result<Option<ProperColoringCertificate>, ColorerError> {
    let n = h.n_vertices();
    if n > guard {
        return Err(ColorerError::GuardExceeded { n, guard });
    }
    if n == 0 {
        return Ok(Some(ProperColoringCertificate::from_labels(Vec::new(), k)));
    }
    if k == 0 {
        return Ok(None);
    }
    let deg = h.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // edges of size >= 2 grouped by the step at which they become complete
    let mut completes: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges().iter().filter(|e| e.len() >= 2) {
        let last = e.iter().map(|&v| rank[v]).max().unwrap();
        completes[last].push(e);
    }

    let mut labels: Vec<Color> = vec![0; n];
    if search(0, 0, k as Color, &order, &completes, &mut labels) {
        Ok(Some(ProperColoringCertificate::from_labels(labels, k)))
    } else {
        Ok(None)
    }
}

fn search(
    step: usize,
    max_used: Color,
    k: Color,
    order: &[usize],
    completes: &[Vec<&[usize]>],
    labels: &mut [Color],
) -> bool {
    if step == order.len() {
        return true;
    }
    let v = order[step];
    for c in 1..=(max_used + 1).min(k) {
        labels[v] = c;
        let ok = completes[step].iter().all(|e| {
            let first = labels[e[0]];
            e[1..].iter().any(|&u| labels[u] != first)
        });
        if ok && search(step + 1, max_used.max(c), k, order, completes, labels) {
            return true;
        }
    }
    labels[v] = 0;
    false
}

/// Smallest-last greedy coloring: repeatedly remove a minimum-degree vertex
/// (ties by id), then color in reverse removal order with the smallest color
/// absent among colored neighbors. Uses at most degeneracy + 1 colors.
pub fn degeneracy_greedy_color(g: &DelaunayGraph) -> ProperColoringCertificate {
    let adj = g.adjacency();
    let n = g.n;
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut elimination = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        elimination.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    let mut labels: Vec<Color> = vec![0; n];
    for &v in elimination.iter().rev() {
        let used: Vec<Color> = adj[v].iter().map(|&u| labels[u]).filter(|&c| c > 0).collect();
        labels[v] = (1..).find(|c| !used.contains(c)).unwrap();
    }
    let classes_used = labels.iter().copied().max().unwrap_or(0) as usize;
    ProperColoringCertificate::from_labels(labels, classes_used)
}

/// Exact backtracking on the whole induced sub-hypergraph.
#[derive(Debug, Clone, Copy)]
pub struct ExactColorer {
    pub k: usize,
    pub guard: usize,
}

impl ExactColorer {
    pub fn new(k: usize) -> Self {
        ExactColorer {
            k,
            guard: DEFAULT_EXACT_GUARD,
        }
    }
}

impl HereditaryColorer for ExactColorer {
    fn k(&self) -> usize {
        self.k
    }

    fn color(&self, view: &InducedView<'_>) -> Result<ProperColoringCertificate, ColorerError> {
        let sub = view.materialize();
        exact_k_color(&sub.hypergraph, self.k, self.guard)?
            .ok_or(ColorerError::Infeasible { k: self.k })
    }

    fn name(&self) -> &'static str {
        "exact"
    }
}

/// Colors the Delaunay graph of `h` and checks the coloring extends to `h`.
///
/// When every hyperedge of size at least two contains a Delaunay pair, a
/// proper coloring of the Delaunay graph is proper for `h`; otherwise exact
/// search on `h` itself is used.
pub fn color_via_delaunay(
    h: &Hypergraph,
    k: usize,
    guard: usize,
) -> Result<ProperColoringCertificate, ColorerError> {
    let n = h.n_vertices();
    let delaunay = h.delaunay_graph();
    if !h.every_edge_contains_delaunay_pair() {
        return exact_k_color(h, k, guard)?.ok_or(ColorerError::Infeasible { k });
    }
    let cert = if n <= guard {
        exact_k_color(&delaunay.to_hypergraph(), k, guard)?
            .ok_or(ColorerError::Infeasible { k })?
    } else {
        let mut cert = degeneracy_greedy_color(&delaunay);
        if cert.classes_used > k {
            return Err(ColorerError::TooManyClasses {
                used: cert.classes_used,
                k,
            });
        }
        cert.k_claimed = k;
        cert
    };
    debug_assert!(verify_proper(h, &cert.coloring).unwrap().is_valid());
    Ok(cert)
}

/// Delaunay-based colorer for geometric hypergraphs whose induced
/// sub-hypergraphs are again of the same geometric kind (points with respect
/// to discs or halfplanes).
#[derive(Debug, Clone, Copy)]
pub struct DelaunayColorer {
    pub k: usize,
    pub guard: usize,
}

impl DelaunayColorer {
    pub fn new(k: usize) -> Self {
        DelaunayColorer {
            k,
            guard: DEFAULT_EXACT_GUARD,
        }
    }
}

impl HereditaryColorer for DelaunayColorer {
    fn k(&self) -> usize {
        self.k
    }

    fn color(&self, view: &InducedView<'_>) -> Result<ProperColoringCertificate, ColorerError> {
        color_via_delaunay(&view.materialize().hypergraph, self.k, self.guard)
    }

    fn name(&self) -> &'static str {
        "delaunay"
    }
}

/// Colorer for the coverage hypergraph of a disc family. Each call rebuilds
/// the hypergraph of the induced subfamily from the geometry.
#[derive(Debug, Clone)]
pub struct RegionColorer {
    family: DiscFamily,
    guard: usize,
}

impl RegionColorer {
    /// Claims 4 classes when exact search covers every subfamily, otherwise
    /// the 6 that smallest-last greedy guarantees on a planar Delaunay graph.
    pub fn k_for(family_len: usize, guard: usize) -> usize {
        if family_len <= guard {
            4
        } else {
            6
        }
    }
}

pub fn region_hereditary_colorer(family: &DiscFamily) -> RegionColorer {
    RegionColorer {
        family: family.clone(),
        guard: DEFAULT_EXACT_GUARD,
    }
}

impl HereditaryColorer for RegionColorer {
    fn k(&self) -> usize {
        RegionColorer::k_for(self.family.len(), self.guard)
    }

    fn color(&self, view: &InducedView<'_>) -> Result<ProperColoringCertificate, ColorerError> {
        let sub = build_region_hypergraph(&self.family.subfamily(view.vertices))?;
        color_via_delaunay(&sub, self.k(), self.guard)
    }

    fn name(&self) -> &'static str {
        "region"
    }
}
