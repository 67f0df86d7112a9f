//! Geometric hypergraphs built with exact integer arithmetic: discrete
//! intervals, points with respect to halfplanes, points with respect to
//! discs, and families of discs with respect to coverage depth.
//!
//! Regions are closed. Inputs must be in general position; degenerate
//! inputs are rejected rather than perturbed.

mod disc;
mod generate;
mod halfplane;
pub mod predicates;
mod region;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use predicates::{in_circumcircle, orient2d, Pt, COORD_LIMIT};

pub use disc::build_disc_hypergraph;
pub use generate::{random_convex_points, random_disc_family, random_point_set};
pub use halfplane::{build_halfplane_hypergraph, has_point_inside_triangle};
pub use region::build_region_hypergraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("coordinate {0} exceeds the bound {COORD_LIMIT}")]
    CoordinateOutOfRange(i64),
    #[error("duplicate point {0:?}")]
    DuplicatePoint(Pt),
    #[error("points {0:?} are collinear")]
    Collinear([usize; 3]),
    #[error("points {0:?} are cocircular")]
    Cocircular([usize; 4]),
    #[error("disc {0} has non-positive squared radius")]
    NonPositiveRadius(usize),
    #[error("squared radius of disc {0} exceeds the bound")]
    RadiusOutOfRange(usize),
    #[error("discs {0} and {1} are identical")]
    DuplicateDisc(usize, usize),
    #[error("discs {0} and {1} are tangent")]
    Tangent(usize, usize),
    #[error("boundaries of discs {0:?} pass through a common point")]
    ConcurrentBoundaries([usize; 3]),
    #[error("interval hypergraph needs n >= 1")]
    EmptyInterval,
    #[error("no general-position instance found after {0} attempts")]
    RetriesExhausted(usize),
}

/// Integer points with general-position flags computed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointSetJson", into = "PointSetJson")]
pub struct PointSet {
    points: Vec<Pt>,
    collinear: Option<[usize; 3]>,
    cocircular: Option<[usize; 4]>,
}

#[derive(Serialize, Deserialize)]
struct PointSetJson {
    points: Vec<[i64; 2]>,
}

impl TryFrom<PointSetJson> for PointSet {
    type Error = GeometryError;
    fn try_from(j: PointSetJson) -> Result<Self, Self::Error> {
        PointSet::new(j.points.into_iter().map(|[x, y]| (x, y)).collect())
    }
}

impl From<PointSet> for PointSetJson {
    fn from(p: PointSet) -> Self {
        PointSetJson {
            points: p.points.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }
}

impl PointSet {
    pub fn new(points: Vec<Pt>) -> Result<Self, GeometryError> {
        for &(x, y) in &points {
            for c in [x, y] {
                if c.abs() > COORD_LIMIT {
                    return Err(GeometryError::CoordinateOutOfRange(c));
                }
            }
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeometryError::DuplicatePoint(w[0]));
        }
        let collinear = find_collinear(&points);
        let cocircular = find_cocircular(&points);
        Ok(PointSet {
            points,
            collinear,
            cocircular,
        })
    }

    pub fn points(&self) -> &[Pt] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn collinear_triple(&self) -> Option<[usize; 3]> {
        self.collinear
    }

    pub fn cocircular_quadruple(&self) -> Option<[usize; 4]> {
        self.cocircular
    }

    pub fn subset(&self, ids: &[usize]) -> PointSet {
        PointSet::new(ids.iter().map(|&i| self.points[i]).collect())
            .expect("subset of a valid point set is valid")
    }
}

fn find_collinear(p: &[Pt]) -> Option<[usize; 3]> {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient2d(p[i], p[j], p[k]) == 0 {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// Four points on a common circle; only triples that are not collinear span
/// a circle.
fn find_cocircular(p: &[Pt]) -> Option<[usize; 4]> {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient2d(p[i], p[j], p[k]) == 0 {
                    continue;
                }
                for l in k + 1..n {
                    if in_circumcircle(p[i], p[j], p[k], p[l]).is_eq() {
                        return Some([i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

/// A closed disc with integer center and integer squared radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Disc {
    pub cx: i64,
    pub cy: i64,
    pub r2: i64,
}

impl Disc {
    pub fn center(&self) -> Pt {
        (self.cx, self.cy)
    }

    /// Closed containment of an integer point.
    pub fn contains(&self, p: Pt) -> bool {
        predicates::squared_distance(self.center(), p) <= self.r2 as i128
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiscFamilyJson", into = "DiscFamilyJson")]
pub struct DiscFamily {
    discs: Vec<Disc>,
}

#[derive(Serialize, Deserialize)]
struct DiscFamilyJson {
    discs: Vec<[i64; 3]>,
}

impl TryFrom<DiscFamilyJson> for DiscFamily {
    type Error = GeometryError;
    fn try_from(j: DiscFamilyJson) -> Result<Self, Self::Error> {
        DiscFamily::new(
            j.discs
                .into_iter()
                .map(|[cx, cy, r2]| Disc { cx, cy, r2 })
                .collect(),
        )
    }
}

impl From<DiscFamily> for DiscFamilyJson {
    fn from(d: DiscFamily) -> Self {
        DiscFamilyJson {
            discs: d.discs.iter().map(|d| [d.cx, d.cy, d.r2]).collect(),
        }
    }
}

impl DiscFamily {
    /// Validates coordinates, radii and pairwise distinctness. Tangency and
    /// concurrency are checked by the region hypergraph constructor.
    pub fn new(discs: Vec<Disc>) -> Result<Self, GeometryError> {
        for (i, d) in discs.iter().enumerate() {
            for c in [d.cx, d.cy] {
                if c.abs() > COORD_LIMIT {
                    return Err(GeometryError::CoordinateOutOfRange(c));
                }
            }
            if d.r2 <= 0 {
                return Err(GeometryError::NonPositiveRadius(i));
            }
            if d.r2 > COORD_LIMIT * COORD_LIMIT {
                return Err(GeometryError::RadiusOutOfRange(i));
            }
        }
        for i in 0..discs.len() {
            for j in i + 1..discs.len() {
                if discs[i] == discs[j] {
                    return Err(GeometryError::DuplicateDisc(i, j));
                }
            }
        }
        Ok(DiscFamily { discs })
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    pub fn len(&self) -> usize {
        self.discs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.discs.is_empty()
    }

    pub fn subfamily(&self, ids: &[usize]) -> DiscFamily {
        DiscFamily {
            discs: ids.iter().map(|&i| self.discs[i]).collect(),
        }
    }

    /// Indices of discs containing the integer point `p`.
    pub fn coverage(&self, p: Pt) -> Vec<usize> {
        (0..self.discs.len())
            .filter(|&i| self.discs[i].contains(p))
            .collect()
    }
}

/// The discrete interval hypergraph on `n` vertices: every contiguous range
/// `[s, t]` is a hyperedge. Vertices carry their positions `0..n`.
pub fn build_interval_hypergraph(n: usize) -> Result<Hypergraph, GeometryError> {
    if n == 0 {
        return Err(GeometryError::EmptyInterval);
    }
    let mut edges = Vec::with_capacity(n * (n + 1) / 2);
    for len in 1..=n {
        for s in 0..=n - len {
            edges.push((s..s + len).collect());
        }
    }
    Ok(Hypergraph::from_sorted_unique(n, edges)
        .with_positions((0..n as i64).collect())
        .expect("one position per vertex"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_hypergraph_sizes() {
        assert_eq!(build_interval_hypergraph(1).unwrap().edges(), &[vec![0]]);
        assert_eq!(build_interval_hypergraph(3).unwrap().n_edges(), 6);
        for n in 1..40 {
            assert_eq!(build_interval_hypergraph(n).unwrap().n_edges(), n * (n + 1) / 2);
        }
        let mut d = build_interval_hypergraph(5).unwrap().delaunay_graph().edges;
        d.sort();
        assert_eq!(d, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(build_interval_hypergraph(0).is_err());
    }

    #[test]
    fn point_set_validation() {
        assert!(matches!(
            PointSet::new(vec![(0, 0), (0, 0)]),
            Err(GeometryError::DuplicatePoint(_))
        ));
        assert!(PointSet::new(vec![(COORD_LIMIT + 1, 0)]).is_err());
        let p = PointSet::new(vec![(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(p.collinear_triple(), Some([0, 1, 2]));
        let p = PointSet::new(vec![(0, 0), (2, 0), (0, 2), (2, 2)]).unwrap();
        assert_eq!(p.cocircular_quadruple(), Some([0, 1, 2, 3]));
        assert_eq!(p.collinear_triple(), None);
    }

    #[test]
    fn json_formats() {
        let p: PointSet = serde_json::from_str(r#"{"points": [[0,0],[3,1]]}"#).unwrap();
        assert_eq!(p.points(), &[(0, 0), (3, 1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"points":[[0,0],[3,1]]}"#);
        let d: DiscFamily = serde_json::from_str(r#"{"discs": [[0,0,4],[1,0,4]]}"#).unwrap();
        assert_eq!(d.len(), 2);
        assert!(serde_json::from_str::<DiscFamily>(r#"{"discs": [[0,0,0]]}"#).is_err());
    }
}
