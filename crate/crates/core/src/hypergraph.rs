//! Finite hypergraphs with dense vertex ids, induced sub-hypergraphs and the
//! Delaunay graph (the cardinality-2 hyperedges).

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex id {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("hyperedge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("position tags: expected {expected}, got {got}")]
    PositionCount { expected: usize, got: usize },
    #[error("duplicate vertex {0} in induced subset")]
    DuplicateVertex(usize),
}

/// A hypergraph on vertices `0..n`.
///
/// Each hyperedge is stored sorted ascending; the family is deduplicated by
/// first occurrence, so iteration order is the construction order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    /// Optional line positions, present for discrete interval hypergraphs
    /// and carried through `induce`.
    positions: Option<Vec<i64>>,
}

/// `{"n": .., "edges": [[..], ..]}` with an optional `"positions"` array.
#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    positions: Option<Vec<i64>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(j: HypergraphJson) -> Result<Self, Self::Error> {
        let h = Hypergraph::new(j.n, j.edges)?;
        match j.positions {
            Some(p) => h.with_positions(p),
            None => Ok(h),
        }
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson { n: h.n, edges: h.edges, positions: h.positions }
    }
}

impl Hypergraph {
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut family = Vec::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let mut e: Vec<usize> = edge.into_iter().collect();
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: bad, n });
            }
            e.sort_unstable();
            e.dedup();
            if seen.insert(e.clone()) {
                family.push(e);
            }
        }
        Ok(Hypergraph {
            n,
            edges: family,
            positions: None,
        })
    }

    /// Build without re-validating; callers guarantee sorted, in-range,
    /// nonempty and distinct edges.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(edges.iter().all(|e| !e.is_empty()
            && e.windows(2).all(|w| w[0] < w[1])
            && e.last().is_some_and(|&v| v < n)));
        Hypergraph {
            n,
            edges,
            positions: None,
        }
    }

    pub fn with_positions(mut self, positions: Vec<i64>) -> Result<Self, HypergraphError> {
        if positions.len() != self.n {
            return Err(HypergraphError::PositionCount {
                expected: self.n,
                got: positions.len(),
            });
        }
        self.positions = Some(positions);
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn positions(&self) -> Option<&[i64]> {
        self.positions.as_deref()
    }

    fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v >= self.n {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize, HypergraphError> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count())
    }

    /// All degrees at once, in one pass over the family.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Minimal `s >= 1` with `|E| <= s(s-1)/2`.
    pub fn s_value(&self) -> usize {
        s_for_edge_count(self.edges.len())
    }

    /// The sub-hypergraph induced by `subset`, re-indexed to `0..|subset|` in
    /// ascending order of original id.
    pub fn induce(&self, subset: &[usize]) -> Result<Induced, HypergraphError> {
        let mut original: Vec<usize> = subset.to_vec();
        original.sort_unstable();
        for w in original.windows(2) {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&last) = original.last() {
            self.check_vertex(last)?;
        }
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            let restricted: Vec<usize> = e
                .iter()
                .filter_map(|&v| (local[v] != usize::MAX).then_some(local[v]))
                .collect();
            if !restricted.is_empty() && seen.insert(restricted.clone()) {
                edges.push(restricted);
            }
        }
        let mut hypergraph = Hypergraph::from_sorted_unique(original.len(), edges);
        if let Some(pos) = &self.positions {
            hypergraph.positions = Some(original.iter().map(|&v| pos[v]).collect());
        }
        Ok(Induced {
            hypergraph,
            original,
        })
    }

    /// The graph of all cardinality-2 hyperedges.
    pub fn delaunay_graph(&self) -> DelaunayGraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| (e[0], e[1]))
            .collect();
        DelaunayGraph {
            n: self.n,
            edges,
        }
    }

    /// True iff every hyperedge with at least two vertices contains one of
    /// the cardinality-2 hyperedges.
    pub fn every_edge_contains_delaunay_pair(&self) -> bool {
        let pairs: HashSet<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| (e[0], e[1]))
            .collect();
        self.edges.iter().filter(|e| e.len() > 2).all(|e| {
            e.iter().enumerate().any(|(i, &a)| {
                e[i + 1..].iter().any(|&b| pairs.contains(&(a, b)))
            })
        })
    }

    /// Edge family as a set, for order-insensitive comparisons.
    pub fn edge_set(&self) -> BTreeSet<Vec<usize>> {
        self.edges.iter().cloned().collect()
    }
}

pub fn s_for_edge_count(m: usize) -> usize {
    let mut s = 1usize;
    while m > s * (s - 1) / 2 {
        s += 1;
    }
    s
}

/// An induced sub-hypergraph together with the map from its local ids back
/// to the parent's ids (`original[local] = parent id`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub hypergraph: Hypergraph,
    pub original: Vec<usize>,
}

impl Induced {
    pub fn local_of(&self) -> HashMap<usize, usize> {
        self.original
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect()
    }
}

/// A simple graph; as the Delaunay graph of a hypergraph its edges are the
/// hyperedges of size two, stored as `(low, high)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelaunayGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DelaunayGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// The graph viewed as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_sorted_unique(
            self.n,
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_interval_hypergraph;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let g: Hypergraph = serde_json::from_str(r#"{"n": 3, "edges": [[1, 0], [2]]}"#).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1], vec![2]]);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[0,1],[2]]}"#);
        let h2 = build_interval_hypergraph(2).unwrap();
        let s = serde_json::to_string(&h2).unwrap();
        assert_eq!(s, r#"{"n":2,"edges":[[0],[1],[0,1]],"positions":[0,1]}"#);
        assert_eq!(serde_json::from_str::<Hypergraph>(&s).unwrap(), h2);
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n": 2, "edges": [[2]]}"#).is_err());
    }

    #[test]
    fn construction_sorts_and_dedups() {
        let g = h(3, &[&[1, 0], &[0, 1], &[2, 1, 0], &[1, 1]]);
        assert_eq!(g.edges(), &[vec![0, 1], vec![0, 1, 2], vec![1]]);
        assert!(matches!(
            Hypergraph::new(2, vec![vec![0, 2]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            Hypergraph::new(2, vec![vec![]]),
            Err(HypergraphError::EmptyEdge { index: 0 })
        ));
    }

    #[test]
    fn induce_examples() {
        let g = h(3, &[&[0, 1], &[0, 1, 2]]);
        let sub = g.induce(&[0, 2]).unwrap();
        assert_eq!(sub.hypergraph.n_vertices(), 2);
        assert_eq!(sub.hypergraph.edges(), &[vec![0], vec![0, 1]]);
        assert_eq!(sub.original, vec![0, 2]);

        let g = h(4, &[&[0, 1], &[2, 3]]);
        let sub = g.induce(&[0, 2]).unwrap();
        assert_eq!(sub.hypergraph.edges(), &[vec![0], vec![1]]);

        let g = h(3, &[&[0, 1], &[1, 2], &[0, 1]]);
        assert_eq!(g.induce(&[0, 1, 2]).unwrap().hypergraph, g);

        assert!(g.induce(&[0, 5]).is_err());
        assert!(g.induce(&[1, 1]).is_err());
    }

    #[test]
    fn induce_carries_positions() {
        let g = build_interval_hypergraph(5).unwrap();
        let sub = g.induce(&[1, 3, 4]).unwrap();
        assert_eq!(sub.hypergraph.positions(), Some(&[1i64, 3, 4][..]));
    }

    #[test]
    fn delaunay_graph_examples() {
        let g = h(3, &[&[0, 1], &[0, 1, 2], &[2]]);
        assert_eq!(g.delaunay_graph().edges, vec![(0, 1)]);
        let empty = h(3, &[]);
        assert!(empty.delaunay_graph().edges.is_empty());
        let h4 = build_interval_hypergraph(4).unwrap();
        let mut d = h4.delaunay_graph().edges;
        d.sort();
        assert_eq!(d, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn degree_examples() {
        let g = h(3, &[&[0, 1], &[0, 1, 2]]);
        assert_eq!(g.degree(0).unwrap(), 2);
        assert_eq!(h(2, &[]).degree(1).unwrap(), 0);
        let h3 = build_interval_hypergraph(3).unwrap();
        assert_eq!(h3.degree(1).unwrap(), 4);
        assert!(h3.degree(3).is_err());
        assert_eq!(h3.degrees(), vec![3, 4, 3]);
    }

    #[test]
    fn s_value_examples() {
        assert_eq!(s_for_edge_count(0), 1);
        assert_eq!(s_for_edge_count(1), 2);
        assert_eq!(s_for_edge_count(4), 4);
        assert_eq!(s_for_edge_count(3), 3);
        assert_eq!(s_for_edge_count(6), 4);
        assert_eq!(s_for_edge_count(7), 5);
    }

    #[test]
    fn s_value_brackets_edge_count() {
        for m in 0..500usize {
            let s = s_for_edge_count(m);
            assert!(m <= s * (s - 1) / 2);
            if s > 1 {
                assert!((s - 1) * (s - 2) / 2 < m);
            }
            assert!(s_for_edge_count(m + 1) >= s);
        }
    }
}
