//! Colorings, color lists, and the proper / conflict-free / unique-maximum
//! verdicts.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Colors are positive integers.
pub type Color = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color 0 at vertex {0}; colors must be positive")]
    NonPositiveColor(usize),
    #[error("empty color list at vertex {0}")]
    EmptyList(usize),
    #[error("size mismatch: hypergraph has {expected} vertices, got {got}")]
    SizeMismatch { expected: usize, got: usize },
}

/// A total assignment of positive colors to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self, ColoringError> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::NonPositiveColor(v));
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Relabels colors to `1..=m` by first occurrence.
    pub fn canonical_classes(&self) -> Vec<usize> {
        let mut label: HashMap<Color, usize> = HashMap::new();
        self.colors
            .iter()
            .map(|c| {
                let next = label.len();
                *label.entry(*c).or_insert(next)
            })
            .collect()
    }
}

impl From<Coloring> for Vec<Color> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

/// Per-vertex admissible color sets, each sorted ascending and nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorListFamily {
    lists: Vec<Vec<Color>>,
}

impl ColorListFamily {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self, ColoringError> {
        let mut out = Vec::with_capacity(lists.len());
        for (v, mut l) in lists.into_iter().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(ColoringError::EmptyList(v));
            }
            if l[0] == 0 {
                return Err(ColoringError::NonPositiveColor(v));
            }
            out.push(l);
        }
        Ok(ColorListFamily { lists: out })
    }

    /// Every vertex gets `{1..=size}`.
    pub fn uniform(n: usize, size: usize) -> Self {
        assert!(size >= 1);
        ColorListFamily {
            lists: vec![(1..=size as Color).collect(); n],
        }
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn check_aligned(&self, h: &Hypergraph) -> Result<(), ColoringError> {
        if self.lists.len() != h.n_vertices() {
            return Err(ColoringError::SizeMismatch {
                expected: h.n_vertices(),
                got: self.lists.len(),
            });
        }
        Ok(())
    }

    /// Restriction to `vertices`, in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        ColorListFamily {
            lists: vertices.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }
}

/// The three coloring notions, ordered from weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Proper,
    Cf,
    Um,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Proper => "proper",
            Mode::Cf => "cf",
            Mode::Um => "um",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "proper" => Ok(Mode::Proper),
            "cf" => Ok(Mode::Cf),
            "um" => Ok(Mode::Um),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Outcome of a verifier: either valid, or the first violating hyperedge in
/// family order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Valid,
    Violated { edge_index: usize, edge: Vec<usize> },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Valid => None,
            Verdict::Violated { edge, .. } => Some(edge),
        }
    }
}

/// Does the edge, under `colors`, satisfy `mode`? Pure per-edge predicate
/// shared by the verifiers and the exhaustive searches.
pub fn edge_ok(mode: Mode, edge: &[usize], colors: &[Color]) -> bool {
    match mode {
        Mode::Proper => {
            if edge.len() < 2 {
                return true;
            }
            let first = colors[edge[0]];
            edge[1..].iter().any(|&v| colors[v] != first)
        }
        Mode::Cf => {
            if edge.len() <= 2 {
                // a singleton is its own unique color; a pair needs two colors
                return edge.len() == 1 || colors[edge[0]] != colors[edge[1]];
            }
            let mut counts: HashMap<Color, u32> = HashMap::with_capacity(edge.len());
            for &v in edge {
                *counts.entry(colors[v]).or_insert(0) += 1;
            }
            counts.values().any(|&c| c == 1)
        }
        Mode::Um => {
            let mut max = 0;
            let mut count = 0u32;
            for &v in edge {
                let c = colors[v];
                if c > max {
                    max = c;
                    count = 1;
                } else if c == max {
                    count += 1;
                }
            }
            count == 1
        }
    }
}

pub fn verify(mode: Mode, h: &Hypergraph, c: &Coloring) -> Result<Verdict, ColoringError> {
    if c.len() != h.n_vertices() {
        return Err(ColoringError::SizeMismatch {
            expected: h.n_vertices(),
            got: c.len(),
        });
    }
    Ok(h.edges()
        .iter()
        .position(|e| !edge_ok(mode, e, c.colors()))
        .map_or(Verdict::Valid, |i| Verdict::Violated {
            edge_index: i,
            edge: h.edges()[i].clone(),
        }))
}

/// Every hyperedge with at least two vertices is non-monochromatic.
pub fn verify_proper(h: &Hypergraph, c: &Coloring) -> Result<Verdict, ColoringError> {
    verify(Mode::Proper, h, c)
}

/// Every hyperedge has a color occurring exactly once in it.
pub fn verify_cf(h: &Hypergraph, c: &Coloring) -> Result<Verdict, ColoringError> {
    verify(Mode::Cf, h, c)
}

/// In every hyperedge the maximum color occurs exactly once.
pub fn verify_um(h: &Hypergraph, c: &Coloring) -> Result<Verdict, ColoringError> {
    verify(Mode::Um, h, c)
}

pub fn verify_from_lists(c: &Coloring, lists: &ColorListFamily) -> Result<bool, ColoringError> {
    if c.len() != lists.len() {
        return Err(ColoringError::SizeMismatch {
            expected: lists.len(),
            got: c.len(),
        });
    }
    Ok(c
        .colors()
        .iter()
        .zip(lists.lists())
        .all(|(col, l)| l.binary_search(col).is_ok()))
}
