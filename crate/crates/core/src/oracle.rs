//! Brute-force ground truth for small instances: chromatic numbers of all
//! three kinds, exhaustive list-colorability and choosability.

use thiserror::Error;

use crate::coloring::{edge_ok, Color, Coloring, Mode};
use crate::hypergraph::Hypergraph;

pub const CHROMATIC_GUARD: usize = 10;
pub const HEREDITARY_GUARD: usize = 12;
pub const CHOOSABILITY_GUARD: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("refused: {n} vertices exceeds the guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("refused: more than {guard} list families")]
    TooManyFamilies { guard: u64 },
    #[error("list size {ell} exceeds the color universe {universe}")]
    UniverseTooSmall { ell: usize, universe: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub chi: usize,
    pub chi_cf: usize,
    pub chi_um: usize,
    pub proper_witness: Coloring,
    pub cf_witness: Coloring,
    pub um_witness: Coloring,
}

/// Edges grouped by their largest vertex, so each is checked once its last
/// vertex is assigned in the order `0..n`.
fn edges_by_last(h: &Hypergraph) -> Vec<Vec<&[usize]>> {
    let mut out = vec![Vec::new(); h.n_vertices()];
    for e in h.edges() {
        out[*e.last().unwrap()].push(e.as_slice());
    }
    out
}

/// Lexicographically first coloring from `lists` valid for `mode`, by
/// backtracking over vertices `0..n` with colors tried in list order.
pub fn search_from_lists(h: &Hypergraph, lists: &[Vec<Color>], mode: Mode) -> Option<Coloring> {
    let n = h.n_vertices();
    let by_last = edges_by_last(h);
    let mut colors: Vec<Color> = vec![0; n];
    fn go(v: usize, lists: &[Vec<Color>], mode: Mode, by_last: &[Vec<&[usize]>], colors: &mut [Color]) -> bool {
        if v == colors.len() {
            return true;
        }
        for &c in &lists[v] {
            colors[v] = c;
            if by_last[v].iter().all(|e| edge_ok(mode, e, colors)) && go(v + 1, lists, mode, by_last, colors) {
                return true;
            }
        }
        colors[v] = 0;
        false
    }
    go(0, lists, mode, &by_last, &mut colors).then(|| Coloring::new(colors).expect("list colors are positive"))
}

/// A coloring with colors in `1..=k` valid for `mode`, if one exists. For
/// proper and conflict-free colorings only canonical labelings (colors in
/// order of first use) are searched, since relabeling preserves validity.
fn color_with_k(h: &Hypergraph, k: usize, mode: Mode) -> Option<Coloring> {
    let n = h.n_vertices();
    let by_last = edges_by_last(h);
    let symmetric = mode != Mode::Um;
    let mut colors: Vec<Color> = vec![0; n];
    fn go(
        v: usize,
        max_used: Color,
        k: Color,
        symmetric: bool,
        mode: Mode,
        by_last: &[Vec<&[usize]>],
        colors: &mut [Color],
    ) -> bool {
        if v == colors.len() {
            return true;
        }
        let top = if symmetric { (max_used + 1).min(k) } else { k };
        for c in 1..=top {
            colors[v] = c;
            if by_last[v].iter().all(|e| edge_ok(mode, e, colors))
                && go(v + 1, max_used.max(c), k, symmetric, mode, by_last, colors)
            {
                return true;
            }
        }
        colors[v] = 0;
        false
    }
    go(0, 0, k as Color, symmetric, mode, &by_last, &mut colors)
        .then(|| Coloring::new(colors).expect("colors start at 1"))
}

/// Smallest number of colors for `mode` and a witness, without a guard.
fn min_colors(h: &Hypergraph, mode: Mode) -> (usize, Coloring) {
    let n = h.n_vertices();
    if n == 0 {
        return (0, Coloring::new(Vec::new()).unwrap());
    }
    (1..=n)
        .find_map(|k| color_with_k(h, k, mode).map(|c| (k, c)))
        .expect("n distinct colors are valid for every mode")
}

pub fn exhaustive_chromatic(h: &Hypergraph) -> Result<ExhaustiveReport, OracleError> {
    let n = h.n_vertices();
    if n > CHROMATIC_GUARD {
        return Err(OracleError::GuardExceeded { n, guard: CHROMATIC_GUARD });
    }
    let (chi, proper_witness) = min_colors(h, Mode::Proper);
    let (chi_cf, cf_witness) = min_colors(h, Mode::Cf);
    let (chi_um, um_witness) = min_colors(h, Mode::Um);
    Ok(ExhaustiveReport { chi, chi_cf, chi_um, proper_witness, cf_witness, um_witness })
}

/// Largest proper chromatic number over all induced sub-hypergraphs.
pub fn hereditary_chromatic_number(h: &Hypergraph) -> Result<usize, OracleError> {
    let n = h.n_vertices();
    if n > HEREDITARY_GUARD {
        return Err(OracleError::GuardExceeded { n, guard: HEREDITARY_GUARD });
    }
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let sub = h.induce(&subset).expect("valid subset");
        // only a subset that defeats `best` colors can raise the maximum
        if best == 0 || color_with_k(&sub.hypergraph, best, Mode::Proper).is_none() {
            best = min_colors(&sub.hypergraph, Mode::Proper).0;
        }
    }
    Ok(best)
}

/// Whether every assignment of `ell`-subsets of `1..=universe` to the
/// vertices admits a coloring from the lists valid for `mode`.
///
/// For proper and conflict-free colorings, list families are enumerated up
/// to permutations of the universe (new colors enter in increasing order).
/// Unique-maximum validity depends on the order of colors, so there every
/// family is tried. Certifying choosability over an unbounded universe from
/// a bounded one rests on a symmetry argument, not proved here.
pub fn exhaustive_choosable(h: &Hypergraph, ell: usize, mode: Mode, universe: usize) -> Result<bool, OracleError> {
    if ell > universe {
        return Err(OracleError::UniverseTooSmall { ell, universe });
    }
    let n = h.n_vertices();
    if ell == 0 {
        return Ok(n == 0);
    }
    let subsets = subsets_of_size(universe, ell);
    let mut lists: Vec<Vec<Color>> = vec![Vec::new(); n];
    let mut visited = 0u64;
    let symmetric = mode != Mode::Um;
    #[allow(clippy::too_many_arguments)]
    fn go(
        v: usize,
        max_seen: Color,
        h: &Hypergraph,
        mode: Mode,
        symmetric: bool,
        subsets: &[Vec<Color>],
        lists: &mut Vec<Vec<Color>>,
        visited: &mut u64,
    ) -> Result<bool, OracleError> {
        if v == lists.len() {
            *visited += 1;
            if *visited > CHOOSABILITY_GUARD {
                return Err(OracleError::TooManyFamilies { guard: CHOOSABILITY_GUARD });
            }
            return Ok(search_from_lists(h, lists, mode).is_some());
        }
        for s in subsets {
            if symmetric {
                // colors above max_seen must be max_seen+1, max_seen+2, ...
                let fresh: Vec<Color> = s.iter().copied().filter(|&c| c > max_seen).collect();
                if fresh.iter().enumerate().any(|(i, &c)| c != max_seen + 1 + i as Color) {
                    continue;
                }
            }
            lists[v] = s.clone();
            let next_max = max_seen.max(*s.last().unwrap());
            if !go(v + 1, next_max, h, mode, symmetric, subsets, lists, visited)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    go(0, 0, h, mode, symmetric, &subsets, &mut lists, &mut visited)
}

fn subsets_of_size(universe: usize, k: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut cur: Vec<Color> = (1..=k as Color).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < (universe - k + i + 1) as Color) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
