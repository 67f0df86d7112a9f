use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::embed::embed;
use super::{PlanarError, PlanarGraph};

/// Graphs up to this size get an exhaustive minimum separator.
pub const EXHAUSTIVE_SEPARATOR_LIMIT: usize = 16;

/// Separator size constant: `|S| <= c_sep * sqrt(n)`, checked exactly as
/// `|S|^2 <= 8 n`.
pub fn c_sep() -> f64 {
    8f64.sqrt()
}

/// List-size constant of the path-coloring recursion, the geometric series
/// `c_sep * sum (2/3)^(i/2)`.
pub fn c_rec() -> f64 {
    c_sep() / (1.0 - (2.0f64 / 3.0).sqrt())
}

/// `V = S + R + B` with no edge between `R` and `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorDecomposition {
    pub s: Vec<usize>,
    pub r: Vec<usize>,
    pub b: Vec<usize>,
}

impl SeparatorDecomposition {
    /// Checks partition, independence of `R` from `B`, the `2n/3` balance
    /// and the size bound.
    pub fn check(&self, g: &PlanarGraph) -> Result<(), String> {
        let n = g.n_vertices();
        let mut side = vec![0u8; n];
        for (tag, part) in [(1u8, &self.s), (2, &self.r), (3, &self.b)] {
            for &v in part {
                if v >= n || side[v] != 0 {
                    return Err(format!("vertex {v} missing from range or repeated"));
                }
                side[v] = tag;
            }
        }
        if let Some(v) = side.iter().position(|&t| t == 0) {
            return Err(format!("vertex {v} in no part"));
        }
        for (u, v) in g.edges() {
            if matches!((side[u], side[v]), (2, 3) | (3, 2)) {
                return Err(format!("edge {u}-{v} joins R and B"));
            }
        }
        if 3 * self.r.len().max(self.b.len()) > 2 * n {
            return Err(format!("part sizes {} and {} exceed 2n/3", self.r.len(), self.b.len()));
        }
        if self.s.len() * self.s.len() > 8 * n {
            return Err(format!("|S| = {} exceeds sqrt(8n)", self.s.len()));
        }
        Ok(())
    }
}

/// Splits the components of `G - S` into `R` and `B` minimizing the larger
/// side (subset-sum over component sizes). Returns the larger side's size.
fn split(g: &PlanarGraph, in_s: &[bool]) -> (SeparatorDecomposition, usize) {
    let alive: Vec<bool> = in_s.iter().map(|&x| !x).collect();
    let comps = g.components_within(&alive);
    let total: usize = comps.iter().map(Vec::len).sum();
    // reach[s]: the component that first completed sum s (0/1 knapsack)
    let mut reach: Vec<Option<usize>> = vec![None; total + 1];
    let mut from: Vec<usize> = vec![0; total + 1];
    reach[0] = Some(usize::MAX);
    for (ci, c) in comps.iter().enumerate() {
        for s in (c.len()..=total).rev() {
            if reach[s].is_none() && reach[s - c.len()].is_some() {
                reach[s] = Some(ci);
                from[s] = s - c.len();
            }
        }
    }
    let best = (0..=total / 2).rev().find(|&s| reach[s].is_some()).unwrap();
    let mut in_b = vec![false; comps.len()];
    let mut s = best;
    while s > 0 {
        let ci = reach[s].unwrap();
        in_b[ci] = true;
        s = from[s];
    }
    let mut r = Vec::new();
    let mut b = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        if in_b[ci] { &mut b } else { &mut r }.extend(c);
    }
    r.sort_unstable();
    b.sort_unstable();
    let sep: Vec<usize> = (0..in_s.len()).filter(|&v| in_s[v]).collect();
    (SeparatorDecomposition { s: sep, r, b }, total - best)
}

fn acceptable(n: usize, s_len: usize, max_part: usize) -> bool {
    3 * max_part <= 2 * n && s_len * s_len <= 8 * n
}

/// A balanced separator: exhaustive minimum for small graphs (smallest
/// `|S|`, then smallest larger part, then lexicographically first),
/// otherwise BFS levels refined by a fundamental cycle.
pub fn find_separator(g: &PlanarGraph) -> Result<SeparatorDecomposition, PlanarError> {
    let dec = if g.n_vertices() <= EXHAUSTIVE_SEPARATOR_LIMIT {
        exhaustive(g)
    } else {
        level_cycle(g)
    }
    .ok_or(PlanarError::SeparatorNotFound)?;
    dec.check(g).map_err(PlanarError::InvariantBreach)?;
    Ok(dec)
}

fn exhaustive(g: &PlanarGraph) -> Option<SeparatorDecomposition> {
    let n = g.n_vertices();
    for size in 0..=n {
        let mut best: Option<(usize, SeparatorDecomposition)> = None;
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut in_s = vec![false; n];
            for &v in &combo {
                in_s[v] = true;
            }
            let (dec, max_part) = split(g, &in_s);
            if acceptable(n, size, max_part) && best.as_ref().is_none_or(|(m, _)| max_part < *m) {
                best = Some((max_part, dec));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        if let Some((_, dec)) = best {
            return Some(dec);
        }
    }
    None
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn level_cycle(g: &PlanarGraph) -> Option<SeparatorDecomposition> {
    let n = g.n_vertices();
    let all_alive = vec![true; n];
    let comps = g.components_within(&all_alive);
    let Some(big) = comps.iter().find(|c| 3 * c.len() > 2 * n) else {
        return Some(split(g, &vec![false; n]).0);
    };

    let root = big[0];
    let mut level = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut levels: Vec<Vec<usize>> = Vec::new();
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        if levels.len() <= level[x] {
            levels.push(Vec::new());
        }
        levels[level[x]].push(x);
        for &y in g.neighbors(x) {
            if level[y] == usize::MAX {
                level[y] = level[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let m = big.len();
    let depth = levels.len() as isize - 1;
    let size_at = |l: isize| if l < 0 || l > depth { 0 } else { levels[l as usize].len() };
    let mut cum = 0;
    let mut l1 = 0isize;
    for (l, lv) in levels.iter().enumerate() {
        cum += lv.len();
        if 2 * cum > m {
            l1 = l as isize;
            break;
        }
    }
    let l0 = (-1..=l1).rev().min_by_key(|&l| size_at(l) + 2 * (l1 - l) as usize).unwrap();
    let l2 = (l1 + 1..=depth + 1).min_by_key(|&l| size_at(l) + 2 * (l - l1 - 1) as usize).unwrap();

    let mut in_s = vec![false; n];
    for l in [l0, l2] {
        if (0..=depth).contains(&l) {
            for &v in &levels[l as usize] {
                in_s[v] = true;
            }
        }
    }
    let base_len = in_s.iter().filter(|&&x| x).count();
    let (dec, max_part) = split(g, &in_s);
    if acceptable(n, base_len, max_part) {
        return Some(dec);
    }

    // Middle levels, with levels <= l0 contracted into local vertex 0.
    let is_middle = |v: usize| {
        level[v] != usize::MAX && (level[v] as isize) > l0 && (level[v] as isize) < l2
    };
    let contracted = l0 >= 0;
    let mut global: Vec<usize> = Vec::new();
    if contracted {
        global.push(usize::MAX);
    }
    for l in (l0 + 1)..l2 {
        global.extend(&levels[l as usize]);
    }
    let mut local = vec![usize::MAX; n];
    for (i, &v) in global.iter().enumerate() {
        if v != usize::MAX {
            local[v] = i;
        }
    }
    let k = global.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut tree_parent = vec![usize::MAX; k];
    for (i, &v) in global.iter().enumerate() {
        if v == usize::MAX {
            continue;
        }
        for &y in g.neighbors(v) {
            if is_middle(y) {
                adj[i].push(local[y]);
            }
        }
        if contracted && level[v] as isize == l0 + 1 {
            adj[i].push(0);
            adj[0].push(i);
            tree_parent[i] = 0;
        } else if v != root {
            tree_parent[i] = local[parent[v]];
        }
    }
    let tree_root = if contracted { 0 } else { local[root] };
    let mut depth_of = vec![0usize; k];
    for (i, &v) in global.iter().enumerate() {
        if v != usize::MAX {
            depth_of[i] = (level[v] as isize - l0 - 1) as usize + usize::from(contracted);
        }
    }
    let embedding = embed(&adj)?;

    let mut candidates: BTreeSet<(usize, usize)> = BTreeSet::new();
    for face in embedding.faces() {
        let mut vs = face.clone();
        vs.sort_unstable();
        vs.dedup();
        for (i, &u) in vs.iter().enumerate() {
            for &w in &vs[i + 1..] {
                if tree_parent[u] != w && tree_parent[w] != u {
                    candidates.insert((u, w));
                }
            }
        }
    }

    let mut best: Option<(usize, usize, SeparatorDecomposition)> = None;
    for (u, w) in candidates {
        let mut cyc = in_s.clone();
        let (mut a, mut b) = (u, w);
        let mark = |x: usize, cyc: &mut Vec<bool>| {
            if global[x] != usize::MAX {
                cyc[global[x]] = true;
            }
        };
        mark(a, &mut cyc);
        mark(b, &mut cyc);
        while a != b {
            if depth_of[a] >= depth_of[b] {
                a = tree_parent[a];
                mark(a, &mut cyc);
            } else {
                b = tree_parent[b];
                mark(b, &mut cyc);
            }
        }
        let s_len = cyc.iter().filter(|&&x| x).count();
        let (dec, max_part) = split(g, &cyc);
        if acceptable(n, s_len, max_part)
            && best.as_ref().is_none_or(|(bm, bs, _)| (max_part, s_len) < (*bm, *bs))
        {
            best = Some((max_part, s_len, dec));
        }
    }
    debug_assert!(tree_parent[tree_root] == usize::MAX);
    best.map(|(_, _, d)| d)
}
