use rand::Rng;
use serde::{Deserialize, Serialize};

use super::embed::embed;
use super::PlanarError;

/// A simple undirected planar graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct PlanarGraph {
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl TryFrom<GraphJson> for PlanarGraph {
    type Error = PlanarError;

    fn try_from(g: GraphJson) -> Result<Self, Self::Error> {
        if g.adj.len() != g.n {
            return Err(PlanarError::AdjacencyLength { n: g.n, rows: g.adj.len() });
        }
        PlanarGraph::new(g.adj)
    }
}

impl From<PlanarGraph> for GraphJson {
    fn from(g: PlanarGraph) -> Self {
        GraphJson { n: g.adj.len(), adj: g.adj }
    }
}

impl PlanarGraph {
    /// Validates symmetry, simplicity and planarity.
    pub fn new(mut adj: Vec<Vec<usize>>) -> Result<Self, PlanarError> {
        let n = adj.len();
        for (u, nb) in adj.iter_mut().enumerate() {
            nb.sort_unstable();
            if let Some(&v) = nb.iter().find(|&&v| v >= n) {
                return Err(PlanarError::VertexOutOfRange { vertex: v, n });
            }
            if nb.contains(&u) {
                return Err(PlanarError::SelfLoop(u));
            }
            if nb.windows(2).any(|w| w[0] == w[1]) {
                return Err(PlanarError::ParallelEdge(u));
            }
        }
        for u in 0..n {
            for &v in &adj[u] {
                if adj[v].binary_search(&u).is_err() {
                    return Err(PlanarError::Asymmetric(u, v));
                }
            }
        }
        if embed(&adj).is_none() {
            return Err(PlanarError::NonPlanar);
        }
        Ok(PlanarGraph { adj })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, PlanarError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(PlanarError::VertexOutOfRange { vertex: u.max(v), n });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        PlanarGraph::new(adj)
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n_edges());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `vertices` (sorted ascending), relabelled
    /// `0..len` in that order. Planarity is inherited.
    pub fn induced(&self, vertices: &[usize]) -> PlanarGraph {
        let mut local = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&u| local[u] != usize::MAX)
                    .map(|&u| local[u])
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        PlanarGraph { adj }
    }

    /// `rows x cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> PlanarGraph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Self::unchecked(rows * cols, &edges)
    }

    /// The star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> PlanarGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        Self::unchecked(n, &edges)
    }

    pub fn path(n: usize) -> PlanarGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Self::unchecked(n, &edges)
    }

    /// A random subgraph of a triangulated grid: vertices fill a
    /// near-square grid row by row, each cell gets one random diagonal, and
    /// every edge is kept with probability `keep`.
    pub fn random<R: Rng>(n: usize, keep: f64, rng: &mut R) -> PlanarGraph {
        let cols = (n as f64).sqrt().ceil().max(1.0) as usize;
        let at = |r: usize, c: usize| {
            let v = r * cols + c;
            (c < cols && v < n).then_some(v)
        };
        let mut edges = Vec::new();
        let rows = n.div_ceil(cols);
        for r in 0..rows {
            for c in 0..cols {
                let Some(v) = at(r, c) else { continue };
                let right = at(r, c + 1);
                let down = at(r + 1, c);
                let diag = at(r + 1, c + 1);
                edges.extend(right.map(|u| (v, u)));
                edges.extend(down.map(|u| (v, u)));
                if let (Some(rt), Some(dn), Some(dg)) = (right, down, diag) {
                    edges.push(if rng.gen_bool(0.5) { (v, dg) } else { (rt, dn) });
                }
            }
        }
        edges.retain(|_| rng.gen_bool(keep));
        Self::unchecked(n, &edges)
    }

    fn unchecked(n: usize, edges: &[(usize, usize)]) -> PlanarGraph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        PlanarGraph { adj }
    }

    /// Connected components of the subgraph on `alive` vertices, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if alive[y] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn validation() {
        assert!(matches!(PlanarGraph::new(vec![vec![1], vec![]]), Err(PlanarError::Asymmetric(0, 1))));
        assert!(matches!(PlanarGraph::new(vec![vec![0]]), Err(PlanarError::SelfLoop(0))));
        assert!(matches!(PlanarGraph::new(vec![vec![1, 1], vec![0, 0]]), Err(PlanarError::ParallelEdge(0))));
        let k5: Vec<Vec<usize>> = (0..5).map(|u| (0..5).filter(|&v| v != u).collect()).collect();
        assert!(matches!(PlanarGraph::new(k5), Err(PlanarError::NonPlanar)));
    }

    #[test]
    fn json_round_trip() {
        let g = PlanarGraph::star(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"adj":[[1,2,3],[0],[0],[0]]}"#);
        let back: PlanarGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<PlanarGraph>(r#"{"n":3,"adj":[[1],[0]]}"#).is_err());
    }

    #[test]
    fn generators_are_planar() {
        assert_eq!(PlanarGraph::grid(3, 3).n_edges(), 12);
        assert_eq!(PlanarGraph::star(5).n_edges(), 4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for n in 1..40 {
            let g = PlanarGraph::random(n, 0.8, &mut rng);
            assert_eq!(g.n_vertices(), n);
            assert!(PlanarGraph::new(g.adjacency().to_vec()).is_ok());
        }
    }

    #[test]
    fn induced_relabels() {
        let g = PlanarGraph::grid(2, 3);
        let sub = g.induced(&[0, 1, 4]);
        assert_eq!(sub.adjacency(), &[vec![1], vec![0, 2], vec![1]]);
    }
}
