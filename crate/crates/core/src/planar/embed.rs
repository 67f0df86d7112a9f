//! Planarity testing and combinatorial embedding.
//!
//! Each biconnected block is embedded by the Demoucron-Malgrange-Pertuiset
//! face-insertion method; block rotations are concatenated at cut vertices.

use std::collections::{BTreeSet, HashSet};

/// A rotation system: for every vertex, its neighbors in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn n_vertices(&self) -> usize {
        self.rotation.len()
    }

    /// Faces as cyclic vertex sequences. Arriving at `v` from `u`, the walk
    /// continues to the successor of `u` in the rotation at `v`. Isolated
    /// vertices contribute no face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.rotation.len();
        let mut pos: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); n];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                pos[v].insert(u, i);
            }
        }
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for u0 in 0..n {
            for &v0 in &self.rotation[u0] {
                if seen.contains(&(u0, v0)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut v) = (u0, v0);
                while seen.insert((u, v)) {
                    face.push(u);
                    let rot = &self.rotation[v];
                    let w = rot[(pos[v][&u] + 1) % rot.len()];
                    u = v;
                    v = w;
                }
                faces.push(face);
            }
        }
        faces
    }
}

fn normalized_edges(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut set = BTreeSet::new();
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if u != v {
                set.insert((u.min(v), u.max(v)));
            }
        }
    }
    set.into_iter().collect()
}

/// A planar embedding of the simple graph underlying `adj`, or `None` if it
/// is not planar. Self-loops and repeated neighbors are ignored.
pub fn embed(adj: &[Vec<usize>]) -> Option<Embedding> {
    let n = adj.len();
    let edges = normalized_edges(adj);
    if n >= 3 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(n, &edges) {
        let local = embed_block(&block)?;
        for (v, rot) in local {
            rotation[v].extend(rot);
        }
    }
    Some(Embedding { rotation })
}

pub fn is_planar(adj: &[Vec<usize>]) -> bool {
    embed(adj).is_some()
}

/// Edge sets of the biconnected blocks (bridges are blocks of one edge).
fn biconnected_blocks(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge id, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let (w, id) = adj[v][*idx];
                *idx += 1;
                if id == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(id);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, id, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(id);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(id) = edge_stack.pop() {
                            block.push(edges[id]);
                            if id == pe {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Rotation at each vertex of one biconnected block, in global ids.
fn embed_block(block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |g: usize| verts.binary_search(&g).unwrap();
    let b = verts.len();
    if block.len() == 1 {
        let (u, v) = block[0];
        return Some(vec![(u, vec![v]), (v, vec![u])]);
    }
    let mut adj = vec![Vec::new(); b];
    for &(u, v) in block {
        adj[local(u)].push(local(v));
        adj[local(v)].push(local(u));
    }
    let faces = dmp(&adj)?;
    let mut succ: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); b];
    for f in &faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
            succ[v].insert(u, w);
        }
    }
    let mut out = Vec::with_capacity(b);
    for v in 0..b {
        let start = adj[v][0];
        let mut rot = vec![verts[start]];
        let mut cur = succ[v][&start];
        while cur != start {
            rot.push(verts[cur]);
            cur = succ[v][&cur];
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((verts[v], rot));
    }
    Some(out)
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

struct Fragment {
    attachments: Vec<usize>,
    /// A single edge between embedded vertices, or a component of
    /// unembedded vertices.
    edge: Option<(usize, usize)>,
    component: Vec<usize>,
}

/// Face cycles of a planar embedding of a biconnected graph with at least
/// three vertices, consistently oriented, or `None` if nonplanar.
fn dmp(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let b = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut in_h = vec![false; b];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();

    let cycle = initial_cycle(adj);
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < m {
        let fragments = fragments(adj, &in_h, &h_edges);
        let face_sets: Vec<HashSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut pick: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| face_sets[f].contains(a)))
                .take(2)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    pick = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if pick.is_none() {
                        pick = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = pick.expect("unembedded edges imply a fragment");
        let path = fragment_path(adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

fn initial_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // BFS from u to v avoiding the edge uv; the path closes a cycle
    let u = 0;
    let v = adj[0][0];
    let mut parent = vec![usize::MAX; adj.len()];
    parent[u] = u;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if parent[y] != usize::MAX || (x == u && y == v) {
                continue;
            }
            parent[y] = x;
            queue.push_back(y);
        }
    }
    let mut cycle = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        cycle.push(cur);
    }
    cycle
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let b = adj.len();
    let mut out = Vec::new();
    for u in 0..b {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment { attachments: vec![u, v], edge: Some((u, v)), component: Vec::new() });
            }
        }
    }
    let mut seen = vec![false; b];
    for s in 0..b {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut component = vec![s];
        let mut attachments = BTreeSet::new();
        let mut i = 0;
        while i < component.len() {
            let x = component[i];
            i += 1;
            for &y in &adj[x] {
                if in_h[y] {
                    attachments.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    component.push(y);
                }
            }
        }
        out.push(Fragment { attachments: attachments.into_iter().collect(), edge: None, component });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.edge {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let start = *frag
        .component
        .iter()
        .find(|&&x| adj[x].contains(&a))
        .expect("attachment has a neighbor in the fragment");
    let mut parent = std::collections::HashMap::from([(start, start)]);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&bv) = adj[x].iter().find(|&&y| in_h[y] && y != a) {
            let mut path = vec![bv, x];
            let mut cur = x;
            while cur != start {
                cur = parent[&cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if !in_h[y] && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("a biconnected block gives every fragment two attachments")
}

/// Splits an oriented face cycle by a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let i = face.iter().position(|&x| x == path[0]).unwrap();
    let j = face.iter().position(|&x| x == *path.last().unwrap()).unwrap();
    let inner = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let mut f1 = walk(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
