use std::collections::BTreeSet;

use super::predicates::orient2d;
use super::{GeometryError, PointSet};
use crate::hypergraph::Hypergraph;

/// Hypergraph of all nonempty subsets cut off by closed halfplanes.
///
/// Every such subset equals the open side of a line through two input
/// points together with some subset of those two points, so enumerating
/// ordered pairs is exact under the no-three-collinear assumption.
pub fn build_halfplane_hypergraph(points: &PointSet) -> Result<Hypergraph, GeometryError> {
    if let Some(t) = points.collinear_triple() {
        return Err(GeometryError::Collinear(t));
    }
    let p = points.points();
    let n = p.len();
    let mut family: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    if n == 1 {
        family.insert((1, vec![0]));
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let left: Vec<usize> = (0..n)
                .filter(|&r| r != a && r != b && orient2d(p[a], p[b], p[r]) > 0)
                .collect();
            for mask in 0..4u8 {
                let mut e = left.clone();
                if mask & 1 != 0 {
                    e.push(a);
                }
                if mask & 2 != 0 {
                    e.push(b);
                }
                if e.is_empty() {
                    continue;
                }
                e.sort_unstable();
                family.insert((e.len(), e));
            }
        }
    }
    Ok(Hypergraph::from_sorted_unique(
        n,
        family.into_iter().map(|(_, e)| e).collect(),
    ))
}

/// True if some point lies inside the triangle of three others, i.e. the set
/// is not in convex position. Such a 4-point configuration induces `K_4` in
/// the halfplane hypergraph, so 3 colors do not suffice hereditarily.
pub fn has_point_inside_triangle(points: &PointSet) -> bool {
    let p = points.points();
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let o = orient2d(p[a], p[b], p[c]).signum();
                if o == 0 {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if orient2d(p[a], p[b], p[d]).signum() == o
                        && orient2d(p[b], p[c], p[d]).signum() == o
                        && orient2d(p[c], p[a], p[d]).signum() == o
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_point_set;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ps(p: &[(i64, i64)]) -> PointSet {
        PointSet::new(p.to_vec()).unwrap()
    }

    /// Independent oracle: prefixes of the order induced by many integer
    /// projection directions. Every prefix is a halfplane cut.
    fn sampled_cuts(points: &PointSet) -> BTreeSet<Vec<usize>> {
        let p = points.points();
        let mut out = BTreeSet::new();
        for dx in -40i64..=40 {
            for dy in -40i64..=40 {
                if dx == 0 && dy == 0 {
                    continue;
                }
                let mut order: Vec<(i128, usize)> = p
                    .iter()
                    .enumerate()
                    .map(|(i, &(x, y))| (dx as i128 * x as i128 + dy as i128 * y as i128, i))
                    .collect();
                order.sort();
                for cut in 1..=order.len() {
                    // only strict gaps give a realizable prefix
                    if cut < order.len() && order[cut - 1].0 == order[cut].0 {
                        continue;
                    }
                    let mut e: Vec<usize> = order[..cut].iter().map(|&(_, i)| i).collect();
                    e.sort_unstable();
                    out.insert(e);
                }
            }
        }
        out
    }

    #[test]
    fn triangle_gives_all_seven_subsets() {
        let h = build_halfplane_hypergraph(&ps(&[(0, 0), (10, 0), (3, 7)])).unwrap();
        assert_eq!(h.n_edges(), 7);
        assert_eq!(h.edge_set(), sampled_cuts(&ps(&[(0, 0), (10, 0), (3, 7)])));
    }

    #[test]
    fn single_point() {
        let h = build_halfplane_hypergraph(&ps(&[(5, 5)])).unwrap();
        assert_eq!(h.edges(), &[vec![0]]);
    }

    #[test]
    fn convex_quadrilateral_delaunay_is_four_cycle() {
        let h = build_halfplane_hypergraph(&ps(&[(0, 0), (10, 1), (11, 9), (1, 10)])).unwrap();
        let mut d = h.delaunay_graph().edges;
        d.sort();
        assert_eq!(d, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_collinear() {
        assert!(matches!(
            build_halfplane_hypergraph(&ps(&[(0, 0), (1, 1), (2, 2)])),
            Err(GeometryError::Collinear(_))
        ));
    }

    #[test]
    fn interior_point_is_never_a_singleton() {
        let h = build_halfplane_hypergraph(&ps(&[(0, 0), (12, 0), (5, 11), (5, 3)])).unwrap();
        assert!(!h.edge_set().contains(&vec![3]));
        // triangle plus interior point: every pair is a cut (K_4)
        assert_eq!(h.delaunay_graph().edges.len(), 6);
        assert!(has_point_inside_triangle(&ps(&[(0, 0), (12, 0), (5, 11), (5, 3)])));
        assert!(!has_point_inside_triangle(&ps(&[(0, 0), (10, 1), (11, 9), (1, 10)])));
    }

    #[test]
    fn matches_sampled_directions_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(2..8);
            let p = random_point_set(n, 30, &mut rng, 100).unwrap();
            let h = build_halfplane_hypergraph(&p).unwrap();
            let sampled = sampled_cuts(&p);
            // soundness: every sampled cut is present
            assert!(sampled.is_subset(&h.edge_set()));
            // the sampled directions are fine enough to realize every cut here
            assert_eq!(sampled, h.edge_set());
        }
    }
}
