use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::predicates::{in_circumcircle, in_diametral_circle, orient2d};
use super::{GeometryError, PointSet};
use crate::hypergraph::Hypergraph;

/// Hypergraph of all nonempty subsets of `points` cut off by closed discs.
///
/// Candidate boundary circles are the circumcircles of all triples and the
/// diametral circles of all pairs. For each candidate, the points strictly
/// inside together with any subset of the points on the circle form a cut.
/// Lifting to the paraboloid shows circumcircles of triples already reach
/// every cut when no three points are collinear and no four cocircular.
pub fn build_disc_hypergraph(points: &PointSet) -> Result<Hypergraph, GeometryError> {
    if let Some(t) = points.collinear_triple() {
        return Err(GeometryError::Collinear(t));
    }
    if let Some(q) = points.cocircular_quadruple() {
        return Err(GeometryError::Cocircular(q));
    }
    let p = points.points();
    let n = p.len();
    let mut family: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let mut emit = |inside: &[usize], on: &[usize]| {
        for mask in 0u32..(1 << on.len()) {
            let mut e = inside.to_vec();
            e.extend(
                on.iter()
                    .enumerate()
                    .filter(|(bit, _)| mask & (1 << bit) != 0)
                    .map(|(_, &v)| v),
            );
            if e.is_empty() {
                continue;
            }
            e.sort_unstable();
            family.insert((e.len(), e));
        }
    };

    for v in 0..n {
        emit(&[v], &[]);
    }
    if n > 0 {
        emit(&(0..n).collect::<Vec<_>>(), &[]);
    }
    for a in 0..n {
        for b in a + 1..n {
            let mut inside = Vec::new();
            let mut on = vec![a, b];
            for r in 0..n {
                if r == a || r == b {
                    continue;
                }
                match in_diametral_circle(p[a], p[b], p[r]) {
                    Ordering::Greater => inside.push(r),
                    Ordering::Equal => on.push(r),
                    Ordering::Less => {}
                }
            }
            emit(&inside, &on);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                debug_assert!(orient2d(p[a], p[b], p[c]) != 0);
                let inside: Vec<usize> = (0..n)
                    .filter(|&r| {
                        r != a
                            && r != b
                            && r != c
                            && in_circumcircle(p[a], p[b], p[c], p[r]) == Ordering::Greater
                    })
                    .collect();
                emit(&inside, &[a, b, c]);
            }
        }
    }
    Ok(Hypergraph::from_sorted_unique(
        n,
        family.into_iter().map(|(_, e)| e).collect(),
    ))
}
