use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::predicates::{sign_with_sqrt, squared_distance};
use super::{DiscFamily, GeometryError};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairRelation {
    Crossing,
    /// The first disc lies strictly inside the second.
    FirstInside,
    SecondInside,
    Separate,
}

/// Relation of two distinct circles from integer data: with
/// `e = |c_i - c_j|^2 - R_i - R_j` the circles cross iff `e^2 < 4 R_i R_j`,
/// touch iff equal.
fn relation(family: &DiscFamily, i: usize, j: usize) -> Result<PairRelation, GeometryError> {
    let (a, b) = (family.discs()[i], family.discs()[j]);
    let d2 = squared_distance(a.center(), b.center());
    let (ri, rj) = (a.r2 as i128, b.r2 as i128);
    let e = d2 - ri - rj;
    let lhs = BigInt::from(e) * BigInt::from(e);
    let rhs = BigInt::from(4) * BigInt::from(ri) * BigInt::from(rj);
    Ok(match lhs.cmp(&rhs) {
        Ordering::Less => PairRelation::Crossing,
        Ordering::Equal => return Err(GeometryError::Tangent(i, j)),
        Ordering::Greater if e > 0 => PairRelation::Separate,
        Ordering::Greater if ri < rj => PairRelation::FirstInside,
        Ordering::Greater => PairRelation::SecondInside,
    })
}

/// For crossing circles `i`, `j` and another disc `k`, the position of each
/// of the two boundary intersection points relative to disc `k`
/// (`Greater` = strictly inside).
///
/// With `d = c_j - c_i`, `D = |d|^2`, `A = R_i - R_j + D`, `Q = 4 R_i D - A^2`
/// the points are `c_i + (A d +- sqrt(Q) d_perp) / (2D)`.
fn crossing_points_vs_disc(family: &DiscFamily, i: usize, j: usize, k: usize) -> [Ordering; 2] {
    let ds = family.discs();
    let big = |v: i64| BigInt::from(v);
    let (dx, dy) = (big(ds[j].cx - ds[i].cx), big(ds[j].cy - ds[i].cy));
    let d2 = &dx * &dx + &dy * &dy;
    let a = big(ds[i].r2) - big(ds[j].r2) + &d2;
    let q = BigInt::from(4) * big(ds[i].r2) * &d2 - &a * &a;
    let (wx, wy) = (big(ds[i].cx - ds[k].cx), big(ds[i].cy - ds[k].cy));
    let two_d = BigInt::from(2) * &d2;
    let mx = &two_d * &wx + &a * &dx;
    let my = &two_d * &wy + &a * &dy;
    let u = &mx * &mx + &my * &my;
    // perpendicular (-dy, dx)
    let v = -(&mx * &dy) + &my * &dx;
    let alpha = BigInt::from(4) * &d2 * &d2 * big(ds[k].r2) - u - &q * &d2;
    let beta = BigInt::from(2) * v;
    [
        sign_with_sqrt(&alpha, &(-&beta), &q),
        sign_with_sqrt(&alpha, &beta, &q),
    ]
}

/// Hypergraph on a disc family whose hyperedges are the coverage sets
/// `{discs containing p}` over all points `p` of the plane.
///
/// Every face of the arrangement either touches a crossing point of two
/// circles, where the four local quadrants realize `base + T` for every
/// `T` of the two crossing discs, or is bounded by a circle that crosses
/// nothing, where the coverage is the set of discs strictly containing that
/// circle, with or without the circle's own disc. Boundary points add no
/// new sets in general position. Disc centers are recorded as well.
pub fn build_region_hypergraph(family: &DiscFamily) -> Result<Hypergraph, GeometryError> {
    let n = family.len();
    let mut rel = vec![vec![PairRelation::Separate; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let r = relation(family, i, j)?;
            rel[i][j] = r;
            rel[j][i] = match r {
                PairRelation::FirstInside => PairRelation::SecondInside,
                PairRelation::SecondInside => PairRelation::FirstInside,
                other => other,
            };
        }
    }

    let mut family_sets: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let mut emit = |mut e: Vec<usize>| {
        if !e.is_empty() {
            e.sort_unstable();
            family_sets.insert((e.len(), e));
        }
    };

    for i in 0..n {
        emit(family.coverage(family.discs()[i].center()));
    }

    for i in 0..n {
        for j in i + 1..n {
            if rel[i][j] != PairRelation::Crossing {
                continue;
            }
            let mut bases = [Vec::new(), Vec::new()];
            for k in (0..n).filter(|&k| k != i && k != j) {
                let pos = crossing_points_vs_disc(family, i, j, k);
                for (base, o) in bases.iter_mut().zip(pos) {
                    match o {
                        Ordering::Greater => base.push(k),
                        Ordering::Equal => {
                            return Err(GeometryError::ConcurrentBoundaries([i, j, k]))
                        }
                        Ordering::Less => {}
                    }
                }
            }
            for base in bases {
                for extra in [&[][..], &[i], &[j], &[i, j]] {
                    let mut e = base.clone();
                    e.extend_from_slice(extra);
                    emit(e);
                }
            }
        }
    }

    for i in 0..n {
        if (0..n).any(|j| j != i && rel[i][j] == PairRelation::Crossing) {
            continue;
        }
        let containing: Vec<usize> = (0..n)
            .filter(|&k| k != i && rel[i][k] == PairRelation::FirstInside)
            .collect();
        let mut with_self = containing.clone();
        with_self.push(i);
        emit(with_self);
        emit(containing);
    }

    Ok(Hypergraph::from_sorted_unique(
        n,
        family_sets.into_iter().map(|(_, e)| e).collect(),
    ))
}
