//! Seeded random instances in general position, regenerated on degeneracy
//! up to a retry budget.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{build_region_hypergraph, Disc, DiscFamily, GeometryError, PointSet};

/// `n` points with coordinates in `0..bound`, no three collinear and no
/// four cocircular.
pub fn random_point_set<R: Rng>(
    n: usize,
    bound: i64,
    rng: &mut R,
    retries: usize,
) -> Result<PointSet, GeometryError> {
    for _ in 0..retries.max(1) {
        let mut pts = Vec::with_capacity(n);
        while pts.len() < n {
            let p = (rng.gen_range(0..bound), rng.gen_range(0..bound));
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let set = PointSet::new(pts)?;
        if set.collinear_triple().is_none() && set.cocircular_quadruple().is_none() {
            return Ok(set);
        }
    }
    Err(GeometryError::RetriesExhausted(retries))
}

/// `n` points in convex position on the parabola `y = x^2`, `x` drawn from
/// `-bound..bound`, with no four cocircular.
pub fn random_convex_points<R: Rng>(
    n: usize,
    bound: i64,
    rng: &mut R,
    retries: usize,
) -> Result<PointSet, GeometryError> {
    let xs: Vec<i64> = (-bound..bound).collect();
    for _ in 0..retries.max(1) {
        let pts: Vec<(i64, i64)> = xs
            .choose_multiple(rng, n)
            .map(|&x| (x, x * x))
            .collect();
        let set = PointSet::new(pts)?;
        if set.collinear_triple().is_none() && set.cocircular_quadruple().is_none() {
            return Ok(set);
        }
    }
    Err(GeometryError::RetriesExhausted(retries))
}

/// `n` discs with centers in `0..bound` and squared radii in `1..=max_r2`,
/// accepted only when the region hypergraph constructor accepts them (no
/// tangencies, no three boundaries through one point).
pub fn random_disc_family<R: Rng>(
    n: usize,
    bound: i64,
    max_r2: i64,
    rng: &mut R,
    retries: usize,
) -> Result<DiscFamily, GeometryError> {
    for _ in 0..retries.max(1) {
        let discs: Vec<Disc> = (0..n)
            .map(|_| Disc {
                cx: rng.gen_range(0..bound),
                cy: rng.gen_range(0..bound),
                r2: rng.gen_range(1..=max_r2),
            })
            .collect();
        let Ok(family) = DiscFamily::new(discs) else {
            continue;
        };
        if build_region_hypergraph(&family).is_ok() {
            return Ok(family);
        }
    }
    Err(GeometryError::RetriesExhausted(retries))
}
