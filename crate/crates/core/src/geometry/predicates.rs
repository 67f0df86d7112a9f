//! Exact orientation and in-circle signs on integer coordinates.
//!
//! Coordinates are bounded by [`COORD_LIMIT`] so every determinant fits in
//! `i128` without overflow. Predicates on circle intersection points (which
//! involve a square root) use `BigInt` and the sign rules for `a + b*sqrt(q)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Absolute bound on input coordinates.
pub const COORD_LIMIT: i64 = 1 << 20;

pub type Pt = (i64, i64);

/// Twice the signed area of `(a, b, c)`: positive iff counter-clockwise.
pub fn orient2d(a: Pt, b: Pt, c: Pt) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    let (bx, by) = (b.0 as i128, b.1 as i128);
    let (cx, cy) = (c.0 as i128, c.1 as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// In-circle determinant: for counter-clockwise `(a, b, c)` it is positive
/// iff `d` lies strictly inside their circumcircle, zero iff on it.
pub fn incircle(a: Pt, b: Pt, c: Pt, d: Pt) -> i128 {
    let row = |p: Pt| {
        let x = (p.0 - d.0) as i128;
        let y = (p.1 - d.1) as i128;
        (x, y, x * x + y * y)
    };
    let (ax, ay, al) = row(a);
    let (bx, by, bl) = row(b);
    let (cx, cy, cl) = row(c);
    ax * (by * cl - bl * cy) - ay * (bx * cl - bl * cx) + al * (bx * cy - by * cx)
}

/// Position of `d` relative to the circle through `a, b, c` (any orientation,
/// not collinear): `Greater` inside, `Equal` on, `Less` outside.
pub fn in_circumcircle(a: Pt, b: Pt, c: Pt, d: Pt) -> Ordering {
    let o = orient2d(a, b, c);
    debug_assert!(o != 0);
    let s = incircle(a, b, c, d);
    if o > 0 { s.cmp(&0) } else { 0.cmp(&s) }
}

/// Position of `d` relative to the circle with diameter `pq`.
pub fn in_diametral_circle(p: Pt, q: Pt, d: Pt) -> Ordering {
    let dot = (p.0 - d.0) as i128 * (q.0 - d.0) as i128 + (p.1 - d.1) as i128 * (q.1 - d.1) as i128;
    0.cmp(&dot)
}

pub fn squared_distance(a: Pt, b: Pt) -> i128 {
    let dx = (a.0 - b.0) as i128;
    let dy = (a.1 - b.1) as i128;
    dx * dx + dy * dy
}

/// Exact sign of `alpha + beta * sqrt(q)` for `q >= 0`.
pub fn sign_with_sqrt(alpha: &BigInt, beta: &BigInt, q: &BigInt) -> Ordering {
    debug_assert!(!q.is_negative());
    let sa = alpha.sign_ord();
    let sb = if q.is_zero() { Ordering::Equal } else { beta.sign_ord() };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // opposite signs: compare magnitudes squared
    let lhs = alpha * alpha;
    let rhs = beta * beta * q;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ord(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_signs() {
        assert!(orient2d((0, 0), (1, 0), (0, 1)) > 0);
        assert!(orient2d((0, 0), (0, 1), (1, 0)) < 0);
        assert_eq!(orient2d((0, 0), (1, 1), (2, 2)), 0);
    }

    #[test]
    fn incircle_signs() {
        let (a, b, c) = ((0, 0), (4, 0), (0, 4));
        assert_eq!(in_circumcircle(a, b, c, (1, 1)), Ordering::Greater);
        assert_eq!(in_circumcircle(a, c, b, (1, 1)), Ordering::Greater);
        assert_eq!(in_circumcircle(a, b, c, (4, 4)), Ordering::Equal);
        assert_eq!(in_circumcircle(a, b, c, (5, 5)), Ordering::Less);
    }

    #[test]
    fn incircle_extreme_coordinates_do_not_overflow() {
        let m = COORD_LIMIT;
        let (a, b, c) = ((-m, -m), (m, -m), (m, m));
        assert_eq!(in_circumcircle(a, b, c, (-m, m)), Ordering::Equal);
        assert_eq!(in_circumcircle(a, b, c, (0, 0)), Ordering::Greater);
    }

    #[test]
    fn diametral() {
        assert_eq!(in_diametral_circle((0, 0), (4, 0), (2, 1)), Ordering::Greater);
        assert_eq!(in_diametral_circle((0, 0), (4, 0), (2, 2)), Ordering::Equal);
        assert_eq!(in_diametral_circle((0, 0), (4, 0), (2, 3)), Ordering::Less);
    }

    #[test]
    fn sqrt_sign_against_floats() {
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                for q in 0i64..=9 {
                    let exact = sign_with_sqrt(&a.into(), &b.into(), &q.into());
                    let approx = a as f64 + b as f64 * (q as f64).sqrt();
                    let expected = if approx.abs() < 1e-9 {
                        Ordering::Equal
                    } else if approx > 0.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                    assert_eq!(exact, expected, "{a} + {b} sqrt({q})");
                }
            }
        }
    }
}
