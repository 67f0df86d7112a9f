//! Discrete intervals: divide-and-conquer conflict-free list coloring, the
//! list families on which unique-maximum list coloring fails, and an
//! exhaustive list-coloring search.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::coloring::{Color, ColorListFamily, Coloring, ColoringError, Mode};
use crate::hypergraph::Hypergraph;
use crate::oracle::search_from_lists;

/// Largest product of list sizes the exhaustive search accepts.
pub const BRUTE_FORCE_GUARD: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntervalError {
    #[error(transparent)]
    Lists(#[from] ColoringError),
    #[error("{lists} lists for {n} vertices")]
    ListCount { lists: usize, n: usize },
    #[error("list of vertex {vertex} has {have} colors, needs {need}")]
    ListTooSmall { vertex: usize, have: usize, need: usize },
    #[error("sizes must be positive and non-increasing")]
    BadSizes,
    #[error("sum of 2^-x_i is {numer}/{denom}, below 1")]
    PremiseViolated { numer: String, denom: String },
    #[error("search space exceeds the guard of {guard} assignments")]
    GuardExceeded { guard: u64 },
}

/// `floor(log2 n) + 1` for `n >= 1`.
pub fn interval_list_size(n: usize) -> usize {
    (usize::BITS - n.max(1).leading_zeros()) as usize
}

/// Conflict-free coloring of `H_n` from lists: the lower median of each
/// segment takes the smallest color of its list, that color is struck
/// within the segment, and both halves recurse. A vertex at depth `d` has
/// lost at most `d <= floor(log2 n)` colors.
pub fn cf_color_intervals_median(n: usize, lists: &ColorListFamily) -> Result<Coloring, IntervalError> {
    if lists.len() != n {
        return Err(IntervalError::ListCount { lists: lists.len(), n });
    }
    let need = interval_list_size(n);
    if let Some(v) = (0..n).find(|&v| lists.list(v).len() < need) {
        return Err(IntervalError::ListTooSmall { vertex: v, have: lists.list(v).len(), need });
    }
    let mut remaining: Vec<Vec<Color>> = lists.lists().to_vec();
    let mut colors: Vec<Color> = vec![0; n];
    let mut stack = vec![(0usize, n)];
    while let Some((lo, hi)) = stack.pop() {
        if lo >= hi {
            continue;
        }
        let mid = lo + (hi - lo - 1) / 2;
        let c = remaining[mid][0];
        colors[mid] = c;
        for v in (lo..hi).filter(|&v| v != mid) {
            remaining[v].retain(|&x| x != c);
        }
        stack.push((mid + 1, hi));
        stack.push((lo, mid));
    }
    Ok(Coloring::new(colors)?)
}

/// Sizes `x_1 >= ... >= x_n` with `sum 2^-x_i >= 1`, and lists
/// `L_i = {x_1 + 1 - x_i, ..., x_1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightnessInstance {
    pub sizes: Vec<usize>,
    pub lists: ColorListFamily,
}

pub fn make_tightness_instance(sizes: &[usize]) -> Result<TightnessInstance, IntervalError> {
    if sizes.is_empty() || sizes.contains(&0) || sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(IntervalError::BadSizes);
    }
    let x1 = sizes[0];
    // sum 2^(x1 - x_i) >= 2^x1
    let numer: BigUint = sizes.iter().map(|&x| BigUint::one() << (x1 - x)).sum();
    let denom = BigUint::one() << x1;
    if numer < denom {
        return Err(IntervalError::PremiseViolated { numer: numer.to_string(), denom: denom.to_string() });
    }
    let lists = sizes
        .iter()
        .map(|&x| ((x1 + 1 - x) as Color..=x1 as Color).collect())
        .collect();
    Ok(TightnessInstance { sizes: sizes.to_vec(), lists: ColorListFamily::new(lists)? })
}

/// Lexicographically first unique-maximum coloring of `h` from `lists`, if
/// any, by exhaustive backtracking.
pub fn brute_force_um_list_colorable(
    h: &Hypergraph,
    lists: &ColorListFamily,
) -> Result<Option<Coloring>, IntervalError> {
    lists.check_aligned(h)?;
    let product = lists
        .lists()
        .iter()
        .try_fold(1u64, |acc, l| acc.checked_mul(l.len() as u64).filter(|&p| p <= BRUTE_FORCE_GUARD));
    if product.is_none() {
        return Err(IntervalError::GuardExceeded { guard: BRUTE_FORCE_GUARD });
    }
    Ok(search_from_lists(h, lists.lists(), Mode::Um))
}
