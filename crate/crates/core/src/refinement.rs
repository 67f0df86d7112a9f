//! From a k-coloring to list coloring for refinement-closed notions
//! (proper and conflict-free): split the colors of all lists at random
//! among the k base classes, and let every vertex pick from the colors its
//! class received.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{verify, verify_from_lists, Color, ColorListFamily, Coloring, ColoringError, Mode};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_REDRAW_CAP: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RefinementError {
    #[error(transparent)]
    Lists(#[from] ColoringError),
    #[error("mode {0} is not closed under refinement")]
    UnsupportedMode(Mode),
    #[error("base coloring is not a valid {0} coloring")]
    InvalidBase(Mode),
    #[error("list of vertex {vertex} has {have} colors, needs {need}")]
    ListTooSmall { vertex: usize, have: usize, need: usize },
    #[error("no valid partition within {cap} draws")]
    RedrawCapExceeded { cap: u64, last: Box<PartitionWitness> },
    #[error("output failed verification")]
    InvariantBreach,
}

/// One draw: the class each color of the union went to, and the lists
/// restricted to the colors of each vertex's class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionWitness {
    pub base_coloring: Coloring,
    pub class_of_color: BTreeMap<Color, usize>,
    pub pruned_lists: Vec<Vec<Color>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementRun {
    pub coloring: Coloring,
    pub witness: PartitionWitness,
    /// Draws rejected before the accepted one.
    pub redraws: u64,
}

/// `floor(k ln n) + 1` for `k >= 2`; a single color for `k = 1`.
pub fn required_refinement_list_size(n: usize, k: usize) -> usize {
    if k < 2 || n < 2 {
        return 1;
    }
    (k as f64 * (n as f64).ln()).floor() as usize + 1
}

/// Union bound on the chance one draw leaves some list empty,
/// `n (1 - 1/k)^l`.
pub fn redraw_union_bound(n: usize, k: usize, list_size: usize) -> f64 {
    n as f64 * (1.0 - 1.0 / k as f64).powi(list_size as i32)
}

/// `C(x) != C(y)` implies `C'(x) != C'(y)` for all pairs.
pub fn is_refinement(c_prime: &Coloring, c: &Coloring) -> Result<bool, RefinementError> {
    if c_prime.len() != c.len() {
        return Err(ColoringError::SizeMismatch { expected: c.len(), got: c_prime.len() }.into());
    }
    // C' refines C iff each C'-class lies inside one C-class
    let mut class: BTreeMap<Color, Color> = BTreeMap::new();
    for (&cp, &base) in c_prime.colors().iter().zip(c.colors()) {
        if *class.entry(cp).or_insert(base) != base {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn choice_from_chromatic(
    h: &Hypergraph,
    base: &Coloring,
    lists: &ColorListFamily,
    mode: Mode,
    seed: u64,
) -> Result<RefinementRun, RefinementError> {
    choice_from_chromatic_with_cap(h, base, lists, mode, seed, DEFAULT_REDRAW_CAP)
}

/// Draw `t` uses the ChaCha8 stream `t` under `seed`, so every run replays
/// exactly. Each vertex takes the smallest color left in its pruned list.
pub fn choice_from_chromatic_with_cap(
    h: &Hypergraph,
    base: &Coloring,
    lists: &ColorListFamily,
    mode: Mode,
    seed: u64,
    cap: u64,
) -> Result<RefinementRun, RefinementError> {
    if mode == Mode::Um {
        return Err(RefinementError::UnsupportedMode(mode));
    }
    lists.check_aligned(h)?;
    if !verify(mode, h, base)?.is_valid() {
        return Err(RefinementError::InvalidBase(mode));
    }
    let n = h.n_vertices();
    let mut base_colors: Vec<Color> = base.colors().to_vec();
    base_colors.sort_unstable();
    base_colors.dedup();
    let k = base_colors.len();
    let class_of_vertex: Vec<usize> =
        base.colors().iter().map(|c| base_colors.binary_search(c).unwrap()).collect();
    let need = required_refinement_list_size(n, k);
    if let Some(v) = (0..n).find(|&v| lists.list(v).len() < need) {
        return Err(RefinementError::ListTooSmall { vertex: v, have: lists.list(v).len(), need });
    }

    let mut union: Vec<Color> = lists.lists().iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();

    let mut last = None;
    for attempt in 0..cap {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let class_of_color: BTreeMap<Color, usize> =
            union.iter().map(|&c| (c, rng.gen_range(0..k.max(1)))).collect();
        let pruned_lists: Vec<Vec<Color>> = (0..n)
            .map(|v| {
                lists.list(v).iter().copied().filter(|c| class_of_color[c] == class_of_vertex[v]).collect()
            })
            .collect();
        let ok = pruned_lists.iter().all(|l| !l.is_empty());
        let witness = PartitionWitness { base_coloring: base.clone(), class_of_color, pruned_lists };
        if ok {
            let coloring = Coloring::new(witness.pruned_lists.iter().map(|l| l[0]).collect())?;
            if !verify(mode, h, &coloring)?.is_valid() || !verify_from_lists(&coloring, lists)? {
                return Err(RefinementError::InvariantBreach);
            }
            return Ok(RefinementRun { coloring, witness, redraws: attempt });
        }
        last = Some(witness);
    }
    Err(RefinementError::RedrawCapExceeded {
        cap,
        last: Box::new(last.unwrap_or_else(|| PartitionWitness {
            base_coloring: base.clone(),
            class_of_color: BTreeMap::new(),
            pruned_lists: Vec::new(),
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_um;
    use crate::geometry::build_interval_hypergraph;
    use proptest::prelude::*;

    fn col(c: &[Color]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn refinement_examples() {
        assert!(is_refinement(&col(&[3, 3, 4]), &col(&[1, 1, 2])).unwrap());
        assert!(!is_refinement(&col(&[5, 5]), &col(&[1, 2])).unwrap());
        let c = col(&[2, 7, 2, 1]);
        assert!(is_refinement(&c, &c).unwrap());
        assert!(is_refinement(&col(&[1, 2]), &col(&[1, 2, 3])).is_err());
    }

    #[test]
    fn um_is_not_closed_under_refinement() {
        let h3 = build_interval_hypergraph(3).unwrap();
        let c = col(&[1, 2, 1]);
        let refined = col(&[2, 1, 2]);
        assert!(verify_um(&h3, &c).unwrap().is_valid());
        assert!(is_refinement(&refined, &c).unwrap());
        assert!(!verify_um(&h3, &refined).unwrap().is_valid());
    }

    #[test]
    fn h4_cf_with_three_classes() {
        let h4 = build_interval_hypergraph(4).unwrap();
        let base = col(&[1, 2, 1, 3]);
        assert!(verify(Mode::Cf, &h4, &base).unwrap().is_valid());
        assert_eq!(required_refinement_list_size(4, 3), 5);
        let lists = ColorListFamily::uniform(4, 5);
        let run = choice_from_chromatic(&h4, &base, &lists, Mode::Cf, 42).unwrap();
        assert!(verify(Mode::Cf, &h4, &run.coloring).unwrap().is_valid());
        assert!(is_refinement(&run.coloring, &base).unwrap());
        let again = choice_from_chromatic(&h4, &base, &lists, Mode::Cf, 42).unwrap();
        assert_eq!(run, again);
    }

    #[test]
    fn edgeless_with_one_class() {
        let h = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        let lists = ColorListFamily::new(vec![vec![4], vec![9], vec![2]]).unwrap();
        let run = choice_from_chromatic(&h, &col(&[1, 1, 1]), &lists, Mode::Proper, 0).unwrap();
        assert_eq!(run.redraws, 0);
        assert_eq!(run.witness.pruned_lists, lists.lists());
        assert_eq!(run.coloring.colors(), &[4, 9, 2]);
    }

    #[test]
    fn triangle_proper() {
        let tri = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(required_refinement_list_size(3, 3), 4);
        let lists = ColorListFamily::new(vec![vec![1, 2, 3, 4], vec![2, 3, 5, 6], vec![1, 4, 6, 7]]).unwrap();
        let run = choice_from_chromatic(&tri, &col(&[1, 2, 3]), &lists, Mode::Proper, 7).unwrap();
        assert!(verify(Mode::Proper, &tri, &run.coloring).unwrap().is_valid());
        for (v, l) in run.witness.pruned_lists.iter().enumerate() {
            assert!(l.iter().all(|c| lists.list(v).contains(c)));
            assert!(l.iter().all(|c| run.witness.class_of_color[c] == v));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let h3 = build_interval_hypergraph(3).unwrap();
        let lists = ColorListFamily::uniform(3, 5);
        assert!(matches!(
            choice_from_chromatic(&h3, &col(&[1, 2, 1]), &lists, Mode::Um, 0),
            Err(RefinementError::UnsupportedMode(Mode::Um))
        ));
        assert!(matches!(
            choice_from_chromatic(&h3, &col(&[1, 1, 1]), &lists, Mode::Cf, 0),
            Err(RefinementError::InvalidBase(Mode::Cf))
        ));
        assert!(matches!(
            choice_from_chromatic(&h3, &col(&[1, 2, 1]), &ColorListFamily::uniform(3, 2), Mode::Cf, 0),
            Err(RefinementError::ListTooSmall { need: 3, .. })
        ));
    }

    #[test]
    fn redraw_cap_surfaces_last_witness() {
        let h3 = build_interval_hypergraph(3).unwrap();
        let lists = ColorListFamily::uniform(3, 3);
        // two classes, a cap of one draw: the first draw may or may not do
        let res = choice_from_chromatic_with_cap(&h3, &col(&[1, 2, 1]), &lists, Mode::Cf, 1, 1);
        if let Err(RefinementError::RedrawCapExceeded { cap, last }) = res {
            assert_eq!(cap, 1);
            assert!(last.pruned_lists.iter().any(Vec::is_empty));
        }
    }

    /// A random refinement of `c`: every class is split by a random label.
    fn refine(c: &[Color], labels: &[u8]) -> Coloring {
        col(&c.iter().zip(labels).map(|(&x, &l)| x * 4 + l as Color % 4).collect::<Vec<_>>())
    }

    proptest! {
        #[test]
        fn cf_and_proper_are_refinement_closed(n in 1usize..9, labels in proptest::collection::vec(any::<u8>(), 9)) {
            let h = build_interval_hypergraph(n).unwrap();
            let base = crate::oracle::exhaustive_chromatic(&h).unwrap();
            for (mode, c) in [(Mode::Cf, &base.cf_witness), (Mode::Proper, &base.proper_witness)] {
                let r = refine(c.colors(), &labels[..n]);
                prop_assert!(is_refinement(&r, c).unwrap());
                prop_assert!(verify(mode, &h, &r).unwrap().is_valid());
            }
        }
    }
}
