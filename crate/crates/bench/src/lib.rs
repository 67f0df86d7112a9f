//! Seeded inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use umlist_core::geometry::{build_disc_hypergraph, random_point_set};
use umlist_core::planar::PlanarGraph;
use umlist_core::{Color, ColorListFamily, Hypergraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Lists `{v % 3 + 1, ..., v % 3 + size}`: neighbours disagree on their
/// smallest colors, so the engine runs several iterations.
pub fn staggered_lists(n: usize, size: usize) -> ColorListFamily {
    let lists = (0..n)
        .map(|v| {
            let o = (v % 3) as Color;
            (o + 1..=o + size as Color).collect()
        })
        .collect();
    ColorListFamily::new(lists).expect("positive colors")
}

pub fn disc_instance(n: usize, seed: u64) -> Hypergraph {
    let points = random_point_set(n, 256, &mut rng(seed), 1000).expect("general position");
    build_disc_hypergraph(&points).expect("valid points")
}

pub fn random_planar(n: usize, seed: u64) -> PlanarGraph {
    PlanarGraph::random(n, 0.8, &mut rng(seed))
}
