use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use umlist_core::planar::star_lower_bound_lists;
use umlist_core::{Color, ColorListFamily};

/// How per-vertex lists are produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListPolicy {
    /// `{1, ..., l}` everywhere.
    Uniform(usize),
    /// `{o_v + 1, ..., o_v + l}` with seeded offsets `o_v` in `0..=2l`.
    Shifted(usize),
    /// The sizes the chosen algorithm's guarantee asks for, as `{1, ..., l_v}`.
    Theorem,
    /// The star family: `{1..s}` at the center, `{s+1..2s}` at the leaves.
    Star(usize),
    File(PathBuf),
}

impl FromStr for ListPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let size = |v: &str| -> Result<usize, String> {
            match v.parse::<usize>() {
                Ok(l) if l >= 1 => Ok(l),
                _ => Err(format!("list size must be a positive integer, got {v:?}")),
            }
        };
        match s.split_once(':') {
            None if s == "theorem" || s == "auto" => Ok(ListPolicy::Theorem),
            Some(("uniform", v)) => size(v).map(ListPolicy::Uniform),
            Some(("shifted", v)) => size(v).map(ListPolicy::Shifted),
            Some(("star", v)) => size(v).map(ListPolicy::Star),
            Some(("file", p)) if !p.is_empty() => Ok(ListPolicy::File(PathBuf::from(p))),
            _ => Err(format!("unknown list policy {s:?}; use uniform:L, shifted:L, theorem, star:S or file:PATH")),
        }
    }
}

impl std::fmt::Display for ListPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ListPolicy::Uniform(l) => write!(f, "uniform:{l}"),
            ListPolicy::Shifted(l) => write!(f, "shifted:{l}"),
            ListPolicy::Theorem => write!(f, "theorem"),
            ListPolicy::Star(s) => write!(f, "star:{s}"),
            ListPolicy::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// Materializes the policy for `n` vertices. `theorem` receives the
/// algorithm's per-vertex sizes.
pub fn build_lists(
    policy: &ListPolicy,
    n: usize,
    theorem: impl FnOnce() -> Result<Vec<usize>>,
    seed: Option<u64>,
) -> Result<ColorListFamily> {
    let family = match policy {
        ListPolicy::Uniform(l) => ColorListFamily::uniform(n, *l),
        ListPolicy::Theorem => {
            let sizes = theorem()?;
            ColorListFamily::new(sizes.into_iter().map(|l| (1..=l as Color).collect()).collect())
                .map_err(umlist_core::Error::from)?
        }
        ListPolicy::Shifted(l) => {
            let seed = seed.context("--seed is required for shifted lists")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let lists = (0..n)
                .map(|_| {
                    let o: Color = rng.gen_range(0..=2 * *l as Color);
                    (o + 1..=o + *l as Color).collect()
                })
                .collect();
            ColorListFamily::new(lists).map_err(umlist_core::Error::from)?
        }
        ListPolicy::Star(s) => {
            if n < 3 {
                bail!("star lists need at least 3 vertices");
            }
            star_lower_bound_lists(n, *s)
        }
        ListPolicy::File(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing lists {}", p.display()))?
        }
    };
    if family.len() != n {
        bail!("{} lists for {n} vertices", family.len());
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["uniform:3", "shifted:8", "theorem", "star:2", "file:l.json"] {
            assert_eq!(s.parse::<ListPolicy>().unwrap().to_string(), s);
        }
        assert_eq!("auto".parse::<ListPolicy>(), Ok(ListPolicy::Theorem));
        assert!("uniform:0".parse::<ListPolicy>().is_err());
        assert!("bogus".parse::<ListPolicy>().is_err());
    }

    #[test]
    fn shifted_is_seeded() {
        let a = build_lists(&ListPolicy::Shifted(3), 5, || unreachable!(), Some(9)).unwrap();
        let b = build_lists(&ListPolicy::Shifted(3), 5, || unreachable!(), Some(9)).unwrap();
        assert_eq!(a, b);
        assert!(a.lists().iter().all(|l| l.len() == 3 && l[2] == l[0] + 2));
        assert!(build_lists(&ListPolicy::Shifted(3), 5, || unreachable!(), None).is_err());
    }

    #[test]
    fn theorem_sizes_per_vertex() {
        let l = build_lists(&ListPolicy::Theorem, 3, || Ok(vec![2, 1, 3]), None).unwrap();
        assert_eq!(l.lists(), &[vec![1, 2], vec![1], vec![1, 2, 3]]);
    }
}
