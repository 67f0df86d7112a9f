//! List unique-maximum coloring driven by a potential function.
//!
//! Each round takes the smallest color `c` still present in some remaining
//! list, properly colors the uncolored holders of `c` with a hereditary
//! k-colorer, gives `c` to the class of largest potential and strikes `c`
//! from the other holders. A vertex with `r` colors left contributes
//! `λ^{-r}` with `λ = k/(k-1)`; the total never increases.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::colorers::{ColorerError, HereditaryColorer, InducedView};
use crate::coloring::{verify_from_lists, verify_um, Color, ColorListFamily, Coloring, ColoringError};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("k must be at least 2 for the list condition, got {0}")]
    DegenerateK(usize),
    #[error(transparent)]
    Lists(#[from] ColoringError),
    #[error("list of vertex {vertex} emptied at iteration {iteration}")]
    ListExhausted {
        vertex: usize,
        iteration: usize,
        trace: Box<PotentialTrace>,
    },
    #[error("auxiliary coloring at iteration {iteration} is invalid: {reason}")]
    ColorerViolation { iteration: usize, reason: String },
    #[error(transparent)]
    Colorer(#[from] ColorerError),
    #[error("potential invariant broken at iteration {iteration}: {what}")]
    InvariantBreach { iteration: usize, what: &'static str },
}

/// One round of the engine. Class potentials are indexed by class label
/// minus one; `chosen` indexes into them.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub t: usize,
    pub c: Color,
    pub vc_size: usize,
    pub class_potentials: Vec<BigRational>,
    pub chosen: usize,
    pub p_before: BigRational,
    pub p_after: BigRational,
}

fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Serialize for TraceRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TraceRecord", 7)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("c", &self.c)?;
        st.serialize_field("Vc_size", &self.vc_size)?;
        let classes: Vec<String> = self.class_potentials.iter().map(ratio_string).collect();
        st.serialize_field("class_potentials", &classes)?;
        st.serialize_field("chosen", &self.chosen)?;
        st.serialize_field("P", &ratio_string(&self.p_before))?;
        st.serialize_field("P_after", &ratio_string(&self.p_after))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct PotentialTrace {
    pub k: usize,
    pub iterations: Vec<TraceRecord>,
}

impl PotentialTrace {
    /// Potential before the first round, if any round ran.
    pub fn initial_potential(&self) -> Option<&BigRational> {
        self.iterations.first().map(|r| &r.p_before)
    }

    pub fn is_non_increasing(&self) -> bool {
        self.iterations.iter().all(|r| r.p_after <= r.p_before)
            && self
                .iterations
                .windows(2)
                .all(|w| w[1].p_before <= w[0].p_after)
    }
}

#[derive(Debug, Clone)]
pub struct UmListResult {
    pub coloring: Coloring,
    pub trace: PotentialTrace,
    pub verified: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    /// Check every auxiliary coloring for properness before using it.
    pub verify_auxiliary: bool,
    /// Run `verify_um` and `verify_from_lists` on the result.
    pub verify_output: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            verify_auxiliary: true,
            verify_output: true,
        }
    }
}

/// `((k-1)/k)^m` exactly.
fn lambda_inverse_pow(k: usize, m: usize) -> BigRational {
    let num = BigUint::from(k - 1).pow(m as u32);
    let den = BigUint::from(k).pow(m as u32);
    BigRational::new(num.into(), den.into())
}

/// The exact sum of `λ^{-|L_v|}` with `λ = k/(k-1)`, and whether it is
/// below 1.
pub fn check_list_condition(
    lists: &ColorListFamily,
    k: usize,
) -> Result<(bool, BigRational), EngineError> {
    if k < 2 {
        return Err(EngineError::DegenerateK(k));
    }
    let sum = lists
        .lists()
        .iter()
        .fold(BigRational::zero(), |acc, l| acc + lambda_inverse_pow(k, l.len()));
    Ok((sum < BigRational::one(), sum))
}

/// Smallest uniform list size `l` with `n * ((k-1)/k)^l < 1`, by exact
/// integer comparison `n (k-1)^l < k^l`.
///
/// # Panics
/// If `n == 0` or `k < 2`.
pub fn um_choice_bound(n: usize, k: usize) -> usize {
    assert!(n >= 1 && k >= 2, "um_choice_bound needs n >= 1 and k >= 2");
    let n = BigUint::from(n);
    let (mut lhs, mut rhs) = (n, BigUint::one());
    let mut l = 0;
    while lhs >= rhs {
        lhs *= k - 1;
        rhs *= k;
        l += 1;
    }
    l
}

pub fn um_color_from_lists(
    h: &Hypergraph,
    lists: &ColorListFamily,
    colorer: &dyn HereditaryColorer,
) -> Result<UmListResult, EngineError> {
    um_color_from_lists_with(h, lists, colorer, EngineOptions::default())
}

/// Potentials are kept as integers over the common denominator `k^R`,
/// `R` the longest list, so a vertex with `r` colors left weighs
/// `(k-1)^r k^(R-r)`. With `k = 1` every nonempty list weighs 0.
pub fn um_color_from_lists_with(
    h: &Hypergraph,
    lists: &ColorListFamily,
    colorer: &dyn HereditaryColorer,
    opts: EngineOptions,
) -> Result<UmListResult, EngineError> {
    lists.check_aligned(h)?;
    let n = h.n_vertices();
    let k = colorer.k();
    let max_len = lists.lists().iter().map(Vec::len).max().unwrap_or(0);
    let weight: Vec<BigUint> = (0..=max_len)
        .map(|r| BigUint::from(k.saturating_sub(1)).pow(r as u32) * BigUint::from(k).pow((max_len - r) as u32))
        .collect();
    let denom = BigUint::from(k).pow(max_len as u32);
    let as_rational = |x: &BigUint| BigRational::new(x.clone().into(), denom.clone().into());

    let l = lists.lists();
    // lists are sorted; striking c always removes the current head
    let mut head = vec![0usize; n];
    let mut assigned: Vec<Color> = vec![0; n];
    let mut uncolored = n;
    let mut potential: BigUint = (0..n).map(|v| &weight[l[v].len()]).sum();
    let mut trace = PotentialTrace { k, iterations: Vec::new() };
    // class label of each vertex in the current V^c, 0 outside
    let mut class_of = vec![0usize; n];
    let aux = opts.verify_auxiliary.then(|| AuxChecker::new(h));

    while uncolored > 0 {
        let t = trace.iterations.len() + 1;
        let c = (0..n)
            .filter(|&v| assigned[v] == 0)
            .map(|v| l[v][head[v]])
            .min()
            .expect("uncolored vertices have nonempty lists");
        let vc: Vec<usize> = (0..n)
            .filter(|&v| assigned[v] == 0 && l[v][head[v]] == c)
            .collect();

        let cert = colorer.color(&InducedView { parent: h, vertices: &vc })?;
        let labels = cert.coloring.colors();
        if labels.len() != vc.len() {
            return Err(EngineError::ColorerViolation {
                iteration: t,
                reason: format!("{} labels for {} vertices", labels.len(), vc.len()),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&x| x as usize > k) {
            return Err(EngineError::ColorerViolation {
                iteration: t,
                reason: format!("class label {bad} exceeds k = {k}"),
            });
        }
        for (&v, &lab) in vc.iter().zip(labels) {
            class_of[v] = lab as usize;
        }
        if let Some(checker) = &aux {
            if let Some(e) = checker.monochromatic_edge(&class_of, &vc) {
                return Err(EngineError::ColorerViolation {
                    iteration: t,
                    reason: format!("edge {e:?} is monochromatic within V^c"),
                });
            }
        }

        let mut class_pot = vec![BigUint::zero(); k];
        for &v in &vc {
            class_pot[class_of[v] - 1] += &weight[l[v].len() - head[v]];
        }
        let chosen = (0..k).fold(0, |best, i| if class_pot[i] > class_pot[best] { i } else { best });
        let total_vc: BigUint = class_pot.iter().sum();
        if BigUint::from(k) * &class_pot[chosen] < total_vc {
            return Err(EngineError::InvariantBreach { iteration: t, what: "chosen class below average" });
        }

        let before = potential.clone();
        let mut exhausted = None;
        for &v in &vc {
            let r = l[v].len() - head[v];
            potential -= &weight[r];
            if class_of[v] == chosen + 1 {
                assigned[v] = c;
                uncolored -= 1;
            } else {
                head[v] += 1;
                if r == 1 {
                    exhausted.get_or_insert(v);
                } else {
                    potential += &weight[r - 1];
                }
            }
            class_of[v] = 0;
        }
        if potential > before {
            return Err(EngineError::InvariantBreach { iteration: t, what: "potential increased" });
        }
        trace.iterations.push(TraceRecord {
            t,
            c,
            vc_size: vc.len(),
            class_potentials: class_pot.iter().map(&as_rational).collect(),
            chosen,
            p_before: as_rational(&before),
            p_after: as_rational(&potential),
        });
        if let Some(vertex) = exhausted {
            return Err(EngineError::ListExhausted { vertex, iteration: t, trace: Box::new(trace) });
        }
    }

    let coloring = Coloring::new(assigned)?;
    let verified = if opts.verify_output {
        verify_um(h, &coloring)?.is_valid() && verify_from_lists(&coloring, lists)?
    } else {
        false
    };
    Ok(UmListResult { coloring, trace, verified })
}

/// Finds an edge of `h` with at least two vertices inside the labelled set
/// whose labelled vertices all share one label. Edges are stored as bitmasks
/// when that is smaller than their vertex lists.
enum AuxChecker<'a> {
    Scan(&'a Hypergraph),
    Masks { h: &'a Hypergraph, words: usize, masks: Vec<u64> },
}

impl<'a> AuxChecker<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let words = h.n_vertices().div_ceil(64);
        let volume: usize = h.edges().iter().map(Vec::len).sum();
        if words * h.n_edges() > volume {
            return AuxChecker::Scan(h);
        }
        let mut masks = vec![0u64; words * h.n_edges()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                masks[i * words + v / 64] |= 1 << (v % 64);
            }
        }
        AuxChecker::Masks { h, words, masks }
    }

    fn monochromatic_edge(&self, class_of: &[usize], labelled: &[usize]) -> Option<&'a [usize]> {
        match self {
            AuxChecker::Scan(h) => h.edges().iter().find(|e| scan_is_monochromatic(e, class_of)).map(Vec::as_slice),
            AuxChecker::Masks { h, words, masks } => {
                let words = *words;
                let k = labelled.iter().map(|&v| class_of[v]).max().unwrap_or(0);
                // all labelled vertices, then one mask per class
                let mut sets = vec![0u64; (k + 1) * words];
                for &v in labelled {
                    let bit = 1u64 << (v % 64);
                    sets[v / 64] |= bit;
                    sets[class_of[v] * words + v / 64] |= bit;
                }
                let (all, classes) = sets.split_at(words);
                masks.chunks_exact(words).position(|e| {
                    let mut first = None;
                    let mut count = 0;
                    for w in 0..words {
                        let x = e[w] & all[w];
                        if x != 0 && first.is_none() {
                            first = Some(w * 64 + x.trailing_zeros() as usize);
                        }
                        count += x.count_ones();
                    }
                    let Some(v) = first.filter(|_| count >= 2) else {
                        return false;
                    };
                    let class = &classes[(class_of[v] - 1) * words..class_of[v] * words];
                    (0..words).all(|w| e[w] & all[w] & !class[w] == 0)
                })
                .map(|i| h.edges()[i].as_slice())
            }
        }
    }
}

fn scan_is_monochromatic(e: &[usize], class_of: &[usize]) -> bool {
    let mut first = 0;
    let mut count = 0;
    for &v in e {
        let lab = class_of[v];
        if lab == 0 {
            continue;
        }
        if count == 0 {
            first = lab;
        } else if lab != first {
            return false;
        }
        count += 1;
    }
    count >= 2
}
