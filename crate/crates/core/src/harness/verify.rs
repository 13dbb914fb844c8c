use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::DiagonalSpace;
use crate::configurations::classify;
use crate::error::{Error, Result};
use crate::model::CanonicalKey;
use crate::packing::{is_exceptional, pack_cycle, pack_two_regular, search_packing, AbstractGraph};
use crate::triangulator;

/// Largest `n` verified exhaustively unless the caller raises the limit.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 9;

/// Largest `n` for the placement-existence checks.
pub const POTENTIAL_LIMIT: usize = 9;

const CHUNK: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// At most `n − 3` chords always triangulate.
    T1,
    /// `n − 2` chords block exactly in the F* configuration.
    T2,
    /// `n − 1` chords block exactly in the J* configurations.
    T3,
    /// `C_n` has a triangulable placement exactly for `n ≥ 7`.
    T4,
    /// The 2-regular characterization with six exceptions.
    T5,
}

impl TheoremId {
    /// The range of `|F|` the characterization speaks about.
    pub fn band(self, n: usize) -> Option<(usize, usize)> {
        match self {
            TheoremId::T1 => Some((0, n.saturating_sub(3))),
            TheoremId::T2 => Some((n - 2, n - 2)),
            TheoremId::T3 => Some((n - 1, n - 1)),
            TheoremId::T4 | TheoremId::T5 => None,
        }
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Ok(TheoremId::T1),
            "t2" => Ok(TheoremId::T2),
            "t3" => Ok(TheoremId::T3),
            "t4" => Ok(TheoremId::T4),
            "t5" => Ok(TheoremId::T5),
            _ => Err(Error::InvalidParams(format!("unknown theorem id {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mismatch {
    /// Orbit representative of the forbidden set, or the cycle lengths.
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_key: Option<CanonicalKey>,
    /// The ground truth: dynamic program or exhaustive placement search.
    pub dp_verdict: bool,
    /// What the characterization says.
    pub predicted: bool,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub mode: &'static str,
    pub instances_checked: u64,
    pub canonical_classes_checked: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Left out of the document so that reruns compare byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Uniform samples instead of full enumeration.
    pub samples: Option<u64>,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub exhaustive_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: None,
            seed: 0,
            jobs: None,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidParams(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn check(space: &DiagonalSpace, mask: u64) -> Option<Mismatch> {
    let inst = space.instance(mask);
    let class = classify(&inst);
    let dp = triangulator::decide(&inst);
    (class.predicts_triangulable() != dp).then(|| {
        let key = inst.canonical_key();
        Mismatch {
            subject: key.to_string(),
            canonical_key: Some(key),
            dp_verdict: dp,
            predicted: class.predicts_triangulable(),
            label: class.label().to_string(),
        }
    })
}

#[derive(Default)]
struct Tally {
    instances: u64,
    classes: u64,
    mismatches: Vec<Mismatch>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.classes += other.classes;
        self.mismatches.extend(other.mismatches);
        self
    }
}

fn exhaustive(space: &DiagonalSpace, lo: usize, hi: usize) -> Tally {
    let mut masks = space.masks(lo, hi);
    let mut total = Tally::default();
    loop {
        let chunk: Vec<u64> = masks.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break total;
        }
        let part = chunk
            .par_iter()
            .fold(Tally::default, |mut t, &m| {
                t.instances += 1;
                if space.is_canonical(m) {
                    t.classes += 1;
                    t.mismatches.extend(check(space, m));
                }
                t
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(part);
    }
}

fn binom(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Uniform draw over all diagonal sets with size in `lo..=hi`.
fn sample_mask(
    space: &DiagonalSpace,
    sizes: &WeightedIndex<u64>,
    lo: usize,
    rng: &mut ChaCha8Rng,
) -> u64 {
    let k = lo + sizes.sample(rng);
    rand::seq::index::sample(rng, space.len(), k)
        .into_iter()
        .fold(0u64, |m, i| m | 1 << i)
}

fn sampled(space: &DiagonalSpace, lo: usize, hi: usize, samples: u64, seed: u64) -> Result<Tally> {
    let weights: Vec<u64> = (lo..=hi).map(|k| binom(space.len(), k)).collect();
    let sizes = WeightedIndex::new(weights).map_err(|e| Error::InvalidParams(e.to_string()))?;
    let chunks = samples.div_ceil(CHUNK as u64);
    let parts: Vec<(Tally, Vec<u64>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = (samples - c * CHUNK as u64).min(CHUNK as u64);
            let mut t = Tally::default();
            let mut reps = Vec::with_capacity(count as usize);
            for _ in 0..count {
                let m = sample_mask(space, &sizes, lo, &mut rng);
                t.instances += 1;
                reps.push(space.canonical(m));
                t.mismatches.extend(check(space, m));
            }
            (t, reps)
        })
        .collect();
    let mut seen = HashSet::new();
    let mut total = Tally::default();
    for (t, reps) in parts {
        seen.extend(reps);
        total = total.merge(t);
    }
    total.classes = seen.len() as u64;
    Ok(total)
}

/// Compares the classifier against the dynamic program on every forbidden
/// set (or on seeded samples) in the theorem's size band. Sets with a hull
/// chord are outside the characterization and never generated.
pub fn verify_theorem(id: TheoremId, n: usize, opts: &VerifyOptions) -> Result<VerifyReport> {
    let (lo, hi) = id
        .band(n.max(3))
        .ok_or_else(|| Error::InvalidParams(format!("{id:?} is checked by verify_potential")))?;
    if n < 4 {
        return Err(Error::InvalidParams(format!(
            "n = {n} is too small for {id:?}"
        )));
    }
    if opts.samples.is_none() && n > opts.exhaustive_limit {
        return Err(Error::SearchRefused(format!(
            "exhaustive verification stops at n = {}; pass a sample count",
            opts.exhaustive_limit
        )));
    }
    let space = DiagonalSpace::new(n)?;
    let start = Instant::now();
    let (tally, mode, seed) = match opts.samples {
        None => (
            with_jobs(opts.jobs, || exhaustive(&space, lo, hi))?,
            "exhaustive",
            None,
        ),
        Some(s) => (
            with_jobs(opts.jobs, || sampled(&space, lo, hi, s, opts.seed))??,
            "sampled",
            Some(opts.seed),
        ),
    };
    let mut mismatches = tally.mismatches;
    mismatches.sort();
    mismatches.dedup();
    Ok(VerifyReport {
        theorem: id,
        n,
        mode,
        instances_checked: tally.instances,
        canonical_classes_checked: tally.classes,
        mismatches,
        seed,
        wall_time: start.elapsed(),
    })
}

/// Cycle multisets with total `n`, each sorted descending.
pub fn cycle_multisets(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (3..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

fn multiset_name(lengths: &[usize]) -> String {
    lengths
        .iter()
        .map(|l| format!("C{l}"))
        .collect::<Vec<_>>()
        .join("+")
}

/// Checks placement existence for cycles (T4) or all 2-regular graphs (T5)
/// on up to `n_max` vertices, by exhaustive search against both the stated
/// characterization and the constructions.
pub fn verify_potential(id: TheoremId, n_max: usize, jobs: Option<usize>) -> Result<VerifyReport> {
    if !matches!(id, TheoremId::T4 | TheoremId::T5) {
        return Err(Error::InvalidParams(format!(
            "{id:?} is checked by verify_theorem"
        )));
    }
    if n_max > POTENTIAL_LIMIT {
        return Err(Error::SearchRefused(format!(
            "placement search stops at n = {POTENTIAL_LIMIT}"
        )));
    }
    let start = Instant::now();
    let graphs: Vec<Vec<usize>> = (3..=n_max)
        .flat_map(|n| match id {
            TheoremId::T4 => vec![vec![n]],
            _ => cycle_multisets(n),
        })
        .collect();
    let mut mismatches = Vec::new();
    for lengths in &graphs {
        let n: usize = lengths.iter().sum();
        let g = AbstractGraph::cycle_union(lengths)?;
        let found = with_jobs(jobs, || search_packing(&g, n, None))??;
        let predicted = match id {
            TheoremId::T4 => n >= 7,
            _ => !is_exceptional(lengths),
        };
        let built = match id {
            TheoremId::T4 => pack_cycle(n),
            _ => pack_two_regular(lengths),
        };
        let label = match &built {
            Ok(p) if p.is_fallback() => "construction rejected, search used".to_string(),
            Ok(_) => "constructed".to_string(),
            Err(e) => e.to_string(),
        };
        let constructed = matches!(&built, Ok(p) if !p.is_fallback());
        if found.is_some() != predicted || constructed != predicted {
            mismatches.push(Mismatch {
                subject: multiset_name(lengths),
                canonical_key: found.as_ref().map(|p| p.induced().canonical_key()),
                dp_verdict: found.is_some(),
                predicted,
                label,
            });
        }
    }
    mismatches.sort();
    Ok(VerifyReport {
        theorem: id,
        n: n_max,
        mode: "exhaustive",
        instances_checked: graphs.len() as u64,
        canonical_classes_checked: graphs.len() as u64,
        mismatches,
        seed: None,
        wall_time: start.elapsed(),
    })
}
