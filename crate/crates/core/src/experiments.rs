//! Batch experiments: generate, color and check many seeded instances.
//!
//! Seeds are independent, so the batch maps over them with rayon when the
//! `parallel` feature is on. Without it, [`Execution::Parallel`] quietly runs
//! sequentially. Rows come back in seed order either way.

use std::str::FromStr;

use crate::caps::Caps;
use crate::engine::{play, FirstFit, LeastUsed, OnlineColorer, RandomProper, Transcript};
use crate::error::{Error, Result};
use crate::generate::{generate, GeneratorKind};
use crate::instance::{transcript_to_text, triple_transcript_to_text, Instance, ReportRow};
use crate::stripcolor::{audit, flatten, triple_bound, Audit, StripColor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `f` applied to every item, results in input order.
pub fn map_items<T, R, F>(execution: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    StripColor,
    FirstFit,
    LeastUsed,
    /// Random admissible color; the generator is seeded with the instance seed.
    Random,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::StripColor, Algorithm::FirstFit, Algorithm::LeastUsed, Algorithm::Random];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::StripColor => "stripcolor",
            Algorithm::FirstFit => "firstfit",
            Algorithm::LeastUsed => "leastused",
            Algorithm::Random => "random",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verify {
    /// Properness, bound and index checks.
    #[default]
    Fast,
    /// Also searches every class for an induced `K_{3,3}`.
    Full,
}

impl FromStr for Verify {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Verify::Fast),
            "full" => Ok(Verify::Full),
            other => Err(Error::InvalidInput(format!("unknown verification level {other:?}"))),
        }
    }
}

/// One colored instance.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub row: ReportRow,
    /// Integer color per object (triples are flattened).
    pub colors: Vec<usize>,
    pub transcript: String,
    /// Present for [`Algorithm::StripColor`] on strip objects.
    pub audit: Option<Audit>,
}

impl RunOutput {
    /// Reasons this run counts as a failure.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let r = &self.row;
        if !r.proper {
            out.push(format!("seed {}: {} produced an improper coloring", r.seed, r.algorithm));
        }
        if !r.within_bound() {
            out.push(format!("seed {}: {} used {} colors, over the bound", r.seed, r.algorithm, r.colors_used));
        }
        if let Some(a) = &self.audit {
            if !a.index_violations.is_empty() {
                out.push(format!("seed {}: alpha + beta too large at steps {:?}", r.seed, a.index_violations));
            }
            if !a.base_violations.is_empty() {
                out.push(format!("seed {}: bases meet inside a class: {:?}", r.seed, a.base_violations));
            }
            if let Some(v) = &a.ktt_violations {
                if !v.is_empty() {
                    out.push(format!("seed {}: induced K_3,3 in classes {:?}", r.seed, v));
                }
            }
        }
        out
    }
}

fn row<O, C>(seed: u64, t: &Transcript<O, C>, bound: Option<usize>) -> ReportRow
where
    C: Ord + Clone,
{
    ReportRow {
        seed,
        n: t.len(),
        omega: t.omega(),
        algorithm: t.algorithm.clone(),
        colors_used: t.colors_used(),
        bound,
        proper: t.proper,
    }
}

fn run_usize<O, A>(objects: Vec<O>, alg: A, seed: u64, caps: &Caps) -> Result<RunOutput>
where
    O: crate::geometry::Shape + Clone,
    A: OnlineColorer<O, Color = usize>,
{
    let t = play(objects, alg, caps)?;
    Ok(RunOutput {
        row: row(seed, &t, None),
        colors: t.colors.clone(),
        transcript: transcript_to_text(&t),
        audit: None,
    })
}

fn run_on<O>(objects: Vec<O>, algorithm: Algorithm, seed: u64, caps: &Caps) -> Result<RunOutput>
where
    O: crate::geometry::Shape + crate::geometry::BaseKey + Clone,
{
    match algorithm {
        Algorithm::StripColor => {
            let t = play(objects, StripColor::new(), caps)?;
            Ok(RunOutput {
                row: row(seed, &t, Some(triple_bound(t.omega()))),
                colors: flatten(&t.colors),
                transcript: triple_transcript_to_text(&t),
                audit: None,
            })
        }
        Algorithm::FirstFit => run_usize(objects, FirstFit::new(), seed, caps),
        Algorithm::LeastUsed => run_usize(objects, LeastUsed::new(), seed, caps),
        Algorithm::Random => run_usize(objects, RandomProper::new(seed), seed, caps),
    }
}

/// Colors `instance` with `algorithm`. Strip instances colored by
/// [`StripColor`] are audited as well.
pub fn run_instance(instance: &Instance, algorithm: Algorithm, seed: u64, verify: Verify, caps: &Caps) -> Result<RunOutput> {
    match instance {
        Instance::Strip(objects) if algorithm == Algorithm::StripColor => {
            let t = play(objects.clone(), StripColor::new(), caps)?;
            let a = audit(&t, caps, verify == Verify::Full)?;
            Ok(RunOutput {
                row: row(seed, &t, Some(a.bound)),
                colors: flatten(&t.colors),
                transcript: triple_transcript_to_text(&t),
                audit: Some(a),
            })
        }
        Instance::Strip(objects) => run_on(objects.clone(), algorithm, seed, caps),
        Instance::Attached(segments) => run_on(segments.clone(), algorithm, seed, caps),
    }
}

#[derive(Debug, Clone)]
pub struct BatchConfig {
    pub kind: GeneratorKind,
    pub n: usize,
    pub omega_cap: usize,
    pub first_seed: u64,
    pub count: u64,
    pub algorithms: Vec<Algorithm>,
    pub verify: Verify,
}

#[derive(Debug, Clone, Default)]
pub struct BatchResult {
    pub rows: Vec<ReportRow>,
    pub failures: Vec<String>,
}

/// Generates `count` instances from consecutive seeds and runs every
/// configured algorithm on each.
pub fn run_batch(config: &BatchConfig, caps: &Caps, execution: Execution) -> Result<BatchResult> {
    let seeds: Vec<u64> = (config.first_seed..config.first_seed + config.count).collect();
    let per_seed = map_items(execution, seeds, |seed| -> Result<Vec<RunOutput>> {
        let instance = generate(config.kind, config.n, seed, config.omega_cap, caps)?;
        config
            .algorithms
            .iter()
            .map(|&a| run_instance(&instance, a, seed, config.verify, caps))
            .collect()
    });
    let mut result = BatchResult::default();
    for outputs in per_seed {
        for out in outputs? {
            result.failures.extend(out.failures());
            result.rows.push(out.row);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(count: u64) -> BatchConfig {
        BatchConfig {
            kind: GeneratorKind::QuasiConvex,
            n: 20,
            omega_cap: 4,
            first_seed: 100,
            count,
            algorithms: Algorithm::ALL.to_vec(),
            verify: Verify::Full,
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let caps = Caps::default();
        let a = run_batch(&config(6), &caps, Execution::Sequential).unwrap();
        let b = run_batch(&config(6), &caps, Execution::Parallel).unwrap();
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.rows.len(), 24);
        assert!(a.failures.is_empty(), "{:?}", a.failures);
        assert!(a.rows.iter().all(|r| r.proper && r.within_bound()));
    }

    #[test]
    fn attached_instances_run_every_algorithm() {
        let caps = Caps::default();
        let inst = generate(GeneratorKind::Attached, 15, 3, 3, &caps).unwrap();
        for a in Algorithm::ALL {
            let out = run_instance(&inst, a, 3, Verify::Fast, &caps).unwrap();
            assert!(out.row.proper);
            assert!(out.audit.is_none());
            assert_eq!(out.colors.len(), 15);
        }
    }

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("nope".parse::<Algorithm>().is_err());
        assert_eq!("full".parse::<Verify>().unwrap(), Verify::Full);
    }
}
