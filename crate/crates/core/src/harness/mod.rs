//! Sweeps that test the determinant relations and their supporting
//! identities on exhaustive and sampled diagram populations.
//!
//! Checks never stop at a failure: they count it and keep the offending code
//! so it can be re-run with [`recheck`].

pub mod checks;
mod generate;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::perfect_matchings;
use crate::diagram::{parse_gauss_code, BasedGaussDiagram, ParseError};
use crate::matrix::IntMatrix;
pub use checks::Verdict;
pub use generate::{canonical_form, diagrams_for_matching, enumerate_diagrams, random_knot, random_two_component, raw_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    /// det ≡ ±(1 + 4·v2) mod 8.
    CorDet,
    /// det ≡ ±∇_asc(2) mod 8.
    DetAsc,
    /// Basepoint independence of `<C_2>` mod p and agreement with `<C'_2>`.
    Main,
    /// Skein identities for the pairings, sampled.
    Skein,
    /// Warping degree 0 and smoothing identities.
    WarpSmooth,
    /// Determinant 0 when one component lies over the other, sampled.
    OverLink,
    /// Bordered-matrix determinant identity, sampled.
    Block,
    /// Numbering existence versus indices.
    Numbering,
    /// Independence of the coloring-matrix minor.
    Minors,
}

impl CheckName {
    pub const ALL: [CheckName; 9] = [
        CheckName::CorDet,
        CheckName::DetAsc,
        CheckName::Main,
        CheckName::Skein,
        CheckName::WarpSmooth,
        CheckName::OverLink,
        CheckName::Block,
        CheckName::Numbering,
        CheckName::Minors,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::CorDet => "cor-det",
            CheckName::DetAsc => "det-asc",
            CheckName::Main => "main",
            CheckName::Skein => "skein",
            CheckName::WarpSmooth => "warp-smooth",
            CheckName::OverLink => "over-link",
            CheckName::Block => "block",
            CheckName::Numbering => "numbering",
            CheckName::Minors => "minors",
        }
    }

    /// Whether the population is the exhaustive one-circle sweep (otherwise
    /// it is seeded random sampling).
    pub fn is_exhaustive(self) -> bool {
        !matches!(self, CheckName::Skein | CheckName::OverLink | CheckName::Block)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| {
            let names: Vec<_> = CheckName::ALL.iter().map(|c| c.as_str()).collect();
            format!("unknown check {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Exhaustive sweeps cover 0..=max_chords chords.
    pub max_chords: usize,
    /// Moduli for the numbering-dependent checks.
    pub moduli: Vec<u64>,
    pub seed: u64,
    /// Random inputs per sampled check (per shape for the skein check).
    pub samples: usize,
    pub sample_max_chords: usize,
    pub workers: usize,
    /// Sweep one diagram per rotation class instead of every based diagram.
    pub canonicalize: bool,
    pub checks: Vec<CheckName>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_chords: 4,
            moduli: vec![2, 3],
            seed: 0x5eed,
            samples: 1000,
            sample_max_chords: 8,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            canonicalize: false,
            checks: CheckName::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckName,
    pub population: u64,
    pub passes: u64,
    pub failures: u64,
    /// Gauss codes (or, for the matrix check, bordered-matrix descriptions)
    /// of the failing inputs, sorted.
    pub counterexamples: Vec<String>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl CheckReport {
    fn empty(check: CheckName, seed: u64) -> Self {
        CheckReport { check, population: 0, passes: 0, failures: 0, counterexamples: Vec::new(), seed, elapsed_ms: 0 }
    }

    fn record(&mut self, verdict: Verdict, witness: impl FnOnce() -> String) {
        match verdict {
            Verdict::Excluded => {}
            Verdict::Pass => {
                self.population += 1;
                self.passes += 1;
            }
            Verdict::Fail => {
                self.population += 1;
                self.failures += 1;
                self.counterexamples.push(witness());
            }
        }
    }

    fn merge(&mut self, other: CheckReport) {
        self.population += other.population;
        self.passes += other.passes;
        self.failures += other.failures;
        self.counterexamples.extend(other.counterexamples);
    }

    pub fn is_clean(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.check)?;
        writeln!(f, "population  {}", self.population)?;
        writeln!(f, "passes      {}", self.passes)?;
        writeln!(f, "failures    {}", self.failures)?;
        writeln!(f, "seed        {}", self.seed)?;
        writeln!(f, "elapsed_ms  {}", self.elapsed_ms)?;
        for c in &self.counterexamples {
            writeln!(f, "counterexample {c}")?;
        }
        Ok(())
    }
}

/// Runs one diagram predicate.
pub fn verdict(check: CheckName, g: &BasedGaussDiagram, config: &SweepConfig) -> Verdict {
    match check {
        CheckName::CorDet => checks::cor_det(g),
        CheckName::DetAsc => checks::det_vs_ascending(g),
        CheckName::Main => checks::main_theorem(g, &config.moduli),
        CheckName::Skein => checks::skein(g),
        CheckName::WarpSmooth => checks::warp_and_smoothing(g, &config.moduli),
        CheckName::OverLink => checks::over_link(g),
        CheckName::Numbering => checks::numbering(g, &config.moduli),
        CheckName::Minors => checks::minors(g),
        CheckName::Block => Verdict::Excluded,
    }
}

/// Re-runs a diagram check on a recorded counterexample code.
pub fn recheck(check: CheckName, code: &str, config: &SweepConfig) -> Result<Verdict, ParseError> {
    Ok(verdict(check, &parse_gauss_code(code)?, config))
}

/// Splits `0..n` round-robin over the workers and merges their reports.
fn sharded<F>(check: CheckName, config: &SweepConfig, n: usize, job: F) -> CheckReport
where
    F: Fn(usize, &mut CheckReport) + Sync,
{
    let workers = config.workers.clamp(1, n.max(1));
    let parts: Vec<CheckReport> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let job = &job;
                s.spawn(move || {
                    let mut part = CheckReport::empty(check, config.seed);
                    for i in (w..n).step_by(workers) {
                        job(i, &mut part);
                    }
                    part
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut report = CheckReport::empty(check, config.seed);
    for part in parts {
        report.merge(part);
    }
    report.counterexamples.sort();
    report
}

fn exhaustive(check: CheckName, config: &SweepConfig) -> CheckReport {
    let shards: Vec<Vec<(usize, usize)>> = (0..=config.max_chords).flat_map(|k| perfect_matchings(2 * k)).collect();
    sharded(check, config, shards.len(), |i, report| {
        for g in diagrams_for_matching(&shards[i]) {
            if config.canonicalize && canonical_form(&g) != g {
                continue;
            }
            report.record(verdict(check, &g, config), || g.to_code());
        }
    })
}

/// Seeded input `i` of a sampled check; independent of the worker count.
fn sample_rng(config: &SweepConfig, check: CheckName, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(check as u64 * 1_000_003 + i as u64);
    rng
}

fn sampled(check: CheckName, config: &SweepConfig) -> CheckReport {
    let top = config.sample_max_chords;
    match check {
        CheckName::Skein => sharded(check, config, 2 * config.samples, |i, report| {
            let mut rng = sample_rng(config, check, i);
            let k = rng.gen_range(1..=top.max(1));
            let g = if i % 2 == 0 { random_knot(&mut rng, k) } else { random_two_component(&mut rng, k) };
            report.record(checks::skein(&g), || g.to_code());
        }),
        CheckName::OverLink => sharded(check, config, config.samples, |i, report| {
            let mut rng = sample_rng(config, check, i);
            let g = random_over_link(&mut rng, top.max(2));
            report.record(checks::over_link(&g), || g.to_code());
        }),
        CheckName::Block => sharded(check, config, config.samples, |i, report| {
            let mut rng = sample_rng(config, check, i);
            let (s0, x, y, a) = random_bordering(&mut rng, 6);
            report.record(checks::block(&s0, &x, &y, a), || {
                format!("S0={:?} x={x:?} y={y:?} a={a}", s0.to_rows())
            });
        }),
        _ => unreachable!("{check} is exhaustive"),
    }
}

/// A two-component diagram whose first circle has a self-crossing and lies
/// over the second at every crossing between them.
fn random_over_link<R: Rng>(rng: &mut R, max_chords: usize) -> BasedGaussDiagram {
    use crate::diagram::{Endpoint, Sign};
    use std::collections::BTreeMap;
    let k = rng.gen_range(2..=max_chords);
    let mut first: Vec<Endpoint> = Vec::new();
    let mut second: Vec<Endpoint> = Vec::new();
    let mut signs = BTreeMap::new();
    for c in 1..=k as u32 {
        let kind = if c == 1 { 0 } else { rng.gen_range(0..3) };
        let (t, h) = (Endpoint::tail(c), Endpoint::head(c));
        match kind {
            0 => {
                first.extend([t, h]);
            }
            1 => {
                second.extend([t, h]);
            }
            _ => {
                first.push(t);
                second.push(h);
            }
        }
        signs.insert(c, if rng.gen() { Sign::Pos } else { Sign::Neg });
    }
    use rand::seq::SliceRandom;
    first.shuffle(rng);
    second.shuffle(rng);
    BasedGaussDiagram::new(vec![first, second], signs).expect("generated words are valid")
}

fn random_bordering<R: Rng>(rng: &mut R, max_n: usize) -> (IntMatrix, Vec<i64>, Vec<i64>, i64) {
    let n = rng.gen_range(0..=max_n);
    let mut entry = || rng.gen_range(-9..=9);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| entry()).collect()).collect();
    let x = (0..n).map(|_| entry()).collect();
    let y = (0..n).map(|_| entry()).collect();
    let a = entry();
    let s0 = if n == 0 { IntMatrix::zeros(0, 0) } else { IntMatrix::from_rows(&rows) };
    (s0, x, y, a)
}

/// Runs a single check under `config`.
pub fn run_check(check: CheckName, config: &SweepConfig) -> CheckReport {
    let start = Instant::now();
    let mut report = if check.is_exhaustive() { exhaustive(check, config) } else { sampled(check, config) };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Runs every check enabled in `config`, in order.
pub fn run(config: &SweepConfig) -> Vec<CheckReport> {
    config.checks.iter().map(|&c| run_check(c, config)).collect()
}
