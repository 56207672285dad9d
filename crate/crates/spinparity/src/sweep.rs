//! Exhaustive verification campaigns over ranges of odd k.
//!
//! Work is partitioned by k: each odd k in range is one task, tasks run
//! concurrently on a rayon pool sized by `workers` (feature `parallel`;
//! without it everything runs sequentially and `workers` is ignored), and
//! per-k results are merged in ascending k order. Reports are therefore
//! deterministic: `checks_run` and the counterexample list never depend on
//! the worker count. A counterexample does not abort a sweep; the full
//! mismatch set in range is collected.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::floorcount::{n_count, target_parity, PairCountMethod};
use crate::intmath::gcd;
use crate::jacobi::{
    eisenstein_sign, gauss_schering_count, jacobi, jacobi_two, JacobiValue, OddModulus,
};

/// Which n values a sweep visits for each k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NPolicy {
    /// n in [1, k-1] with gcd(n, k) = gcd(n+1, k) = 1. Since the pair count
    /// is k-periodic in n, this range is exhaustive.
    CoprimePairs,
    /// Every n in [0, n_max], with no coprimality filter.
    AllN { n_max: i64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub k_min: i64,
    pub k_max: i64,
    pub n_policy: NPolicy,
    pub method: PairCountMethod,
    /// Worker threads. Execution metadata only: skipped during
    /// serialization so that reports are byte-identical across worker
    /// counts.
    #[serde(skip, default = "default_workers")]
    pub workers: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_min < 1 || self.k_min % 2 == 0 {
            return Err(Error::InvalidConfig(format!(
                "k_min must be an odd integer >= 1, got {}",
                self.k_min
            )));
        }
        if self.k_max % 2 == 0 || self.k_max < self.k_min {
            return Err(Error::InvalidConfig(format!(
                "k_max must be an odd integer >= k_min = {}, got {}",
                self.k_min, self.k_max
            )));
        }
        if let NPolicy::AllN { n_max } = self.n_policy {
            if n_max < 0 {
                return Err(Error::InvalidConfig(format!(
                    "n_max must be nonnegative, got {n_max}"
                )));
            }
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be positive".into()));
        }
        Ok(())
    }
}

/// One recorded mismatch. A record exists only when observed != expected.
/// For the law sweeps the `n` column carries the numerator a.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub k: i64,
    pub n: i64,
    pub observed: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Outcome of a verification campaign. `checks_run` counts every (k, n)
/// pair actually evaluated, independent of the worker count; the verdict is
/// PASS exactly when no counterexample was recorded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub checks_run: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

/// Default worker count: the SPINPARITY_JOBS environment variable when it
/// parses as a positive integer, otherwise the machine's available
/// parallelism. Flags override the environment.
pub fn default_workers() -> usize {
    if let Ok(raw) = std::env::var("SPINPARITY_JOBS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n > 0 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

#[derive(Default)]
struct KOutcome {
    checks: u64,
    bad: Vec<Counterexample>,
}

fn odd_range(k_min: i64, k_max: i64) -> Vec<i64> {
    (k_min..=k_max).step_by(2).collect()
}

#[cfg(feature = "parallel")]
fn for_each_k<T, F>(ks: Vec<i64>, workers: usize, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to build sweep thread pool");
    pool.install(|| ks.into_par_iter().map(task).collect())
}

#[cfg(not(feature = "parallel"))]
fn for_each_k<T, F>(ks: Vec<i64>, _workers: usize, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    ks.into_iter().map(task).collect()
}

/// Merge per-k outcomes in ascending k order; the first error in that order
/// wins, so even failures are deterministic.
fn merge(
    config: SweepConfig,
    outcomes: Vec<Result<KOutcome>>,
    started: Instant,
) -> Result<SweepReport> {
    let mut checks_run = 0u64;
    let mut counterexamples = Vec::new();
    for outcome in outcomes {
        let outcome = outcome?;
        checks_run += outcome.checks;
        counterexamples.extend(outcome.bad);
    }
    let verdict = if counterexamples.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(SweepReport {
        config,
        checks_run,
        counterexamples,
        elapsed_ms: started.elapsed().as_millis() as u64,
        verdict,
    })
}

/// For every odd k in range and every n in [1, k-1] passing the double
/// coprimality filter, check that the pair count N_k(n) has parity
/// floor((k+1)/4) mod 2.
pub fn sweep_conjecture(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    if cfg.n_policy != NPolicy::CoprimePairs {
        return Err(Error::InvalidConfig(
            "the conjecture sweep requires the coprime-pairs policy".into(),
        ));
    }
    let started = Instant::now();
    let method = cfg.method;
    let outcomes = for_each_k(odd_range(cfg.k_min, cfg.k_max), cfg.workers, move |k| {
        conjecture_for_k(k, method)
    });
    merge(cfg.clone(), outcomes, started)
}

fn conjecture_for_k(k: i64, method: PairCountMethod) -> Result<KOutcome> {
    let modulus = OddModulus::new(k).expect("odd_range yields odd positive k");
    let expected = i64::from(target_parity(modulus));
    let mut out = KOutcome::default();
    for n in 1..k {
        if gcd(n, k) != 1 || gcd(n + 1, k) != 1 {
            continue;
        }
        let count = n_count(n, modulus, method).map_err(|e| Error::at_check(k, n, e))?;
        out.checks += 1;
        let observed = (count % 2) as i64;
        if observed != expected {
            out.bad.push(Counterexample {
                check: "conjecture".into(),
                k,
                n,
                observed,
                expected,
            });
        }
    }
    Ok(out)
}

/// For every odd k in range and every n in [0, n_max] — with no coprimality
/// filter — check that the floor-identity count F_k(n+1) - F_k(n) equals the
/// brute-force pair enumeration. `cfg.method` is not consulted: the whole
/// point is the fixed comparison of those two routes.
pub fn sweep_identity(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let NPolicy::AllN { n_max } = cfg.n_policy else {
        return Err(Error::InvalidConfig(
            "the identity sweep requires the all-n policy".into(),
        ));
    };
    let started = Instant::now();
    let outcomes = for_each_k(odd_range(cfg.k_min, cfg.k_max), cfg.workers, move |k| {
        identity_for_k(k, n_max)
    });
    merge(cfg.clone(), outcomes, started)
}

fn identity_for_k(k: i64, n_max: i64) -> Result<KOutcome> {
    let modulus = OddModulus::new(k).expect("odd_range yields odd positive k");
    let mut out = KOutcome::default();
    for n in 0..=n_max {
        let expected =
            n_count(n, modulus, PairCountMethod::BrutePairs).map_err(|e| Error::at_check(k, n, e))?;
        let observed = n_count(n, modulus, PairCountMethod::FloorIdentity)
            .map_err(|e| Error::at_check(k, n, e))?;
        out.checks += 1;
        if observed != expected {
            out.bad.push(Counterexample {
                check: "identity".into(),
                k,
                n,
                observed: observed as i64,
                expected: expected as i64,
            });
        }
    }
    Ok(out)
}

/// For every odd k in [3, k_max], cross-check the three classical laws
/// against the binary algorithm: the Eisenstein sign over odd coprime a in
/// [1, 2k], the Gauss-Schering count over coprime a in [1, k-1], and the
/// supplementary law for (2/k). The echoed config carries the coprime-pairs
/// policy (descriptive: every law filters by coprimality) and the default
/// method, which this sweep does not consult.
pub fn sweep_laws(k_max: i64, workers: usize) -> Result<SweepReport> {
    if k_max < 3 || k_max % 2 == 0 {
        return Err(Error::InvalidConfig(format!(
            "the laws sweep requires an odd k_max >= 3, got {k_max}"
        )));
    }
    let cfg = SweepConfig {
        k_min: 3,
        k_max,
        n_policy: NPolicy::CoprimePairs,
        method: PairCountMethod::FloorIdentity,
        workers,
    };
    cfg.validate()?;
    let started = Instant::now();
    let outcomes = for_each_k(odd_range(cfg.k_min, cfg.k_max), cfg.workers, laws_for_k);
    merge(cfg, outcomes, started)
}

fn laws_for_k(k: i64) -> Result<KOutcome> {
    let modulus = OddModulus::new(k).expect("odd_range yields odd positive k");
    let mut out = KOutcome::default();
    let mut record = |check: &str, a: i64, observed: JacobiValue, expected: JacobiValue| {
        if observed != expected {
            out.bad.push(Counterexample {
                check: check.into(),
                k,
                n: a,
                observed: observed.value(),
                expected: expected.value(),
            });
        }
    };

    for a in (1..=2 * k).step_by(2) {
        if gcd(a, k) != 1 {
            continue;
        }
        let observed = eisenstein_sign(a, modulus).map_err(|e| Error::at_check(k, a, e))?;
        out.checks += 1;
        record("eisenstein", a, observed, jacobi(a, modulus));
    }

    for a in 1..k {
        if gcd(a, k) != 1 {
            continue;
        }
        let count = gauss_schering_count(a, modulus).map_err(|e| Error::at_check(k, a, e))?;
        out.checks += 1;
        record(
            "gauss_schering",
            a,
            JacobiValue::from_parity(count as i64),
            jacobi(a, modulus),
        );
    }

    out.checks += 1;
    record("supplementary", 2, jacobi_two(modulus), jacobi(2, modulus));

    Ok(out)
}
