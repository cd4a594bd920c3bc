//! Named verification suites that check the identities between the families exactly.
//!
//! Each suite enumerates its cases up to [`Bounds`], evaluates them in parallel and
//! reports the first counterexample in enumeration order, so reports are
//! deterministic regardless of the thread count. The pool size is read from the
//! `BCINTERP_THREADS` environment variable when set.

mod suites;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational};

/// Environment variable holding the number of worker threads.
pub const THREADS_ENV: &str = "BCINTERP_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Interpolation polynomials vanish at non-containing nodes and match their node values.
    Vanishing,
    /// Special values agree with the closed products.
    Evaluation,
    /// Macdonald and Koornwinder duality under random generic parameters.
    Duality,
    /// Binomial formulas, monicity, triangularity and parameter symmetry.
    Binomial,
    /// Constant-term and Beta-moment orthogonality.
    Orthogonality,
    /// Stripping full columns off BC interpolation polynomials.
    Reduction,
    /// General code at `n = 2` against the closed two-variable forms.
    #[serde(rename = "oracle-n2")]
    OracleN2,
    /// One-variable identities.
    Prelude,
    /// Every registered limit relation.
    Limits,
    /// Tableau weights of distinguished tableaux.
    Anchors,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Vanishing,
        Suite::Evaluation,
        Suite::Duality,
        Suite::Binomial,
        Suite::Orthogonality,
        Suite::Reduction,
        Suite::OracleN2,
        Suite::Prelude,
        Suite::Limits,
        Suite::Anchors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Vanishing => "vanishing",
            Suite::Evaluation => "evaluation",
            Suite::Duality => "duality",
            Suite::Binomial => "binomial",
            Suite::Orthogonality => "orthogonality",
            Suite::Reduction => "reduction",
            Suite::OracleN2 => "oracle-n2",
            Suite::Prelude => "prelude",
            Suite::Limits => "limits",
            Suite::Anchors => "anchors",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Largest partition weight and number of variables a suite enumerates.
///
/// Suites tied to a fixed number of variables (two-variable forms, one-variable
/// identities) ignore `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_weight: usize,
    pub n: usize,
}

impl Bounds {
    pub fn new(max_weight: usize, n: usize) -> Self {
        Bounds { max_weight, n }
    }
}

/// The first identity that failed, with enough data to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub identity: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SuiteStatus {
    Ok,
    Failed(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bounds: Bounds,
    /// Number of individual equalities checked.
    pub checks: usize,
    pub status: SuiteStatus,
}

impl SuiteReport {
    pub fn is_ok(&self) -> bool {
        self.status == SuiteStatus::Ok
    }
}

/// Seed and number of random parameter draws for suites that sample parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub draws: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 20_240_601, draws: 3 }
    }
}

/// Accumulates checks; keeps the first failure.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    checks: usize,
    failure: Option<Witness>,
}

impl Tally {
    pub(crate) fn check(&mut self, ok: bool, identity: &str, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(Witness {
                identity: identity.to_string(),
                detail: detail(),
            });
        }
    }

    pub(crate) fn eq<T: PartialEq + fmt::Debug>(&mut self, lhs: &T, rhs: &T, identity: &str, ctx: impl FnOnce() -> String) {
        self.check(lhs == rhs, identity, || format!("{}: {lhs:?} != {rhs:?}", ctx()));
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

/// Run `case` over `items` in parallel and merge the tallies in input order.
pub(crate) fn par_cases<T: Sync>(items: &[T], case: impl Fn(&T) -> Result<Tally> + Sync) -> Result<Tally> {
    let parts: Vec<Tally> = items.par_iter().map(&case).collect::<Result<_>>()?;
    let mut acc = Tally::default();
    for p in parts {
        acc.merge(p);
    }
    Ok(acc)
}

/// A small nonzero rational `p/d` with `|p|, d ≤ 9`, avoiding `±1`.
pub(crate) fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=9);
        let r = rat(p, d);
        if p != 0 && r != rat(1, 1) && r != rat(-1, 1) {
            return r;
        }
    }
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Run a suite with the default configuration.
pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<SuiteReport> {
    run_suite_with(suite, bounds, SuiteConfig::default())
}

pub fn run_suite_with(suite: Suite, bounds: Bounds, config: SuiteConfig) -> Result<SuiteReport> {
    let body = || -> Result<Tally> {
        match suite {
            Suite::Vanishing => suites::vanishing(bounds),
            Suite::Evaluation => suites::evaluation(bounds),
            Suite::Duality => suites::duality(bounds, config),
            Suite::Binomial => suites::binomial(bounds),
            Suite::Orthogonality => suites::orthogonality(bounds),
            Suite::Reduction => suites::reduction(bounds),
            Suite::OracleN2 => suites::oracle_n2(bounds),
            Suite::Prelude => suites::prelude(bounds),
            Suite::Limits => suites::limits(bounds),
            Suite::Anchors => suites::anchors(bounds),
        }
    };
    let tally = match thread_count()? {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Incompatible(format!("thread pool: {e}")))?
            .install(body)?,
        None => body()?,
    };
    Ok(SuiteReport {
        suite,
        bounds,
        checks: tally.checks,
        status: match tally.failure {
            None => SuiteStatus::Ok,
            Some(w) => SuiteStatus::Failed(w),
        },
    })
}

fn thread_count() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .map(Some)
            .ok_or_else(|| Error::Parse(format!("{THREADS_ENV}={v} is not a positive integer"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
            let json = serde_json::to_string(&s).unwrap();
            assert_eq!(json, format!("\"{}\"", s.name()));
        }
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let report = run_suite(s, Bounds::new(2, 2)).unwrap();
            assert!(report.is_ok(), "{s}: {:?}", report.status);
            assert!(report.checks > 0, "{s} checked nothing");
        }
    }

    #[test]
    fn tally_keeps_first_failure() {
        let mut t = Tally::default();
        t.check(true, "a", String::new);
        t.check(false, "b", || "first".into());
        t.check(false, "c", || "second".into());
        assert_eq!(t.checks, 3);
        assert_eq!(t.failure.unwrap().identity, "b");
    }
}
