//! Suite configuration, guards, exit codes and JSON reporting.

pub mod commands;
pub mod suites;

use exactcore::{q, Q};
use fock::Case;
use rayon::prelude::*;
use serde::Serialize;

pub const SCHEMA: u32 = 1;
pub const MAX_LOG_DIM: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("non-generic parameters: {0}")]
    Genericity(String),
    #[error("{0}")]
    Compute(String),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Usage(_) => 2,
            HarnessError::Genericity(_) => 3,
            HarnessError::Compute(_) => 1,
        }
    }
}

impl From<intertwine::IntError> for HarnessError {
    fn from(e: intertwine::IntError) -> Self {
        match e {
            intertwine::IntError::Genericity(s) | intertwine::IntError::Mod(modules::ModError::NonGeneric(s)) => HarnessError::Genericity(s),
            e => HarnessError::Compute(e.to_string()),
        }
    }
}

impl From<modules::ModError> for HarnessError {
    fn from(e: modules::ModError) -> Self {
        match e {
            modules::ModError::NonGeneric(s) => HarnessError::Genericity(s),
            e => HarnessError::Compute(e.to_string()),
        }
    }
}

macro_rules! compute_err {
    ($($t:ty),*) => {$(
        impl From<$t> for HarnessError {
            fn from(e: $t) -> Self {
                HarnessError::Compute(e.to_string())
            }
        }
    )*};
}
compute_err!(exactcore::ExactError, yangian::YangError, liealg::LieError, weyl::WeylError, fock::FockError);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Clifford,
    Liealg,
    Braid,
    Beta,
    Olshanski,
    Isis,
}

impl Suite {
    pub const ALL: [Suite; 7] = [Suite::Axioms, Suite::Clifford, Suite::Liealg, Suite::Braid, Suite::Beta, Suite::Olshanski, Suite::Isis];
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub case: Case,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    /// Truncation order for series checks.
    pub k: usize,
    pub mu: Vec<Q>,
    pub suites: Vec<Suite>,
    /// Adds `u^{-1}` times a matrix unit to one entry of each checked realization.
    pub fault: bool,
}

/// Generic labels used when none are given.
pub fn default_mu(m: usize) -> Vec<Q> {
    [q(5, 7), q(2, 11), q(3, 13), q(4, 17)].into_iter().cycle().take(m).collect()
}

impl Config {
    pub fn new(case: Case, m: usize, n: usize) -> Self {
        Config { case, m, n, l: 0, k: 12, mu: default_mu(m), suites: Suite::ALL.to_vec(), fault: false }
    }

    pub fn guard(&self) -> Result<(), HarnessError> {
        guard_dims(self.case, self.m, self.n, self.l)?;
        if self.mu.len() != self.m {
            return Err(HarnessError::Usage(format!("{} labels given for m = {}", self.mu.len(), self.m)));
        }
        Ok(())
    }
}

/// `n ≥ 1`, symplectic `n` and `l` even, and `2^{m·(n+l)} ≤ 2^12`.
pub fn guard_dims(case: Case, m: usize, n: usize, l: usize) -> Result<(), HarnessError> {
    if n == 0 {
        return Err(HarnessError::Usage("n must be positive".into()));
    }
    if case == Case::Symp && n % 2 == 1 {
        return Err(HarnessError::Usage(format!("symplectic case needs even n, got {n}")));
    }
    if case == Case::Symp && l % 2 == 1 {
        return Err(HarnessError::Usage(format!("symplectic case needs even l, got {l}")));
    }
    if m * (n + l) > MAX_LOG_DIM {
        return Err(HarnessError::Usage(format!("Fock dimension 2^{} exceeds 2^{MAX_LOG_DIM}", m * (n + l))));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    /// Short name of the identity being checked.
    pub anchor: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub type CheckFn = Box<dyn Fn() -> Result<(bool, String), HarnessError> + Send + Sync>;

pub struct Item {
    pub name: String,
    pub anchor: &'static str,
    pub run: CheckFn,
}

impl Item {
    pub fn new(name: impl Into<String>, anchor: &'static str, run: impl Fn() -> Result<(bool, String), HarnessError> + Send + Sync + 'static) -> Self {
        Item { name: name.into(), anchor, run: Box::new(run) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl Report {
    pub fn failing(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// Runs the selected suites; items run in a pool, results keep declaration order.
pub fn run(cfg: &Config) -> Result<Report, HarnessError> {
    cfg.guard()?;
    let mut tagged = vec![];
    for &s in &cfg.suites {
        tagged.extend(suites::items(s, cfg)?.into_iter().map(|it| (s, it)));
    }
    let checks: Vec<CheckResult> = tagged
        .par_iter()
        .map(|(s, it)| {
            let (pass, detail) = match (it.run)() {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult { suite: *s, name: it.name.clone(), anchor: it.anchor, pass, detail }
        })
        .collect();
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report { schema: SCHEMA, config: cfg.clone(), checks, pass })
}
