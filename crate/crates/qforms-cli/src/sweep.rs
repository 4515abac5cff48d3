//! Equivalence sweeps over seeded instance families.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use qforms::independence::{
    s1_independent, sk_independent, validate_witness, IndependenceError, Verdict,
};

use crate::config::{ConfigError, TrialConfig};
use crate::gen::{gen_instance, GenError};
use crate::schema::{verdict_str, InstanceDoc, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Independence(#[from] IndependenceError),
    #[error("witness failed expansion validation on trial {0}")]
    BadWitness(u64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: u64,
    pub digest: String,
    pub s1: String,
    pub sk: String,
    pub equivalent: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailurePayload {
    pub index: u64,
    pub instance: InstanceDoc,
    pub s1: String,
    pub sk: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SweepCounts {
    pub trials: u64,
    pub s1_independent: u64,
    pub s1_dependent: u64,
    pub sk_independent: u64,
    pub sk_dependent: u64,
    pub equivalent: u64,
    pub violations: u64,
}

/// Sweep outcome. `generated_at` is a timestamp and is excluded from
/// report comparisons; everything else is a pure function of the config.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialReport {
    pub schema: u32,
    pub version: String,
    pub generated_at: String,
    /// True when the config sits in a proven regime and the sweep asserts
    /// the equivalence (violations are hard failures); false for
    /// observational sweeps.
    pub asserted: bool,
    pub config: TrialConfig,
    pub counts: SweepCounts,
    pub records: Vec<TrialRecord>,
    pub failures: Vec<FailurePayload>,
}

/// Runs the sweep: for each trial, decide the base set and its k-products,
/// check the biconditional, and record. Every dependency witness is
/// re-validated by full expansion before it is trusted.
pub fn run_theorem_sweep(cfg: &TrialConfig) -> Result<TrialReport, SweepError> {
    cfg.validate()?;
    if !cfg.in_theorem_regime() && !cfg.override_regime {
        return Err(SweepError::Config(ConfigError::OutOfRegime {
            r: cfg.r,
            m: cfg.m,
            k: cfg.k,
        }));
    }
    let asserted = cfg.in_theorem_regime();
    let mut counts = SweepCounts::default();
    let mut records = Vec::with_capacity(cfg.trials as usize);
    let mut failures = Vec::new();
    for index in 0..cfg.trials {
        let sys = gen_instance(cfg, index)?;
        let s1 = s1_independent(&sys)?;
        let sk = sk_independent(&sys, cfg.k)?;
        let (_, base_polys) = sys.materialize();
        if let Some(w) = &s1.witness {
            if !validate_witness(&base_polys, w) {
                return Err(SweepError::BadWitness(index));
            }
        }
        if let Some(w) = &sk.witness {
            let products = qforms::independence::k_products(&base_polys, cfg.k)?;
            if !validate_witness(&products, w) {
                return Err(SweepError::BadWitness(index));
            }
        }
        let equivalent = s1.verdict == sk.verdict;
        counts.trials += 1;
        match s1.verdict {
            Verdict::Independent => counts.s1_independent += 1,
            Verdict::Dependent => counts.s1_dependent += 1,
        }
        match sk.verdict {
            Verdict::Independent => counts.sk_independent += 1,
            Verdict::Dependent => counts.sk_dependent += 1,
        }
        if equivalent {
            counts.equivalent += 1;
        } else {
            counts.violations += 1;
            failures.push(FailurePayload {
                index,
                instance: InstanceDoc::from_system(&sys),
                s1: verdict_str(s1.verdict).to_string(),
                sk: verdict_str(sk.verdict).to_string(),
            });
        }
        records.push(TrialRecord {
            index,
            digest: InstanceDoc::from_system(&sys).digest(),
            s1: verdict_str(s1.verdict).to_string(),
            sk: verdict_str(sk.verdict).to_string(),
            equivalent,
        });
    }
    Ok(TrialReport {
        schema: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").to_string(),
        generated_at: chrono::Utc::now().to_rfc3339(),
        asserted,
        config: cfg.clone(),
        counts,
        records,
        failures,
    })
}
