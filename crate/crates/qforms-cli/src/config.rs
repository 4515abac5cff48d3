//! Sweep configuration and the theorem regimes it may assert.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Integer entries uniform in [-bound, bound].
    #[default]
    Generic,
    /// Three-by-three systems constructed to have a vanishing pair
    /// determinant (exactly dependent squares).
    DependentConstructed,
    /// Generic entries with injected degeneracies: zero rows, duplicated
    /// rows, common two-coordinate support, proportional rows.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub r: usize,
    pub m: usize,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub bound: i64,
    pub mode: Mode,
    /// Allow sweeps outside the proven (r, m, k) regimes; those report
    /// frequencies without asserting the equivalence.
    pub override_regime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("r must be at least 2 (got {0})")]
    RankTooSmall(usize),
    #[error("m must be at least 1 (got {0})")]
    CoRankTooSmall(usize),
    #[error("k = {k} out of range 1..={l}")]
    KOutOfRange { k: usize, l: usize },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("bound must be at least 1 (got {0})")]
    BadBound(i64),
    #[error("constructed-dependent generation requires r = m = 3 (got r = {r}, m = {m})")]
    ConstructedShape { r: usize, m: usize },
    #[error(
        "(r = {r}, m = {m}, k = {k}) is outside the proven regimes \
         (k = 2 with r = 2 or m = 2; k = 3 with r = m = 3); \
         pass the override flag for an observational sweep"
    )]
    OutOfRegime { r: usize, m: usize, k: usize },
}

impl TrialConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.r < 2 {
            return Err(ConfigError::RankTooSmall(self.r));
        }
        if self.m < 1 {
            return Err(ConfigError::CoRankTooSmall(self.m));
        }
        let l = self.r + self.m;
        if self.k == 0 || self.k > l {
            return Err(ConfigError::KOutOfRange { k: self.k, l });
        }
        if self.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        if self.bound < 1 {
            return Err(ConfigError::BadBound(self.bound));
        }
        if self.mode == Mode::DependentConstructed && (self.r != 3 || self.m != 3) {
            return Err(ConfigError::ConstructedShape {
                r: self.r,
                m: self.m,
            });
        }
        Ok(())
    }

    /// True when the (r, m, k) triple lies in a proven equivalence regime.
    pub fn in_theorem_regime(&self) -> bool {
        (self.k == 2 && (self.r == 2 || self.m == 2)) || (self.k == 3 && self.r == 3 && self.m == 3)
    }
}
