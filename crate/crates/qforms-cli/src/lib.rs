//! Harness library behind the `qforms` binary: trial configuration,
//! deterministic instance generation, equivalence sweeps, and the JSON
//! wire formats.

pub mod config;
pub mod gen;
pub mod schema;
pub mod sweep;

pub use config::{Mode, TrialConfig};
pub use schema::InstanceDoc;
pub use sweep::{run_theorem_sweep, TrialReport};
