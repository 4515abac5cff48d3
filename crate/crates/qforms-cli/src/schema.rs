//! JSON wire formats. Rationals travel as strings ("5", "-3/7") so
//! exactness survives serialization; no floats anywhere.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use qforms::independence::{
    Cor22Classification, IndependenceReport, LinearFormSystem, Verdict,
};
use qforms::rat::{parse_rational, RatError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Version(u32),
    #[error("field m = {m} disagrees with {rows} coefficient rows")]
    CoRankMismatch { m: usize, rows: usize },
    #[error("row {row} has {got} entries, expected r = {expected}")]
    RowLength {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}): {source}")]
    BadRational {
        row: usize,
        col: usize,
        source: RatError,
    },
    #[error("invalid system: {0}")]
    System(String),
}

/// Instance document: `{"schema": 1, "r": .., "m": .., "A": [["1","1"], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub schema: u32,
    pub r: usize,
    pub m: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
}

impl InstanceDoc {
    pub fn from_system(sys: &LinearFormSystem) -> InstanceDoc {
        InstanceDoc {
            schema: SCHEMA_VERSION,
            r: sys.r(),
            m: sys.m(),
            a: sys
                .forms()
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<LinearFormSystem, SchemaError> {
        if self.schema != SCHEMA_VERSION {
            return Err(SchemaError::Version(self.schema));
        }
        if self.a.len() != self.m {
            return Err(SchemaError::CoRankMismatch {
                m: self.m,
                rows: self.a.len(),
            });
        }
        let mut rows = Vec::with_capacity(self.a.len());
        for (i, row) in self.a.iter().enumerate() {
            if row.len() != self.r {
                return Err(SchemaError::RowLength {
                    row: i,
                    got: row.len(),
                    expected: self.r,
                });
            }
            let mut out = Vec::with_capacity(row.len());
            for (j, cell) in row.iter().enumerate() {
                out.push(parse_rational(cell).map_err(|source| SchemaError::BadRational {
                    row: i,
                    col: j,
                    source,
                })?);
            }
            rows.push(out);
        }
        LinearFormSystem::new(self.r, rows).map_err(|e| SchemaError::System(e.to_string()))
    }

    /// SHA-256 of the canonical serialization; stable across runs.
    pub fn digest(&self) -> String {
        let json = serde_json::to_string(self).expect("instance serializes");
        hex::encode(Sha256::digest(json.as_bytes()))
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Independent => "independent",
        Verdict::Dependent => "dependent",
    }
}

/// Report of `check-s1` / `check-sk` / `witness`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub verdict: String,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Present on reports whose witness was re-validated by expansion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_validated: Option<bool>,
}

impl CheckReport {
    pub fn new(check: &str, k: Option<usize>, report: &IndependenceReport) -> CheckReport {
        CheckReport {
            schema: SCHEMA_VERSION,
            check: check.to_string(),
            k,
            verdict: verdict_str(report.verdict).to_string(),
            rank: report.rank,
            witness: report
                .witness
                .as_ref()
                .map(|w| w.iter().map(|x| x.to_string()).collect()),
            witness_validated: None,
        }
    }
}

/// Report of `classify-m2`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<[usize; 2]>,
    pub verdict: String,
}

impl ClassifyReport {
    pub fn new(class: &Cor22Classification) -> ClassifyReport {
        let (case, support) = match class {
            Cor22Classification::Independent => ("independent", None),
            Cor22Classification::CondA => ("condA", None),
            Cor22Classification::CondB { m, n } => ("condB", Some([*m, *n])),
            Cor22Classification::RankDefect => ("rankDefect", None),
        };
        ClassifyReport {
            schema: SCHEMA_VERSION,
            case: case.to_string(),
            support,
            verdict: if class.is_independent() {
                "independent".to_string()
            } else {
                "dependent".to_string()
            },
        }
    }
}

/// One identity's verification status.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_terms: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub schema: u32,
    pub results: Vec<IdentityResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restriction_check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permanent_trace_check: Option<String>,
    pub all_hold: bool,
}

/// One traced system in the `trace-systems` report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TracedSystemReport {
    pub case: String,
    pub assumptions: Vec<String>,
    pub unknowns: Vec<String>,
    pub monomials: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_unknown: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<String>>,
    pub determinant: String,
    pub golden: String,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceReport {
    pub schema: u32,
    pub systems: Vec<TracedSystemReport>,
    pub case4_solution: String,
    pub all_match: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforms::rat::{frac, int};

    #[test]
    fn instance_roundtrip() {
        let sys = LinearFormSystem::new(
            3,
            vec![
                vec![int(1), int(1), int(1)],
                vec![frac(1, 2), int(-3), int(0)],
            ],
        )
        .unwrap();
        let doc = InstanceDoc::from_system(&sys);
        assert_eq!(doc.a[1][0], "1/2");
        let back = doc.to_system().unwrap();
        assert_eq!(back, sys);
        assert_eq!(doc.digest(), doc.digest());
    }

    #[test]
    fn instance_validation_errors() {
        let doc = InstanceDoc {
            schema: 99,
            r: 2,
            m: 0,
            a: vec![],
        };
        assert!(matches!(doc.to_system(), Err(SchemaError::Version(99))));

        let doc = InstanceDoc {
            schema: 1,
            r: 2,
            m: 2,
            a: vec![vec!["1".into(), "2".into()]],
        };
        assert!(matches!(
            doc.to_system(),
            Err(SchemaError::CoRankMismatch { .. })
        ));

        let doc = InstanceDoc {
            schema: 1,
            r: 2,
            m: 1,
            a: vec![vec!["1".into(), "1/0".into()]],
        };
        assert!(matches!(
            doc.to_system(),
            Err(SchemaError::BadRational { .. })
        ));
    }
}
