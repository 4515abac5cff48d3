//! `qforms` — exact decisions about squared linear forms and their
//! k-products, identity verification, and seeded equivalence sweeps.
//!
//! Exit codes: 0 when the answer is "independent"/"holds", 1 when it is
//! "dependent"/"fails", 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use qforms::identity::{
    build_identity, case4_solution_check, golden_determinants, permanent_trace_check,
    restriction_check, trace_system, unknown_label, verify_identity, TraceCase, VerifyOutcome,
};
use qforms::independence::{
    cor22_classify, k_products, s1_independent, sk_independent, validate_witness,
    IndependenceReport, LinearFormSystem,
};

use qforms_cli::config::{Mode, TrialConfig};
use qforms_cli::schema::{
    CheckReport, ClassifyReport, IdentityReport, IdentityResult, InstanceDoc, TraceReport,
    TracedSystemReport, SCHEMA_VERSION,
};
use qforms_cli::sweep::run_theorem_sweep;

#[derive(Parser)]
#[command(
    name = "qforms",
    version,
    about = "Exact linear independence of squared linear forms, their k-products, and the identities behind them"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide independence of the base squares via the pair-matrix rank
    /// criterion; emits a validated witness when dependent.
    CheckS1 {
        /// Instance JSON: {"schema":1,"r":..,"m":..,"A":[["1","-3/7",..],..]}
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Decide independence of the k-fold products by brute-force
    /// coefficient-matrix rank.
    CheckSk {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Structural classification for systems with two extra forms.
    ClassifyM2 {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Extract and validate a dependency witness (base squares by
    /// default, k-products with --k).
    Witness {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Verify the built-in identities by full symbolic expansion.
    VerifyIdentity {
        /// Verify a single product identity of this order (1, 2, or 3).
        #[arg(long)]
        n: Option<usize>,
        /// Verify the whole catalog plus the restriction and
        /// permanent-trace checks (default when --n is absent).
        #[arg(long)]
        all: bool,
    },
    /// Build the traced linear systems, compare their determinants with
    /// the golden closed forms, and check the closed-form solution.
    TraceSystems {
        /// Restrict the report to one case (C1a, C1b, C2a, C2b, C2c, C2d, C3, C4).
        #[arg(long)]
        case: Option<String>,
    },
    /// Seeded equivalence sweep between the base squares and their
    /// k-products.
    Sweep {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Coefficient magnitude bound for sampled entries.
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Mode::Generic)]
        mode: Mode,
        /// Run outside the proven (r, m, k) regimes, reporting
        /// frequencies without asserting the equivalence.
        #[arg(long)]
        allow_out_of_theorem: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_instance(path: &PathBuf) -> Result<LinearFormSystem> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading instance file {}", path.display()))?;
    let doc: InstanceDoc = serde_json::from_str(&text)
        .with_context(|| format!("parsing instance JSON {}", path.display()))?;
    Ok(doc.to_system()?)
}

fn emit<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Re-validates a witness by full expansion before it is serialized.
fn ensure_witness_valid(
    report: &IndependenceReport,
    polys: &[qforms::poly::Polynomial],
) -> Result<()> {
    if let Some(w) = &report.witness {
        if !validate_witness(polys, w) {
            return Err(anyhow!("internal error: witness failed expansion validation"));
        }
    }
    Ok(())
}

fn verdict_code(report: &IndependenceReport) -> u8 {
    if report.is_independent() {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::CheckS1 { input } => {
            let sys = read_instance(&input)?;
            let report = s1_independent(&sys)?;
            let (_, polys) = sys.materialize();
            ensure_witness_valid(&report, &polys)?;
            emit(&CheckReport::new("s1", None, &report))?;
            Ok(verdict_code(&report))
        }
        Cmd::CheckSk { input, k } => {
            let sys = read_instance(&input)?;
            let report = sk_independent(&sys, k)?;
            let (_, polys) = sys.materialize();
            let products = k_products(&polys, k)?;
            ensure_witness_valid(&report, &products)?;
            emit(&CheckReport::new("sk", Some(k), &report))?;
            Ok(verdict_code(&report))
        }
        Cmd::ClassifyM2 { input } => {
            let sys = read_instance(&input)?;
            let class = cor22_classify(&sys)?;
            let report = ClassifyReport::new(&class);
            emit(&report)?;
            Ok(if class.is_independent() { 0 } else { 1 })
        }
        Cmd::Witness { input, k } => {
            let sys = read_instance(&input)?;
            let (_, polys) = sys.materialize();
            let (label, report, against) = match k {
                None | Some(1) => {
                    let report = s1_independent(&sys)?;
                    ("s1", report, polys)
                }
                Some(k) => {
                    let report = sk_independent(&sys, k)?;
                    let products = k_products(&polys, k)?;
                    ("sk", report, products)
                }
            };
            ensure_witness_valid(&report, &against)?;
            let mut out = CheckReport::new(label, k, &report);
            if out.witness.is_some() {
                out.witness_validated = Some(true);
            }
            emit(&out)?;
            Ok(verdict_code(&report))
        }
        Cmd::VerifyIdentity { n, all } => {
            let mut results = Vec::new();
            let mut all_hold = true;
            let mut restriction = None;
            let mut permanent = None;
            let instances = match (n, all) {
                (Some(n), false) => vec![build_identity(n)?],
                (None, _) | (_, true) => qforms::identity::catalog(),
            };
            for inst in &instances {
                match verify_identity(inst) {
                    VerifyOutcome::Holds => results.push(IdentityResult {
                        name: inst.name.to_string(),
                        status: "holds".to_string(),
                        residual_terms: None,
                    }),
                    VerifyOutcome::Fails { residual } => {
                        all_hold = false;
                        results.push(IdentityResult {
                            name: inst.name.to_string(),
                            status: "fails".to_string(),
                            residual_terms: Some(residual.num_terms()),
                        });
                    }
                }
            }
            if n.is_none() || all {
                let r = restriction_check();
                if r.is_err() {
                    all_hold = false;
                }
                restriction = Some(status_of(r));
                let p = permanent_trace_check();
                if p.is_err() {
                    all_hold = false;
                }
                permanent = Some(status_of(p));
            }
            emit(&IdentityReport {
                schema: SCHEMA_VERSION,
                results,
                restriction_check: restriction,
                permanent_trace_check: permanent,
                all_hold,
            })?;
            Ok(if all_hold { 0 } else { 1 })
        }
        Cmd::TraceSystems { case } => {
            let filter = match &case {
                Some(name) => Some(
                    TraceCase::from_name(name)
                        .ok_or_else(|| anyhow!("unknown case `{name}`"))?,
                ),
                None => None,
            };
            let mut systems = Vec::new();
            let mut all_match = true;
            for golden in golden_determinants()? {
                if let Some(f) = filter {
                    if golden.case != f {
                        continue;
                    }
                }
                let ts = trace_system(golden.case)?;
                if !golden.matches {
                    all_match = false;
                }
                systems.push(TracedSystemReport {
                    case: golden.case.name().to_string(),
                    assumptions: ts.assumptions.clone(),
                    unknowns: ts.unknowns.iter().map(|u| unknown_label(*u)).collect(),
                    monomials: ts
                        .rows
                        .iter()
                        .map(|e| format!("z1^{}*z2^{}*z3^{}", e[0], e[1], e[2]))
                        .collect(),
                    matrix: ts
                        .matrix
                        .iter()
                        .map(|row| row.iter().map(|p| p.to_string()).collect())
                        .collect(),
                    rhs_unknown: ts.rhs.as_ref().map(|(u, _)| unknown_label(*u)),
                    rhs: ts
                        .rhs
                        .as_ref()
                        .map(|(_, col)| col.iter().map(|p| p.to_string()).collect()),
                    determinant: golden.determinant.to_string(),
                    golden: golden.expected.to_string(),
                    matches: golden.matches,
                });
            }
            let case4 = case4_solution_check();
            if case4.is_err() {
                all_match = false;
            }
            emit(&TraceReport {
                schema: SCHEMA_VERSION,
                systems,
                case4_solution: status_of(case4),
                all_match,
            })?;
            Ok(if all_match { 0 } else { 1 })
        }
        Cmd::Sweep {
            r,
            m,
            k,
            trials,
            seed,
            bound,
            mode,
            allow_out_of_theorem,
        } => {
            let cfg = TrialConfig {
                r,
                m,
                k,
                trials,
                seed,
                bound,
                mode,
                override_regime: allow_out_of_theorem,
            };
            let report = run_theorem_sweep(&cfg)?;
            // observational sweeps report frequencies without asserting
            let ok = !report.asserted || report.counts.violations == 0;
            emit(&report)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn status_of(r: Result<(), qforms::identity::CheckFailure>) -> String {
    match r {
        Ok(()) => "holds".to_string(),
        Err(e) => format!("fails: {e}"),
    }
}
