//! Deterministic instance generation: every instance is a pure function
//! of (seed, trial index).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use qforms::independence::{pair_matrix, LinearFormSystem};
use qforms::rat::{int, Rational};

use crate::config::{ConfigError, Mode, TrialConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("gave up solving the dependence constraint after {0} resamples")]
    RetryCapExhausted(u32),
}

fn rng_for(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index.wrapping_add(1));
    rng
}

fn sample_rows(rng: &mut ChaCha8Rng, r: usize, m: usize, bound: i64) -> Vec<Vec<Rational>> {
    (0..m)
        .map(|_| (0..r).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect()
}

/// Deterministic instance for one trial. Generic mode samples uniform
/// integer entries; degenerate mode overlays one of four degeneracy
/// patterns in fixed rotation (zero row, duplicated row, common
/// two-coordinate support, proportional row).
pub fn gen_instance(cfg: &TrialConfig, trial_index: u64) -> Result<LinearFormSystem, GenError> {
    cfg.validate()?;
    let mut rng = rng_for(cfg.seed, trial_index);
    match cfg.mode {
        Mode::Generic => {
            let rows = sample_rows(&mut rng, cfg.r, cfg.m, cfg.bound);
            Ok(LinearFormSystem::new(cfg.r, rows).expect("sampled rows fit"))
        }
        Mode::Degenerate => {
            let mut rows = sample_rows(&mut rng, cfg.r, cfg.m, cfg.bound);
            match trial_index % 4 {
                0 => rows[0] = vec![int(0); cfg.r],
                1 if cfg.m >= 2 => rows[1] = rows[0].clone(),
                2 => {
                    // both leading forms supported on the first two coordinates
                    for row in rows.iter_mut().take(2) {
                        for x in row.iter_mut().skip(2) {
                            *x = int(0);
                        }
                    }
                }
                _ => {
                    if cfg.m >= 2 {
                        rows[1] = rows[0].iter().map(|x| x * int(2)).collect();
                    } else {
                        rows[0] = vec![int(0); cfg.r];
                    }
                }
            }
            Ok(LinearFormSystem::new(cfg.r, rows).expect("sampled rows fit"))
        }
        Mode::DependentConstructed => gen_dependent_r3m3(cfg.seed, trial_index, cfg.bound),
    }
}

/// Solves for the c2 that kills the pair determinant of the 3x3 system
/// with rows a, b, (c1, c2, 1); `None` when the determinant does not
/// depend on c2 (degenerate slope).
pub fn solve_c2(a: &[Rational], b: &[Rational], c1: &Rational) -> Option<Rational> {
    let det_at = |c2: Rational| -> Rational {
        let c = vec![c1.clone(), c2, int(1)];
        let sys = LinearFormSystem::new(3, vec![a.to_vec(), b.to_vec(), c]).expect("3x3 rows");
        pair_matrix(&sys)
            .expect("r = 3, m = 3")
            .det()
            .expect("square pair matrix")
    };
    let d0 = det_at(int(0));
    let d1 = det_at(int(1));
    let slope = &d1 - &d0;
    if slope == int(0) {
        return None;
    }
    Some(-&d0 / &slope)
}

const RETRY_CAP: u32 = 64;

/// Three-by-three instance with an exactly vanishing pair determinant:
/// rows a and b are free, c3 is pinned to 1, c1 is sampled, and c2 solves
/// the (linear) dependence constraint. Resamples on a degenerate slope,
/// up to a retry cap.
pub fn gen_dependent_r3m3(
    seed: u64,
    trial_index: u64,
    bound: i64,
) -> Result<LinearFormSystem, GenError> {
    let mut rng = rng_for(seed, trial_index);
    for _ in 0..RETRY_CAP {
        let a: Vec<Rational> = (0..3).map(|_| int(rng.gen_range(-bound..=bound))).collect();
        let b: Vec<Rational> = (0..3).map(|_| int(rng.gen_range(-bound..=bound))).collect();
        let c1 = int(rng.gen_range(-bound..=bound));
        let Some(c2) = solve_c2(&a, &b, &c1) else {
            continue;
        };
        let sys = LinearFormSystem::new(3, vec![a, b, vec![c1, c2, int(1)]]).expect("3x3 rows");
        debug_assert_eq!(
            pair_matrix(&sys).unwrap().det().unwrap(),
            int(0),
            "constructed instance must have a vanishing pair determinant"
        );
        return Ok(sys);
    }
    Err(GenError::RetryCapExhausted(RETRY_CAP))
}
