use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::term::Identity;
use super::TernaryOps;
use crate::error::{Error, Result};

pub const DEFAULT_TUPLE_BUDGET: u128 = 10_000_000;
pub const DEFAULT_SAMPLES: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every assignment; fails if `n^nvars` exceeds the budget.
    Exhaustive { budget: u128 },
    /// Seeded uniform random assignments.
    Sampled { samples: u64, seed: u64 },
    /// Exhaustive within the budget, sampled beyond it.
    Auto {
        budget: u128,
        samples: u64,
        seed: u64,
    },
}

impl Default for CheckMode {
    fn default() -> Self {
        CheckMode::Auto {
            budget: DEFAULT_TUPLE_BUDGET,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub holds: bool,
    /// Variable assignment (element indices) violating the identity.
    pub counterexample: Option<Vec<usize>>,
    pub sampled: bool,
    pub checked: u128,
}

pub(crate) fn tuple_count(n: usize, nvars: usize) -> u128 {
    (0..nvars).fold(1u128, |acc, _| acc.saturating_mul(n as u128))
}

/// Model-checks `id` on the finite structure `s`.
///
/// Exhaustive runs visit assignments in lexicographic order (first variable
/// most significant) and report the least counterexample.
pub fn check_identity(s: &dyn TernaryOps, id: &Identity, mode: CheckMode) -> Result<IdentityReport> {
    let n = s.size();
    let k = id.nvars();
    let total = tuple_count(n, k);
    let mode = match mode {
        CheckMode::Auto {
            budget,
            samples,
            seed,
        } => {
            if total <= budget {
                CheckMode::Exhaustive { budget }
            } else {
                CheckMode::Sampled { samples, seed }
            }
        }
        m => m,
    };

    let skew: Option<Vec<usize>> = if id.uses_skew() {
        Some((0..n).map(|x| s.skew(x)).collect::<Result<_>>()?)
    } else {
        None
    };
    let programs = id.compile();
    let mut stack = Vec::with_capacity(16);
    let mut violated = |env: &[usize]| {
        let first = programs[0].run(s, skew.as_deref(), env, &mut stack);
        programs[1..]
            .iter()
            .any(|p| p.run(s, skew.as_deref(), env, &mut stack) != first)
    };

    let mut report = IdentityReport {
        name: id.name().to_string(),
        holds: true,
        counterexample: None,
        sampled: false,
        checked: 0,
    };
    match mode {
        CheckMode::Exhaustive { budget } => {
            if total > budget {
                return Err(Error::BudgetExceeded {
                    needed: total,
                    budget,
                });
            }
            let mut env = vec![0usize; k];
            loop {
                report.checked += 1;
                if violated(&env) {
                    report.holds = false;
                    report.counterexample = Some(env);
                    break;
                }
                // odometer, last variable fastest
                let mut i = k;
                loop {
                    if i == 0 {
                        return Ok(report);
                    }
                    i -= 1;
                    env[i] += 1;
                    if env[i] < n {
                        break;
                    }
                    env[i] = 0;
                }
            }
        }
        CheckMode::Sampled { samples, seed } => {
            report.sampled = true;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut env = vec![0usize; k];
            for _ in 0..samples {
                for slot in env.iter_mut() {
                    *slot = rng.gen_range(0..n);
                }
                report.checked += 1;
                if violated(&env) {
                    report.holds = false;
                    report.counterexample = Some(env);
                    break;
                }
            }
        }
        CheckMode::Auto { .. } => unreachable!("resolved above"),
    }
    Ok(report)
}
