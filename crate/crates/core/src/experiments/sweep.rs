use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{invalid, Error, Result};
use crate::intersect::{check_condition, find_rst, validate_tree, RainbowResult};
use crate::model::{assign_balanced_colouring, generate_kout};
use crate::seed::Seed;

use super::harness::run_trials;
use super::{TrialRow, TrialTable};

/// How the colour count follows the vertex count in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QRule {
    NMinus1,
    NMinus2,
    Kn,
    Fixed(usize),
}

impl QRule {
    pub fn resolve(&self, n: usize, k: usize) -> Result<usize> {
        let q = match *self {
            QRule::NMinus1 => n as i64 - 1,
            QRule::NMinus2 => n as i64 - 2,
            QRule::Kn => (n * k) as i64,
            QRule::Fixed(q) => q as i64,
        };
        if q < 1 || q as usize > n * k {
            return Err(invalid(format!("q rule {self} gives q={q} at n={n}, k={k}; need 1 <= q <= kn")));
        }
        Ok(q as usize)
    }
}

impl fmt::Display for QRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QRule::NMinus1 => write!(f, "n-1"),
            QRule::NMinus2 => write!(f, "n-2"),
            QRule::Kn => write!(f, "kn"),
            QRule::Fixed(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for QRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n-1" => Ok(QRule::NMinus1),
            "n-2" => Ok(QRule::NMinus2),
            "kn" => Ok(QRule::Kn),
            other => other
                .parse()
                .map(QRule::Fixed)
                .map_err(|_| invalid(format!("q rule must be n-1, n-2, kn or an integer, got {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub ns: Vec<usize>,
    pub k: usize,
    pub q_rule: QRule,
    pub trials: usize,
    pub seed: Seed,
    pub workers: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(invalid("trials must be at least 1"));
        }
        if self.ns.is_empty() {
            return Err(invalid("at least one n is required"));
        }
        for &n in &self.ns {
            if n < 2 || self.k == 0 || self.k > n - 1 {
                return Err(invalid(format!("need n >= 2 and 1 <= k <= n-1, got n={n}, k={}", self.k)));
            }
            self.q_rule.resolve(n, self.k)?;
        }
        Ok(())
    }
}

/// Frequency of a rainbow spanning tree over independent G_{k,q} samples, one
/// row per `n`. Every tree is re-validated and every certificate re-checked.
pub fn sweep_rst(config: &SweepConfig) -> Result<TrialTable> {
    config.validate()?;
    let k = config.k;
    let mut rows = Vec::with_capacity(config.ns.len());
    for &n in &config.ns {
        let q = config.q_rule.resolve(n, k)?;
        let row_seed = config.seed.derive(n as u64);
        let one = |t: usize| -> Result<(bool, u128)> {
            let s = row_seed.derive(t as u64);
            let g = generate_kout(n, k, s.derive(0))?;
            let c = assign_balanced_colouring(&g, q, s.derive(1))?;
            let start = Instant::now();
            let result = find_rst(&g, &c)?;
            let nanos = start.elapsed().as_nanos();
            match &result {
                RainbowResult::Tree(edges) => validate_tree(&g, &c, edges)?,
                RainbowResult::NoTree(cert) => {
                    if check_condition(&g, &c, &cert.colours) {
                        return Err(Error::Internal(format!("certificate failed re-verification at n={n}, trial {t}")));
                    }
                }
            }
            Ok((result.is_tree(), nanos))
        };
        let (successes, nanos, err) = run_trials(
            config.trials,
            config.workers,
            (0usize, 0u128, None::<Error>),
            one,
            |(s, ns, err), r| match r {
                Ok((tree, t)) => (s + tree as usize, ns + t, err),
                Err(e) => (s, ns, err.or(Some(e))),
            },
        );
        if let Some(e) = err {
            return Err(e);
        }
        rows.push(TrialRow {
            n,
            k,
            q,
            trials: config.trials,
            successes,
            frequency: successes as f64 / config.trials as f64,
            mean_ms: nanos as f64 / 1e6 / config.trials as f64,
        });
    }
    Ok(TrialTable { rows })
}
