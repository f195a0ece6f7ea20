//! Monte Carlo sweeps for the rainbow-spanning-tree threshold and exact
//! small-n probes for rainbow perfect matchings and Hamilton cycles.

mod harness;
mod probe;
mod sweep;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use harness::{default_workers, run_trials};
pub use probe::{has_rainbow_hamilton_cycle, has_rainbow_perfect_matching, probe_colouring, rhc_exact, rpm_exact, ProbeKind, ProbeResult, RHC_MAX_N, RPM_MAX_N};
pub use sweep::{sweep_rst, QRule, SweepConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRow {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    pub trials: usize,
    pub successes: usize,
    pub frequency: f64,
    /// Mean wall-clock solver time; the only field that varies between runs.
    pub mean_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct TrialTable {
    pub rows: Vec<TrialRow>,
}

pub const CSV_HEADER: &str = "n,k,q,trials,successes,frequency,mean_ms";

impl TrialTable {
    /// CSV with the fixed column order; numeric fields only.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            writeln!(out, "{},{},{},{},{},{},{:.4}", r.n, r.k, r.q, r.trials, r.successes, r.frequency, r.mean_ms).unwrap();
        }
        out
    }

    /// Rows with the timing column dropped, for reproducibility checks.
    pub fn counts(&self) -> Vec<(usize, usize, usize, usize, usize)> {
        self.rows.iter().map(|r| (r.n, r.k, r.q, r.trials, r.successes)).collect()
    }
}
