//! Frequency of rainbow spanning trees in G_{k-out} over a range of n, for a
//! chosen colour rule. Prints CSV.
//!
//! ```bash
//! cargo run --release -p rkout --example threshold_sweep -- n-1 200
//! cargo run --release -p rkout --example threshold_sweep -- n-2 50
//! ```

use rkout::experiments::{default_workers, sweep_rst, QRule, SweepConfig};
use rkout::Seed;

fn main() -> rkout::Result<()> {
    let mut args = std::env::args().skip(1);
    let q_rule: QRule = args.next().as_deref().unwrap_or("n-1").parse()?;
    let trials = args.next().map(|s| s.parse().expect("trials")).unwrap_or(100);
    let config = SweepConfig {
        ns: vec![10, 30, 100, 300, 1000],
        k: 2,
        q_rule,
        trials,
        seed: Seed::new(99),
        workers: default_workers(),
    };
    let table = sweep_rst(&config)?;
    print!("{}", table.to_csv());
    Ok(())
}
