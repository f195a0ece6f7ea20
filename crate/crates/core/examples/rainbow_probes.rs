//! Exact small-n probes: how often does G_{2,q} have a rainbow perfect
//! matching, and G_{3,q} a rainbow Hamilton cycle, as q grows?
//!
//! ```bash
//! cargo run --release -p rkout --example rainbow_probes -- 10 300
//! ```

use std::time::Instant;

use rkout::experiments::{default_workers, rhc_exact, rpm_exact};
use rkout::Seed;

fn main() -> rkout::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse().expect("n")).unwrap_or(10);
    let trials: usize = args.next().map(|s| s.parse().expect("trials")).unwrap_or(200);
    let seed = Seed::new(2024);
    let workers = default_workers();

    println!("rainbow perfect matching in G_(2,q), n = {n}");
    for q in (n / 2 - 1)..=(2 * n) {
        let start = Instant::now();
        let r = rpm_exact(n, q, trials, seed, workers)?;
        println!("  q = {q:>3}  frequency = {:.3}  ({:.2?})", r.frequency, start.elapsed());
    }
    println!("rainbow Hamilton cycle in G_(3,q), n = {n}");
    for q in (n - 1)..=(3 * n) {
        let start = Instant::now();
        let r = rhc_exact(n, q, trials, seed, workers)?;
        println!("  q = {q:>3}  frequency = {:.3}  ({:.2?})", r.frequency, start.elapsed());
    }
    Ok(())
}
