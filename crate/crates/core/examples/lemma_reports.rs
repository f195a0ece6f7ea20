//! Empirical checks of two exact expectations: the number of cycles of the
//! 2-regular bipartite configuration graph, and the number of monochromatic
//! parallel edge pairs.

use rkout::lemma_lab::{estimate_connectivity, run_lemma, Lemma, DEFAULT_Z_THRESHOLD};
use rkout::Seed;

fn main() -> rkout::Result<()> {
    for n in [100, 1000, 10_000] {
        for lemma in Lemma::all() {
            let r = run_lemma(lemma, n, 1000, Seed::new(5), DEFAULT_Z_THRESHOLD)?;
            println!(
                "{:<14} n = {n:>6}: exact {:.4}, empirical {:.4} +- {:.4}, z = {} {}",
                lemma.name(),
                r.exact.unwrap_or(f64::NAN),
                r.empirical,
                r.std_error,
                r.z_score.map_or("n/a".to_string(), |z| format!("{z:+.2}")),
                if r.pass { "ok" } else { "FAIL" }
            );
        }
    }
    for k in 1..=3 {
        let p = estimate_connectivity(1000, k, 200, Seed::new(6))?;
        println!("P(G_{k}-out connected), n = 1000: {p:.3}");
    }
    Ok(())
}
