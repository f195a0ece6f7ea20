//! Sample a coloured k-out graph in two ways: directly, or through the
//! bipartite vertex/colour configuration graph. Compare a few statistics.

use std::collections::BTreeMap;

use rkout::lemma_lab::{chi_square_two_sample, count_monochromatic_parallel_pairs};
use rkout::model::{assign_balanced_colouring, gamma_to_coloured_kout, generate_gamma, generate_kout};
use rkout::Seed;

fn main() -> rkout::Result<()> {
    let (n, k, q) = (5, 2, 4);
    let samples = 50_000u64;

    let gamma = generate_gamma(n, k, q, Seed::new(0))?;
    println!("one bipartite sample: colour degrees {:?}", gamma.right_degrees());
    let (g, c) = gamma_to_coloured_kout(&gamma, Seed::new(1))?;
    for e in g.edges() {
        println!("  edge {}: {} -> {}, colour {}{}", e.id, e.owner, e.target, c.colour(e.id), if c.is_special(e.id) { " *" } else { "" });
    }

    let mut direct = BTreeMap::new();
    let mut routed = BTreeMap::new();
    for s in 0..samples {
        let seed = Seed::new(10).derive(s);
        let g = generate_kout(n, k, seed.derive(0))?;
        let c = assign_balanced_colouring(&g, q, seed.derive(1))?;
        *direct.entry(count_monochromatic_parallel_pairs(&g, &c)).or_insert(0u64) += 1;

        let seed = Seed::new(20).derive(s);
        let (g, c) = gamma_to_coloured_kout(&generate_gamma(n, k, q, seed.derive(0))?, seed.derive(1))?;
        *routed.entry(count_monochromatic_parallel_pairs(&g, &c)).or_insert(0u64) += 1;
    }
    println!("monochromatic parallel pairs, direct: {direct:?}");
    println!("monochromatic parallel pairs, routed: {routed:?}");
    let test = chi_square_two_sample(&direct, &routed);
    println!("chi-square {:.3} on {} dof, p = {:.3}", test.statistic, test.dof, test.p_value);
    Ok(())
}
