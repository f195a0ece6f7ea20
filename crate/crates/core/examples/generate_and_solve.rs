//! Generate a coloured G_{k-out} graph with q = n - 1 colours and look for a
//! rainbow spanning tree.
//!
//! ```bash
//! cargo run --release -p rkout --example generate_and_solve -- 2000 7
//! ```

use std::time::Instant;

use rkout::model::{assign_balanced_colouring, generate_kout};
use rkout::{find_rst, RainbowResult, Seed};

fn main() -> rkout::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse().expect("n")).unwrap_or(1000);
    let seed = Seed::new(args.next().map(|s| s.parse().expect("seed")).unwrap_or(1));

    let g = generate_kout(n, 2, seed.derive(0))?;
    let c = assign_balanced_colouring(&g, n - 1, seed.derive(1))?;
    println!("n = {n}, edges = {}, colours = {}, rho = {}, popular = {}", g.num_edges(), c.q(), c.rho(), c.num_popular());

    let start = Instant::now();
    match find_rst(&g, &c)? {
        RainbowResult::Tree(edges) => {
            println!("rainbow spanning tree with {} edges found in {:.2?}", edges.len(), start.elapsed());
            for &e in edges.iter().take(5) {
                let (u, v) = g.endpoints(e);
                println!("  edge {e}: {u} -- {v}, colour {}", c.colour(e));
            }
        }
        RainbowResult::NoTree(cert) => {
            println!("no rainbow spanning tree; {} colours certify it", cert.colours.len());
        }
    }
    Ok(())
}
