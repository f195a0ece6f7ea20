//! With too few colours no rainbow spanning tree exists, and the solver
//! returns a colour set I whose edges leave at least q - |I| + 2 components.
//! This example prints that certificate and checks it independently.

use rkout::intersect::{edges_with_colours, max_rainbow_forest};
use rkout::matroid::kappa;
use rkout::model::{assign_balanced_colouring, generate_kout};
use rkout::{find_rst, RainbowResult, Seed};

fn main() -> rkout::Result<()> {
    let n = 40;
    let seed = Seed::new(3);
    let g = generate_kout(n, 2, seed.derive(0))?;

    for q in [n - 2, n - 1] {
        let c = assign_balanced_colouring(&g, q, seed.derive(1))?;
        let best = max_rainbow_forest(&g, &c).size();
        print!("q = {q}: largest rainbow forest has {best} edges; ");
        match find_rst(&g, &c)? {
            RainbowResult::Tree(_) => println!("spanning tree exists"),
            RainbowResult::NoTree(cert) => {
                let recount = kappa(&g, &edges_with_colours(&c, &cert.colours));
                println!(
                    "certificate I = {:?}, components {} (recounted {recount}) >= q - |I| + 2 = {}",
                    cert.colours.to_vec(),
                    cert.kappa_value,
                    q + 2 - cert.colours.len()
                );
            }
        }
    }
    Ok(())
}
