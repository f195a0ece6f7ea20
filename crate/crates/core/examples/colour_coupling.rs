//! Walk a balanced colouring from 1 colour up to one colour per edge, adding
//! one colour at a time while keeping most slots fixed.

use rkout::model::{assign_balanced_colouring, couple_add_colour_traced, generate_kout};
use rkout::Seed;

fn main() -> rkout::Result<()> {
    let g = generate_kout(6, 2, Seed::new(0))?;
    let mut c = assign_balanced_colouring(&g, 1, Seed::new(1))?;
    println!("q = {:>2}  {:?}", c.q(), c.colours());
    for step in 0..g.num_edges() as u64 - 1 {
        let (next, trace) = couple_add_colour_traced(&c, Seed::new(2).derive(step))?;
        next.check_balanced()?;
        println!("q = {:>2}  {:?}  {:?}, {} slots recoloured", next.q(), next.colours(), trace.case, trace.freed.len());
        c = next;
    }
    Ok(())
}
