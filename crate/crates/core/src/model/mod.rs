//! Random k-out multigraphs, balanced colourings and the two samplers.

pub mod colouring;
pub mod gamma;
pub mod graph;
pub mod io;

pub use colouring::{assign_balanced_colouring, couple_add_colour, couple_add_colour_traced, Colouring, CouplingCase, CouplingTrace};
pub use gamma::{gamma_to_coloured_kout, generate_gamma, BipartiteColourGraph, Incidence};
pub use graph::{generate_kout, Edge, MultiGraph};
pub use io::{EdgeRecord, InterchangeFile};
