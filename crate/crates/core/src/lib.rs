//! Rainbow spanning trees in randomly coloured random k-out multigraphs.
//!
//! * [`model`]: G_{k-out} sampling, balanced colourings, the colour coupling
//!   and the bipartite vertex/colour sampler, plus the JSON interchange file.
//! * [`matroid`]: rank oracles for the graphic and colour partition matroids.
//! * [`intersect`]: maximum rainbow forests by matroid intersection, the
//!   rainbow-spanning-tree decision and violating colour-set certificates.
//! * [`lemma_lab`]: exact values and estimators for auxiliary random facts.
//! * [`experiments`]: seeded, trial-parallel sweeps and small exact probes.
//! * [`cli`]: the `rkout` command line.
//!
//! ```
//! use rkout::{find_rst, Seed};
//! use rkout::model::{assign_balanced_colouring, generate_kout};
//!
//! let g = generate_kout(50, 2, Seed::new(1)).unwrap();
//! let c = assign_balanced_colouring(&g, 49, Seed::new(2)).unwrap();
//! let result = find_rst(&g, &c).unwrap();
//! println!("tree: {}", result.is_tree());
//! ```

pub mod cli;
pub mod error;
pub mod experiments;
pub mod intersect;
pub mod lemma_lab;
pub mod matroid;
pub mod model;
pub mod seed;

pub use error::{Error, Result};
pub use intersect::{find_rst, max_rainbow_forest, Certificate, RainbowResult};
pub use seed::Seed;
