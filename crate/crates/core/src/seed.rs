//! Seeded, splittable random streams.
//!
//! A [`Seed`] is a master seed plus a stream index. Each `(master, stream)`
//! pair drives an independent ChaCha8 keystream, so trials can be handed to
//! any worker in any order and still reproduce the same samples.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed { master, stream: 0 }
    }

    /// Child stream keyed by `index`. Distinct indices give distinct streams
    /// and derivation is order-independent.
    pub fn derive(&self, index: u64) -> Seed {
        Seed {
            master: self.master,
            stream: splitmix64(splitmix64(self.stream) ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }
}

impl From<u64> for Seed {
    fn from(master: u64) -> Self {
        Seed::new(master)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
