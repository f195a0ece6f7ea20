//! The bipartite vertex/colour multigraph and the "open the boxes" sampler.
//!
//! Every edge slot `(v, j)` of a k-out graph is one point of left vertex `v`;
//! every colour copy is one point of a right vertex. Non-special copies attach
//! to their colour, special copies attach to one extra dummy vertex with id
//! `q`. A uniform pairing of the two point sets is exactly a uniform balanced
//! colouring of the slots, before any edge target has been drawn.

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::model::colouring::{colour_copies, Colouring};
use crate::model::graph::{sample_targets, MultiGraph};
use crate::seed::Seed;

/// The colour copy paired with one left point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub colour: usize,
    pub special: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteColourGraph {
    n: usize,
    k: usize,
    q: usize,
    /// `points[v * k + j]` is the copy paired with the j-th point of `v`.
    points: Vec<Incidence>,
}

impl BipartiteColourGraph {
    pub fn from_incidences(n: usize, k: usize, q: usize, points: Vec<Incidence>) -> Result<Self> {
        if n == 0 || k == 0 || q == 0 {
            return Err(Error::Malformed(format!("need n, k, q >= 1, got n={n} k={k} q={q}")));
        }
        if points.len() != n * k {
            return Err(Error::Malformed(format!("expected {} incidences, got {}", n * k, points.len())));
        }
        if points.iter().any(|p| p.colour >= q) {
            return Err(Error::Malformed(format!("colour id out of range for q={q}")));
        }
        Ok(BipartiteColourGraph { n, k, q, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Id of the dummy right vertex.
    pub fn dummy(&self) -> usize {
        self.q
    }

    pub fn incidence(&self, v: usize, j: usize) -> Incidence {
        self.points[v * self.k + j]
    }

    /// Right endpoint of a point: its colour, or the dummy for special copies.
    pub fn right_of(&self, p: Incidence) -> usize {
        if p.special {
            self.q
        } else {
            p.colour
        }
    }

    /// Edges `(left, right)` with multiplicity, in left point order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.points.iter().enumerate().map(move |(i, &p)| (i / self.k, self.right_of(p)))
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        vec![self.k; self.n]
    }

    /// Degrees of right vertices `0..=q`; the last entry is the dummy.
    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.q + 1];
        for (_, r) in self.edges() {
            d[r] += 1;
        }
        d
    }

    /// The colouring of edge slots carried by the points.
    pub fn colouring(&self) -> Result<Colouring> {
        let flags: Vec<(usize, bool)> = self.points.iter().map(|p| (p.colour, p.special)).collect();
        Colouring::from_flags(self.q, &flags)
    }
}

/// Samples the bipartite configuration model: a uniform pairing of the `k`
/// points of each of `n` left vertices with the `kn` colour copies.
pub fn generate_gamma(n: usize, k: usize, q: usize, seed: Seed) -> Result<BipartiteColourGraph> {
    if n == 0 || k == 0 {
        return Err(invalid(format!("need n >= 1 and k >= 1, got n={n}, k={k}")));
    }
    let len = n * k;
    if q == 0 || q > len {
        return Err(invalid(format!("q must satisfy 1 <= q <= kn = {len}, got {q}")));
    }
    let mut rng = seed.rng();
    let mut points = right_points(len, q, &mut rng);
    points.shuffle(&mut rng);
    Ok(BipartiteColourGraph { n, k, q, points })
}

/// One point per colour copy; a uniform copy of each popular colour is special.
fn right_points<R: Rng>(len: usize, q: usize, rng: &mut R) -> Vec<Incidence> {
    let rho = len / q;
    let copies = colour_copies(len, q, rng);
    let mut points = Vec::with_capacity(len);
    let mut start = 0;
    while start < copies.len() {
        let colour = copies[start];
        let m = copies[start..].iter().take_while(|&&c| c == colour).count();
        let special = if m == rho + 1 { Some(index::sample(rng, m, 1).index(0)) } else { None };
        points.extend((0..m).map(|i| Incidence { colour, special: special == Some(i) }));
        start += m;
    }
    points
}

/// Opens the boxes: every left vertex draws its `k` distinct targets
/// uniformly; the j-th edge owned by `v` takes the colour of `v`'s j-th point.
pub fn gamma_to_coloured_kout(gamma: &BipartiteColourGraph, seed: Seed) -> Result<(MultiGraph, Colouring)> {
    let (n, k) = (gamma.n, gamma.k);
    if n < 2 || k > n - 1 {
        return Err(invalid(format!("cannot open boxes with k={k} choices among n-1={} vertices", n.saturating_sub(1))));
    }
    let targets = sample_targets(n, k, &mut seed.rng());
    Ok((MultiGraph::from_targets(n, k, targets)?, gamma.colouring()?))
}
