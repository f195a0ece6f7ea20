use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::model::graph::MultiGraph;
use crate::seed::Seed;

/// Edge colouring with `q` colours over the edge slots `0..len`.
///
/// Sampled colourings are balanced: with `rho = len / q`, exactly
/// `len - q * rho` colours (the popular ones) are used `rho + 1` times and the
/// rest `rho` times. Each popular colour marks one of its edges as special.
/// Colourings read from files need not be balanced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    q: usize,
    colour_of: Vec<usize>,
    special_edge_of: Vec<Option<usize>>,
}

impl Colouring {
    /// Validates ids: every colour lies in `0..q`, and a special edge, when
    /// present, carries its colour. At most one special edge per colour.
    pub fn from_parts(q: usize, colour_of: Vec<usize>, special_edge_of: Vec<Option<usize>>) -> Result<Self> {
        if q == 0 {
            return Err(Error::Malformed("q must be at least 1".into()));
        }
        if special_edge_of.len() != q {
            return Err(Error::Malformed(format!("special table has {} entries, q={q}", special_edge_of.len())));
        }
        if let Some((e, &c)) = colour_of.iter().enumerate().find(|(_, &c)| c >= q) {
            return Err(Error::Malformed(format!("edge {e} has colour {c}, but q={q}")));
        }
        for (c, s) in special_edge_of.iter().enumerate() {
            if let Some(e) = *s {
                if e >= colour_of.len() || colour_of[e] != c {
                    return Err(Error::Malformed(format!("special edge {e} does not carry colour {c}")));
                }
            }
        }
        Ok(Colouring { q, colour_of, special_edge_of })
    }

    /// Colouring from a list of `(colour, special)` flags per edge.
    pub fn from_flags(q: usize, flags: &[(usize, bool)]) -> Result<Self> {
        let mut special = vec![None; q];
        for (e, &(c, s)) in flags.iter().enumerate() {
            if s {
                if c >= q {
                    return Err(Error::Malformed(format!("edge {e} has colour {c}, but q={q}")));
                }
                if special[c].replace(e).is_some() {
                    return Err(Error::Malformed(format!("colour {c} has more than one special edge")));
                }
            }
        }
        Colouring::from_parts(q, flags.iter().map(|&(c, _)| c).collect(), special)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.colour_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colour_of.is_empty()
    }

    pub fn rho(&self) -> usize {
        self.len() / self.q
    }

    pub fn num_popular(&self) -> usize {
        self.len() - self.q * self.rho()
    }

    pub fn colour(&self, edge: usize) -> usize {
        self.colour_of[edge]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colour_of
    }

    pub fn special_edge(&self, colour: usize) -> Option<usize> {
        self.special_edge_of[colour]
    }

    pub fn is_special(&self, edge: usize) -> bool {
        self.special_edge_of[self.colour_of[edge]] == Some(edge)
    }

    /// Number of edges of each colour.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.q];
        for &c in &self.colour_of {
            h[c] += 1;
        }
        h
    }

    /// Edge slots of each colour, in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.q];
        for (e, &c) in self.colour_of.iter().enumerate() {
            classes[c].push(e);
        }
        classes
    }

    /// Checks the balanced profile and the special-edge marks.
    pub fn check_balanced(&self) -> Result<()> {
        let (rho, popular) = (self.rho(), self.num_popular());
        if self.q > self.len() {
            return Err(Error::Malformed(format!("q={} exceeds edge count {}", self.q, self.len())));
        }
        let hist = self.histogram();
        let big = hist.iter().filter(|&&m| m == rho + 1).count();
        if hist.iter().any(|&m| m != rho && m != rho + 1) || big != popular {
            return Err(Error::Malformed(format!(
                "histogram does not match rho={rho} with {popular} popular colours"
            )));
        }
        for (c, &m) in hist.iter().enumerate() {
            if (m == rho + 1) != self.special_edge_of[c].is_some() {
                return Err(Error::Malformed(format!("colour {c} has a wrong special mark")));
            }
        }
        Ok(())
    }
}

/// Colours the edges of `g` with `q` colours by a uniform random bijection
/// between edge slots and the balanced colour multiset.
pub fn assign_balanced_colouring(g: &MultiGraph, q: usize, seed: Seed) -> Result<Colouring> {
    balanced_colouring(g.num_edges(), q, &mut seed.rng())
}

pub(crate) fn balanced_colouring<R: Rng>(len: usize, q: usize, rng: &mut R) -> Result<Colouring> {
    if q == 0 || q > len {
        return Err(invalid(format!("q must satisfy 1 <= q <= kn = {len}, got {q}")));
    }
    let mut copies = colour_copies(len, q, rng);
    copies.shuffle(rng);
    let mut colouring = Colouring { q, colour_of: copies, special_edge_of: vec![None; q] };
    mark_specials(&mut colouring, |_| true, rng);
    Ok(colouring)
}

/// The balanced colour multiset for `len` slots, popular colours chosen uniformly.
pub(crate) fn colour_copies<R: Rng>(len: usize, q: usize, rng: &mut R) -> Vec<usize> {
    let rho = len / q;
    let popular = len - q * rho;
    let mut mult = vec![rho; q];
    for c in index::sample(rng, q, popular) {
        mult[c] += 1;
    }
    mult.iter().enumerate().flat_map(|(c, &m)| std::iter::repeat(c).take(m)).collect()
}

/// Marks a uniform special edge for every popular colour selected by `redo`;
/// the marks of other colours are left alone.
fn mark_specials<R: Rng>(c: &mut Colouring, redo: impl Fn(usize) -> bool, rng: &mut R) {
    let rho = c.rho();
    let classes = c.classes();
    for (colour, members) in classes.iter().enumerate() {
        if members.len() == rho + 1 {
            if redo(colour) || c.special_edge_of[colour].is_none() {
                c.special_edge_of[colour] = Some(*members.choose(rng).unwrap());
            }
        } else {
            c.special_edge_of[colour] = None;
        }
    }
}

/// Which replacement rule the colour coupling applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingCase {
    /// `floor(kn/(q+1)) = rho`: `rho` popular parts become `rho + 1` parts of size `rho`.
    SameRho,
    /// `floor(kn/(q+1)) = rho - 1`: all popular parts and `rho - 1 - popular`
    /// unpopular parts become `popular` parts of size `rho` and
    /// `rho - popular` parts of size `rho - 1`.
    RhoDrops,
    /// Neither rule applies (only for small `q`, where `rho` drops by two or
    /// more or there are too few unpopular parts): every slot is recoloured.
    Resample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingTrace {
    pub case: CouplingCase,
    /// Colour ids whose parts were dissolved.
    pub dissolved: Vec<usize>,
    /// Edge slots that were recoloured, sorted.
    pub freed: Vec<usize>,
}

/// Refines a balanced `q`-colouring into a balanced `(q+1)`-colouring that
/// agrees with the input outside the freed slots.
pub fn couple_add_colour(c: &Colouring, seed: Seed) -> Result<Colouring> {
    couple_add_colour_traced(c, seed).map(|(c, _)| c)
}

pub fn couple_add_colour_traced(c: &Colouring, seed: Seed) -> Result<(Colouring, CouplingTrace)> {
    let len = c.len();
    let q = c.q();
    if q + 1 > len {
        return Err(invalid(format!("cannot add a colour: q+1 = {} exceeds kn = {len}", q + 1)));
    }
    c.check_balanced()?;
    let mut rng = seed.rng();
    let rho = c.rho();
    let popular = c.num_popular();
    let rho_hat = len / (q + 1);
    let classes = c.classes();
    let by_size = |size: usize| -> Vec<usize> { (0..q).filter(|&i| classes[i].len() == size).collect() };

    let (case, dissolved, new_sizes) = if rho_hat == rho {
        let big = by_size(rho + 1);
        let chosen: Vec<usize> = index::sample(&mut rng, big.len(), rho).into_iter().map(|i| big[i]).collect();
        (CouplingCase::SameRho, chosen, vec![rho; rho + 1])
    } else if rho_hat + 1 == rho && q - popular >= rho - 1 - popular {
        let mut chosen = by_size(rho + 1);
        let small = by_size(rho);
        chosen.extend(index::sample(&mut rng, small.len(), rho - 1 - popular).into_iter().map(|i| small[i]));
        let mut sizes = vec![rho; popular];
        sizes.extend(std::iter::repeat(rho - 1).take(rho - popular));
        (CouplingCase::RhoDrops, chosen, sizes)
    } else {
        let popular_hat = len - (q + 1) * rho_hat;
        let mut sizes = vec![rho_hat + 1; popular_hat];
        sizes.extend(std::iter::repeat(rho_hat).take(q + 1 - popular_hat));
        (CouplingCase::Resample, (0..q).collect(), sizes)
    };

    let mut freed: Vec<usize> = dissolved.iter().flat_map(|&i| classes[i].iter().copied()).collect();
    freed.sort_unstable();
    let mut slots = freed.clone();
    slots.shuffle(&mut rng);
    let mut ids = dissolved.clone();
    ids.push(q);
    ids.shuffle(&mut rng);
    debug_assert_eq!(ids.len(), new_sizes.len());
    debug_assert_eq!(slots.len(), new_sizes.iter().sum::<usize>());

    let mut colour_of = c.colour_of.clone();
    let mut special_edge_of = c.special_edge_of.clone();
    special_edge_of.push(None);
    let mut rest = slots.as_slice();
    for (&id, &size) in ids.iter().zip(&new_sizes) {
        let (block, tail) = rest.split_at(size);
        for &e in block {
            colour_of[e] = id;
        }
        special_edge_of[id] = None;
        rest = tail;
    }

    let mut out = Colouring { q: q + 1, colour_of, special_edge_of };
    let mut is_dissolved = vec![false; q + 1];
    for &i in &ids {
        is_dissolved[i] = true;
    }
    mark_specials(&mut out, |colour| is_dissolved[colour], &mut rng);
    debug_assert!(out.check_balanced().is_ok());
    Ok((out, CouplingTrace { case, dissolved, freed }))
}
