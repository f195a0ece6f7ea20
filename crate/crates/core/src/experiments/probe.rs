//! Exact existence probes for rainbow perfect matchings in G_{2,q} and
//! rainbow Hamilton cycles in G_{3,q} at small n.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::{couple_add_colour, generate_kout, Colouring, MultiGraph};
use crate::seed::Seed;

use super::harness::run_trials;

pub const RPM_MAX_N: usize = 16;
pub const RHC_MAX_N: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProbeKind {
    #[serde(rename = "rpm")]
    Rpm,
    #[serde(rename = "rhc")]
    Rhc,
}

impl ProbeKind {
    /// Out-degree of the underlying k-out model.
    pub fn k(&self) -> usize {
        match self {
            ProbeKind::Rpm => 2,
            ProbeKind::Rhc => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub kind: ProbeKind,
    pub n: usize,
    pub q: usize,
    pub trials: usize,
    pub successes: usize,
    pub frequency: f64,
}

/// Balanced colouring of `len` slots with `q` colours, reached from the
/// one-colour colouring by `q - 1` coupling steps. A fixed seed yields one
/// coupled chain, so probes at different `q` share their randomness.
pub fn probe_colouring(len: usize, q: usize, seed: Seed) -> Result<Colouring> {
    if q == 0 || q > len {
        return Err(invalid(format!("q must satisfy 1 <= q <= {len}, got {q}")));
    }
    let mut c = Colouring::from_parts(1, vec![0; len], vec![None])?;
    for step in 1..q {
        c = couple_add_colour(&c, seed.derive(step as u64))?;
    }
    Ok(c)
}

fn adjacency(g: &MultiGraph, c: &Colouring) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        if e.owner != e.target {
            adj[e.owner].push((e.target, c.colour(e.id)));
            adj[e.target].push((e.owner, c.colour(e.id)));
        }
    }
    adj
}

fn colour_mask(c: &Colouring) -> u64 {
    c.colours().iter().fold(0u64, |m, &col| m | 1 << col)
}

/// Exhaustive search: match the lowest free vertex along every edge whose
/// colour is unused.
pub fn has_rainbow_perfect_matching(g: &MultiGraph, c: &Colouring) -> bool {
    let n = g.n();
    assert!(n <= 64 && c.q() <= 64, "probe bitmasks hold at most 64 vertices and colours");
    if n % 2 == 1 || (colour_mask(c).count_ones() as usize) < n / 2 {
        return false;
    }
    let adj = adjacency(g, c);
    fn go(adj: &[Vec<(usize, usize)>], matched: u64, used: u64) -> bool {
        let n = adj.len();
        let Some(u) = (0..n).find(|&v| matched >> v & 1 == 0) else {
            return true;
        };
        adj[u].iter().any(|&(w, col)| {
            matched >> w & 1 == 0 && used >> col & 1 == 0 && go(adj, matched | 1 << u | 1 << w, used | 1 << col)
        })
    }
    go(&adj, 0, 0)
}

/// Backtracking search for a Hamilton cycle through vertex 0 with pairwise
/// distinct edge colours.
pub fn has_rainbow_hamilton_cycle(g: &MultiGraph, c: &Colouring) -> bool {
    let n = g.n();
    assert!(n <= 64 && c.q() <= 64, "probe bitmasks hold at most 64 vertices and colours");
    let present = colour_mask(c);
    if n < 3 || (present.count_ones() as usize) < n {
        return false;
    }
    let adj = adjacency(g, c);
    struct Search<'a> {
        adj: &'a [Vec<(usize, usize)>],
        present: u64,
        n: usize,
    }
    impl Search<'_> {
        fn go(&self, at: usize, visited: u64, used: u64, depth: usize) -> bool {
            // `depth` edges used so far; n - depth still needed.
            if ((self.present & !used).count_ones() as usize) < self.n - depth {
                return false;
            }
            if depth == self.n - 1 {
                return self.adj[at].iter().any(|&(w, col)| w == 0 && used >> col & 1 == 0);
            }
            self.adj[at].iter().any(|&(w, col)| {
                visited >> w & 1 == 0
                    && used >> col & 1 == 0
                    && self.go(w, visited | 1 << w, used | 1 << col, depth + 1)
            })
        }
    }
    Search { adj: &adj, present, n }.go(0, 1, 0, 0)
}

fn run_probe(kind: ProbeKind, n: usize, q: usize, trials: usize, seed: Seed, workers: usize) -> Result<ProbeResult> {
    let k = kind.k();
    if trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    if q == 0 || q > k * n {
        return Err(invalid(format!("q must satisfy 1 <= q <= kn = {}, got {q}", k * n)));
    }
    let one = |t: usize| -> Result<bool> {
        let s = seed.derive(t as u64);
        let g = generate_kout(n, k, s.derive(0))?;
        let c = probe_colouring(k * n, q, s.derive(1))?;
        Ok(match kind {
            ProbeKind::Rpm => has_rainbow_perfect_matching(&g, &c),
            ProbeKind::Rhc => has_rainbow_hamilton_cycle(&g, &c),
        })
    };
    let (successes, err) = run_trials(trials, workers, (0usize, None), one, |(s, err), r| match r {
        Ok(found) => (s + found as usize, err),
        Err(e) => (s, err.or(Some(e))),
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(ProbeResult { kind, n, q, trials, successes, frequency: successes as f64 / trials as f64 })
}

/// Frequency of a rainbow perfect matching in G_{2,q} on `n` vertices.
pub fn rpm_exact(n: usize, q: usize, trials: usize, seed: Seed, workers: usize) -> Result<ProbeResult> {
    if n % 2 == 1 || n < 4 || n > RPM_MAX_N {
        return Err(invalid(format!("rpm probe needs even n in 4..={RPM_MAX_N}, got {n}")));
    }
    run_probe(ProbeKind::Rpm, n, q, trials, seed, workers)
}

/// Frequency of a rainbow Hamilton cycle in G_{3,q} on `n` vertices.
pub fn rhc_exact(n: usize, q: usize, trials: usize, seed: Seed, workers: usize) -> Result<ProbeResult> {
    if !(4..=RHC_MAX_N).contains(&n) {
        return Err(invalid(format!("rhc probe needs 4 <= n <= {RHC_MAX_N}, got {n}")));
    }
    run_probe(ProbeKind::Rhc, n, q, trials, seed, workers)
}
