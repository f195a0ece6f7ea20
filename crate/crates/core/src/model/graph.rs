use rand::seq::index;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::seed::Seed;

/// One owned edge of a k-out multigraph. Edge `id` is owned by vertex `id / k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: usize,
    pub owner: usize,
    pub target: usize,
}

impl Edge {
    /// Endpoints as an unordered pair `(min, max)`.
    pub fn key(&self) -> (usize, usize) {
        if self.owner <= self.target {
            (self.owner, self.target)
        } else {
            (self.target, self.owner)
        }
    }
}

/// A k-out multigraph: every vertex owns `k` edges, edge `id` belongs to
/// vertex `id / k`. Parallel edges between two vertices that chose each other
/// are kept as separate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    k: usize,
    targets: Vec<usize>,
}

impl MultiGraph {
    /// Builds a graph from the flat target list (`targets[id]` is the target
    /// of edge `id`). Only structural checks are made here; see
    /// [`MultiGraph::check_kout`] for the sampler invariants.
    pub fn from_targets(n: usize, k: usize, targets: Vec<usize>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Malformed(format!("need n >= 1 and k >= 1, got n={n}, k={k}")));
        }
        if targets.len() != n * k {
            return Err(Error::Malformed(format!(
                "expected {} edges for n={n}, k={k}, got {}",
                n * k,
                targets.len()
            )));
        }
        if let Some((id, &t)) = targets.iter().enumerate().find(|(_, &t)| t >= n) {
            return Err(Error::Malformed(format!("edge {id} targets vertex {t}, but n={n}")));
        }
        Ok(MultiGraph { n, k, targets })
    }

    /// Checks the k-out invariants: no loops, and each vertex's targets are distinct.
    pub fn check_kout(&self) -> Result<()> {
        for v in 0..self.n {
            let own = &self.targets[v * self.k..(v + 1) * self.k];
            for (j, &t) in own.iter().enumerate() {
                if t == v {
                    return Err(Error::Malformed(format!("edge {} is a loop at {v}", v * self.k + j)));
                }
                if own[..j].contains(&t) {
                    return Err(Error::Malformed(format!("vertex {v} chooses {t} twice")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len()
    }

    pub fn owner(&self, id: usize) -> usize {
        id / self.k
    }

    pub fn target(&self, id: usize) -> usize {
        self.targets[id]
    }

    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        (id / self.k, self.targets[id])
    }

    pub fn edge(&self, id: usize) -> Edge {
        Edge { id, owner: id / self.k, target: self.targets[id] }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.targets.len()).map(move |id| self.edge(id))
    }

    /// Edge ids owned by `v`.
    pub fn owned(&self, v: usize) -> std::ops::Range<usize> {
        v * self.k..(v + 1) * self.k
    }
}

/// Samples G_{k-out}: each vertex independently picks a uniform `k`-subset of
/// the other `n - 1` vertices.
pub fn generate_kout(n: usize, k: usize, seed: Seed) -> Result<MultiGraph> {
    if n < 2 {
        return Err(invalid(format!("n must be at least 2, got {n}")));
    }
    if k == 0 || k > n - 1 {
        return Err(invalid(format!("k must satisfy 1 <= k <= n-1, got k={k}, n={n}")));
    }
    let mut rng = seed.rng();
    Ok(MultiGraph { n, k, targets: sample_targets(n, k, &mut rng) })
}

pub(crate) fn sample_targets<R: Rng>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    let mut targets = Vec::with_capacity(n * k);
    for v in 0..n {
        // Index j in 0..n-1 skips v itself.
        for j in index::sample(rng, n - 1, k) {
            targets.push(if j < v { j } else { j + 1 });
        }
    }
    targets
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertices_two_out_is_forced() {
        let g = generate_kout(3, 2, Seed::new(5)).unwrap();
        assert_eq!(g.num_edges(), 6);
        for v in 0..3 {
            let mut t: Vec<usize> = g.owned(v).map(|e| g.target(e)).collect();
            t.sort();
            let expected: Vec<usize> = (0..3).filter(|&u| u != v).collect();
            assert_eq!(t, expected);
        }
    }

    #[test]
    fn two_vertices_one_out_is_a_parallel_pair() {
        let g = generate_kout(2, 1, Seed::new(99)).unwrap();
        let edges: Vec<Edge> = g.edges().collect();
        assert_eq!(
            edges,
            vec![Edge { id: 0, owner: 0, target: 1 }, Edge { id: 1, owner: 1, target: 0 }]
        );
        assert_eq!(edges[0].key(), edges[1].key());
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate_kout(6, 2, Seed::new(11)).unwrap();
        let b = generate_kout(6, 2, Seed::new(11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_kout(1, 1, Seed::new(0)).is_err());
        assert!(generate_kout(4, 4, Seed::new(0)).is_err());
        assert!(generate_kout(4, 0, Seed::new(0)).is_err());
    }

    #[test]
    fn sampled_graphs_satisfy_invariants() {
        for s in 0..50 {
            let g = generate_kout(9, 3, Seed::new(s)).unwrap();
            g.check_kout().unwrap();
            for e in g.edges() {
                assert_eq!(e.owner, e.id / 3);
            }
        }
    }

    #[test]
    fn check_kout_flags_loops_and_repeats() {
        let g = MultiGraph::from_targets(3, 1, vec![0, 0, 1]).unwrap();
        assert!(g.check_kout().is_err());
        let g = MultiGraph::from_targets(3, 2, vec![1, 1, 0, 2, 0, 1]).unwrap();
        assert!(g.check_kout().is_err());
        assert!(MultiGraph::from_targets(3, 1, vec![1, 2]).is_err());
        assert!(MultiGraph::from_targets(3, 1, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn target_marginal_is_uniform() {
        // Vertex 0 in G_{2-out}(5): each other vertex is chosen with probability 2/4.
        let trials = 20_000;
        let mut hits = [0usize; 5];
        for s in 0..trials {
            let g = generate_kout(5, 2, Seed::new(3).derive(s)).unwrap();
            for e in g.owned(0) {
                hits[g.target(e)] += 1;
            }
        }
        assert_eq!(hits[0], 0);
        for &h in &hits[1..] {
            let p = h as f64 / trials as f64;
            // sd of the estimate is 0.5/sqrt(20000) ~ 0.0035
            assert!((p - 0.5).abs() < 0.02, "p = {p}");
        }
    }
}
