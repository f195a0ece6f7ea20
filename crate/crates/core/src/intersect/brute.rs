//! Exhaustive reference solvers for small instances.

use crate::error::{invalid, Result};
use crate::matroid::EdgeSet;
use crate::model::{Colouring, MultiGraph};

use super::solver::CommonIndependentSet;

/// Largest edge count accepted by [`brute_force_max_rainbow_forest`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 24;

/// Union-find without path compression so unions can be undone.
struct RollbackForest {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
    components: usize,
}

impl RollbackForest {
    fn new(n: usize) -> Self {
        RollbackForest { parent: (0..n).collect(), size: vec![1; n], history: Vec::new(), components: n }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns false (and records nothing) when already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        self.components -= 1;
        true
    }

    fn checkpoint(&self) -> usize {
        self.history.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.history.len() > mark {
            let b = self.history.pop().unwrap();
            let a = self.parent[b];
            self.size[a] -= self.size[b];
            self.parent[b] = b;
            self.components += 1;
        }
    }
}

/// Maximum rainbow forest by include/exclude enumeration over edges, pruned
/// by the forest and rainbow constraints.
pub fn brute_force_max_rainbow_forest(g: &MultiGraph, c: &Colouring) -> Result<CommonIndependentSet> {
    let m = g.num_edges();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(invalid(format!("brute force limited to {BRUTE_FORCE_MAX_EDGES} edges, got {m}")));
    }
    struct Search<'a> {
        g: &'a MultiGraph,
        c: &'a Colouring,
        dsf: RollbackForest,
        used: Vec<bool>,
        current: Vec<usize>,
        best: Vec<usize>,
        cap: usize,
    }
    impl Search<'_> {
        fn go(&mut self, e: usize) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let m = self.g.num_edges();
            if self.best.len() == self.cap || e == m || self.current.len() + (m - e) <= self.best.len() {
                return;
            }
            let col = self.c.colour(e);
            if !self.used[col] {
                let mark = self.dsf.checkpoint();
                let (u, v) = self.g.endpoints(e);
                if self.dsf.union(u, v) {
                    self.used[col] = true;
                    self.current.push(e);
                    self.go(e + 1);
                    self.current.pop();
                    self.used[col] = false;
                    self.dsf.rollback(mark);
                }
            }
            self.go(e + 1);
        }
    }
    let mut s = Search {
        g,
        c,
        dsf: RollbackForest::new(g.n()),
        used: vec![false; c.q()],
        current: Vec::new(),
        best: Vec::new(),
        cap: g.n() - 1,
    };
    s.go(0);
    Ok(CommonIndependentSet { edges: EdgeSet::from_ids(m, s.best) })
}

/// `min over I of (n - kappa(C_I)) + (q - |I|)`, over all `2^q` colour sets.
pub fn min_colour_cut_by_enumeration(g: &MultiGraph, c: &Colouring) -> usize {
    let q = c.q();
    assert!(q <= 26, "enumeration over 2^{q} colour sets refused");
    let mut by_colour = vec![Vec::new(); q];
    for e in 0..g.num_edges() {
        by_colour[c.colour(e)].push(g.endpoints(e));
    }
    fn go(i: usize, picked: usize, by_colour: &[Vec<(usize, usize)>], dsf: &mut RollbackForest, n: usize, best: &mut usize) {
        let q = by_colour.len();
        if i == q {
            let value = (n - dsf.components) + (q - picked);
            *best = (*best).min(value);
            return;
        }
        go(i + 1, picked, by_colour, dsf, n, best);
        let mark = dsf.checkpoint();
        for &(u, v) in &by_colour[i] {
            dsf.union(u, v);
        }
        go(i + 1, picked + 1, by_colour, dsf, n, best);
        dsf.rollback(mark);
    }
    let mut best = usize::MAX;
    let mut dsf = RollbackForest::new(g.n());
    go(0, 0, &by_colour, &mut dsf, g.n(), &mut best);
    best
}
