//! Maximum rainbow forest by augmenting paths in the matroid-intersection
//! exchange graph.
//!
//! For a common independent set `S` the exchange graph has an arc `y -> x`
//! (`y` in `S`, `x` outside) when `S - y + x` is a forest, and an arc `x -> y`
//! when `S - y + x` is rainbow. Sources are edges that extend `S` as a forest,
//! sinks are edges whose colour `S` does not use. A shortest source-sink path
//! flips `S` into a common independent set one larger; when no path exists `S`
//! is maximum and the reachable set gives a minimising partition.

use std::collections::VecDeque;

use crate::matroid::{DisjointSetForest, EdgeSet};
use crate::model::{Colouring, MultiGraph};

const NONE: usize = usize::MAX;

/// A set of edges that is both a forest and rainbow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonIndependentSet {
    pub edges: EdgeSet,
}

impl CommonIndependentSet {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// Final state of a solver run.
#[derive(Debug, Clone)]
pub struct SolverOutcome {
    pub forest: CommonIndependentSet,
    /// Elements reachable from the sources in the last (failed) search.
    pub reachable: EdgeSet,
    pub augmentations: usize,
}

pub struct RainbowSolver<'a> {
    g: &'a MultiGraph,
    c: &'a Colouring,
    in_s: Vec<bool>,
    /// Edge of `S` holding each colour.
    holder: Vec<usize>,
    size: usize,
}

/// Rooted spanning forest of `S`, used for tree-path queries.
struct Rooted {
    comp: Vec<usize>,
    depth: Vec<usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
}

impl<'a> RainbowSolver<'a> {
    pub fn new(g: &'a MultiGraph, c: &'a Colouring) -> Self {
        assert_eq!(g.num_edges(), c.len(), "colouring does not match the graph");
        RainbowSolver { g, c, in_s: vec![false; g.num_edges()], holder: vec![NONE; c.q()], size: 0 }
    }

    /// Greedy start: scan edges by id, keep those that extend both matroids.
    fn greedy(&mut self) {
        let mut dsf = DisjointSetForest::new(self.g.n());
        for e in 0..self.g.num_edges() {
            let col = self.c.colour(e);
            if self.holder[col] != NONE {
                continue;
            }
            let (u, v) = self.g.endpoints(e);
            if dsf.union(u, v) {
                self.in_s[e] = true;
                self.holder[col] = e;
                self.size += 1;
            }
        }
    }

    fn root_forest(&self) -> Rooted {
        let n = self.g.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for e in (0..self.g.num_edges()).filter(|&e| self.in_s[e]) {
            let (u, v) = self.g.endpoints(e);
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut r = Rooted { comp: vec![NONE; n], depth: vec![0; n], parent: vec![NONE; n], parent_edge: vec![NONE; n] };
        let mut stack = Vec::new();
        for root in 0..n {
            if r.comp[root] != NONE {
                continue;
            }
            r.comp[root] = root;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &(w, e) in &adj[u] {
                    if r.comp[w] == NONE {
                        r.comp[w] = root;
                        r.depth[w] = r.depth[u] + 1;
                        r.parent[w] = u;
                        r.parent_edge[w] = e;
                        stack.push(w);
                    }
                }
            }
        }
        r
    }

    /// One search of the exchange graph. Returns the sink of a shortest
    /// augmenting path together with the predecessor array, or `None` and the
    /// visited set when `S` is maximum.
    ///
    /// Building the `y -> x` arcs walks the fundamental cycle of every
    /// non-free edge; this is the hot spot of the solver.
    fn search(&self) -> (Option<usize>, Vec<usize>, Vec<bool>) {
        let m = self.g.num_edges();
        let forest = self.root_forest();
        let mut is_source = vec![false; m];
        // Arcs y -> x as (y, x), with x increasing.
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for x in (0..m).filter(|&x| !self.in_s[x]) {
            let (mut u, mut v) = self.g.endpoints(x);
            if forest.comp[u] != forest.comp[v] {
                is_source[x] = true;
                continue;
            }
            while u != v {
                if forest.depth[u] < forest.depth[v] {
                    std::mem::swap(&mut u, &mut v);
                }
                arcs.push((forest.parent_edge[u], x));
                u = forest.parent[u];
            }
        }
        // Counting sort by y keeps each list in increasing x.
        let mut start = vec![0usize; m + 1];
        for &(y, _) in &arcs {
            start[y + 1] += 1;
        }
        for i in 0..m {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut targets = vec![0usize; arcs.len()];
        for &(y, x) in &arcs {
            targets[fill[y]] = x;
            fill[y] += 1;
        }

        let mut pred = vec![NONE; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        for x in (0..m).filter(|&x| is_source[x]) {
            seen[x] = true;
            queue.push_back(x);
        }
        while let Some(z) = queue.pop_front() {
            if !self.in_s[z] {
                let y = self.holder[self.c.colour(z)];
                if y == NONE {
                    return (Some(z), pred, seen);
                }
                if !seen[y] {
                    seen[y] = true;
                    pred[y] = z;
                    queue.push_back(y);
                }
            } else {
                for &x in &targets[start[z]..start[z + 1]] {
                    if !seen[x] {
                        seen[x] = true;
                        pred[x] = z;
                        queue.push_back(x);
                    }
                }
            }
        }
        (None, pred, seen)
    }

    fn augment(&mut self, sink: usize, pred: &[usize]) {
        let mut path = vec![sink];
        while pred[*path.last().unwrap()] != NONE {
            path.push(pred[*path.last().unwrap()]);
        }
        for &y in path.iter().skip(1).step_by(2) {
            debug_assert!(self.in_s[y]);
            self.in_s[y] = false;
            let col = self.c.colour(y);
            if self.holder[col] == y {
                self.holder[col] = NONE;
            }
        }
        for &x in path.iter().step_by(2) {
            debug_assert!(!self.in_s[x]);
            self.in_s[x] = true;
            self.holder[self.c.colour(x)] = x;
        }
        self.size += 1;
    }

    fn current(&self) -> EdgeSet {
        EdgeSet::from_ids(self.in_s.len(), (0..self.in_s.len()).filter(|&e| self.in_s[e]))
    }

    fn assert_common_independent(&self) {
        let mut dsf = DisjointSetForest::new(self.g.n());
        let mut used = vec![false; self.c.q()];
        let mut count = 0;
        for e in (0..self.in_s.len()).filter(|&e| self.in_s[e]) {
            let (u, v) = self.g.endpoints(e);
            assert!(dsf.union(u, v), "augmentation created a cycle through edge {e}");
            let col = self.c.colour(e);
            assert!(!used[col], "augmentation repeated colour {col}");
            used[col] = true;
            count += 1;
        }
        assert_eq!(count, self.size);
    }

    pub fn run(mut self) -> SolverOutcome {
        self.greedy();
        let target = self.g.n() - 1;
        let mut augmentations = 0;
        loop {
            if self.size == target {
                // A spanning tree has nothing reachable to report.
                let forest = CommonIndependentSet { edges: self.current() };
                return SolverOutcome { forest, reachable: EdgeSet::new(self.in_s.len()), augmentations };
            }
            let (sink, pred, seen) = self.search();
            match sink {
                Some(sink) => {
                    let before = self.size;
                    self.augment(sink, &pred);
                    augmentations += 1;
                    assert_eq!(self.size, before + 1);
                    self.assert_common_independent();
                }
                None => {
                    let reachable = EdgeSet::from_ids(seen.len(), (0..seen.len()).filter(|&e| seen[e]));
                    let forest = CommonIndependentSet { edges: self.current() };
                    return SolverOutcome { forest, reachable, augmentations };
                }
            }
        }
    }
}

pub fn solve(g: &MultiGraph, c: &Colouring) -> SolverOutcome {
    RainbowSolver::new(g, c).run()
}

/// A maximum-size rainbow forest of `g`.
pub fn max_rainbow_forest(g: &MultiGraph, c: &Colouring) -> CommonIndependentSet {
    solve(g, c).forest
}
