//! Rank oracles for the graphic matroid of a k-out multigraph and the colour
//! partition matroid.

use crate::model::{Colouring, MultiGraph};

/// Dense membership set over ids `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSet {
    member: Vec<bool>,
    len: usize,
}

/// A set of edge ids.
pub type EdgeSet = DenseSet;
/// A set of colour ids.
pub type ColourSet = DenseSet;

impl DenseSet {
    pub fn new(universe: usize) -> Self {
        DenseSet { member: vec![false; universe], len: 0 }
    }

    pub fn full(universe: usize) -> Self {
        DenseSet { member: vec![true; universe], len: universe }
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = DenseSet::new(universe);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.member.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member[i]
    }

    /// Returns true if `i` was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        let fresh = !self.member[i];
        self.member[i] = true;
        self.len += fresh as usize;
        fresh
    }

    /// Returns true if `i` was present.
    pub fn remove(&mut self, i: usize) -> bool {
        let was = self.member[i];
        self.member[i] = false;
        self.len -= was as usize;
        was
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.member.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> DenseSet {
        DenseSet { member: self.member.iter().map(|m| !m).collect(), len: self.universe() - self.len }
    }
}

/// Union-find with path compression and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSetForest {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSetForest {
    pub fn new(n: usize) -> Self {
        DisjointSetForest { parent: (0..n).collect(), size: vec![1; n], components: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Forest over the vertices of `g` after merging the endpoints of every edge in `s`.
pub fn forest_of(g: &MultiGraph, s: &EdgeSet) -> DisjointSetForest {
    let mut dsf = DisjointSetForest::new(g.n());
    for e in s.iter() {
        let (u, v) = g.endpoints(e);
        dsf.union(u, v);
    }
    dsf
}

/// Number of components of the spanning subgraph `([n], s)`; isolated vertices count.
pub fn kappa(g: &MultiGraph, s: &EdgeSet) -> usize {
    forest_of(g, s).components()
}

/// Graphic matroid rank `n - kappa(s)`. Loops and repeated parallel edges add nothing.
pub fn graphic_rank(g: &MultiGraph, s: &EdgeSet) -> usize {
    g.n() - kappa(g, s)
}

/// Whether `s + e` is still a forest, for a forest `s`.
pub fn graphic_independent(g: &MultiGraph, s: &EdgeSet, e: usize) -> bool {
    if s.contains(e) {
        return false;
    }
    let (u, v) = g.endpoints(e);
    !forest_of(g, s).same(u, v)
}

/// Partition matroid rank: number of distinct colours on `s`.
pub fn partition_rank(c: &Colouring, s: &EdgeSet) -> usize {
    let mut seen = DenseSet::new(c.q());
    for e in s.iter() {
        seen.insert(c.colour(e));
    }
    seen.len()
}

/// Whether `s` has no two edges of the same colour.
pub fn is_rainbow(c: &Colouring, s: &EdgeSet) -> bool {
    partition_rank(c, s) == s.len()
}

/// Whether `s` contains no cycle (parallel pairs and loops are cycles).
pub fn is_forest(g: &MultiGraph, s: &EdgeSet) -> bool {
    graphic_rank(g, s) == s.len()
}
