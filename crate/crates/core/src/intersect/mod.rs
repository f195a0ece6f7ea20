//! Rainbow spanning trees: maximum rainbow forests, the decision, and
//! colour-set certificates when no tree exists.
//!
//! A rainbow spanning tree exists iff every colour set `I` satisfies
//! `kappa(C_I) <= q + 1 - |I|`, where `C_I` are the edges with a colour in `I`.
//! A certificate is a set `I` violating that bound.

mod brute;
mod solver;

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{kappa, ColourSet, EdgeSet};
use crate::model::{Colouring, MultiGraph};

pub use brute::{brute_force_max_rainbow_forest, min_colour_cut_by_enumeration, BRUTE_FORCE_MAX_EDGES};
pub use solver::{max_rainbow_forest, solve, CommonIndependentSet, RainbowSolver, SolverOutcome};

/// A colour set `I` with `kappa(C_I) >= q - |I| + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub colours: ColourSet,
    pub kappa_value: usize,
    /// `kappa(C_I) - (q + 1 - |I|)`; always at least 1.
    pub deficiency: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RainbowResult {
    /// Edge ids of a rainbow spanning tree, increasing.
    Tree(Vec<usize>),
    NoTree(Certificate),
}

impl RainbowResult {
    pub fn is_tree(&self) -> bool {
        matches!(self, RainbowResult::Tree(_))
    }
}

/// Edges whose colour lies in `colours`.
pub fn edges_with_colours(c: &Colouring, colours: &ColourSet) -> EdgeSet {
    EdgeSet::from_ids(c.len(), (0..c.len()).filter(|&e| colours.contains(c.colour(e))))
}

/// `kappa(C_I) - (q + 1 - |I|)`: positive exactly when `I` violates the condition.
pub fn condition_margin(g: &MultiGraph, c: &Colouring, colours: &ColourSet) -> i64 {
    let k = kappa(g, &edges_with_colours(c, colours)) as i64;
    k - (c.q() as i64 + 1 - colours.len() as i64)
}

/// Whether `kappa(C_I) <= q + 1 - |I|` holds for this `I`.
pub fn check_condition(g: &MultiGraph, c: &Colouring, colours: &ColourSet) -> bool {
    condition_margin(g, c, colours) <= 0
}

/// Turns the final failed search into a violating colour set.
///
/// With `R` the reachable edges, `r1(E \ R) + r2(R) = |S| < n - 1`. Taking
/// `J` = colours met by `R` and `I = Q \ J` only lowers the left side, and
/// `C_I` lies inside `E \ R`, so `I` violates the condition.
pub fn extract_certificate(g: &MultiGraph, c: &Colouring, outcome: &SolverOutcome) -> Result<Certificate> {
    if outcome.forest.size() + 1 >= g.n() {
        return Err(Error::Internal("certificate requested for a spanning tree".into()));
    }
    let mut colours = ColourSet::full(c.q());
    for e in outcome.reachable.iter() {
        colours.remove(c.colour(e));
    }
    let kappa_value = kappa(g, &edges_with_colours(c, &colours));
    let deficiency = kappa_value as i64 - (c.q() as i64 + 1 - colours.len() as i64);
    if deficiency < 1 {
        return Err(Error::Internal(format!(
            "certificate with {} colours has kappa {kappa_value}, which satisfies the condition",
            colours.len()
        )));
    }
    Ok(Certificate { colours, kappa_value, deficiency })
}

/// Decides whether `g` has a rainbow spanning tree. The only error is a
/// failed certificate re-verification.
pub fn find_rst(g: &MultiGraph, c: &Colouring) -> Result<RainbowResult> {
    let outcome = solve(g, c);
    if outcome.forest.size() + 1 == g.n() {
        Ok(RainbowResult::Tree(outcome.forest.edges.to_vec()))
    } else {
        extract_certificate(g, c, &outcome).map(RainbowResult::NoTree)
    }
}

/// Checks a claimed tree: `n - 1` edges, spanning, rainbow.
pub fn validate_tree(g: &MultiGraph, c: &Colouring, edges: &[usize]) -> Result<()> {
    let set = EdgeSet::from_ids(g.num_edges(), edges.iter().copied());
    if edges.len() + 1 != g.n() || set.len() != edges.len() {
        return Err(Error::Internal(format!("tree has {} edges for n={}", edges.len(), g.n())));
    }
    if kappa(g, &set) != 1 {
        return Err(Error::Internal("tree does not span".into()));
    }
    if crate::matroid::partition_rank(c, &set) != edges.len() {
        return Err(Error::Internal("tree is not rainbow".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub colours: Vec<usize>,
    pub kappa: usize,
}

/// Result file: `{status, tree_edges, certificate}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub status: String,
    pub tree_edges: Vec<usize>,
    pub certificate: Option<CertificateRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<serde_json::Value>,
}

impl ResultFile {
    pub fn new(result: &RainbowResult) -> Self {
        match result {
            RainbowResult::Tree(edges) => {
                ResultFile { status: "tree".into(), tree_edges: edges.clone(), certificate: None, config: None }
            }
            RainbowResult::NoTree(cert) => ResultFile {
                status: "no_tree".into(),
                tree_edges: Vec::new(),
                certificate: Some(CertificateRecord { colours: cert.colours.to_vec(), kappa: cert.kappa_value }),
                config: None,
            },
        }
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        serde_json::from_str(&fs::read_to_string(path)?).map_err(|e| Error::Malformed(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{is_forest, is_rainbow};
    use crate::model::{assign_balanced_colouring, generate_kout};
    use crate::seed::Seed;

    fn rainbow(n_edges: usize) -> Colouring {
        Colouring::from_flags(n_edges, &(0..n_edges).map(|e| (e, false)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn all_distinct_colours_on_connected_graph() {
        let g = generate_kout(30, 2, Seed::new(3)).unwrap();
        let c = rainbow(60);
        assert_eq!(max_rainbow_forest(&g, &c).size(), 29);
        match find_rst(&g, &c).unwrap() {
            RainbowResult::Tree(t) => validate_tree(&g, &c, &t).unwrap(),
            other => panic!("expected a tree, got {other:?}"),
        }
    }

    #[test]
    fn two_parallel_pairs_give_two() {
        // 0<->1 and 2<->3 only.
        let g = MultiGraph::from_targets(4, 1, vec![1, 0, 3, 2]).unwrap();
        for q in 1..=4 {
            let cols: Vec<(usize, bool)> = (0..4).map(|e| (e % q, false)).collect();
            let c = Colouring::from_flags(q, &cols).unwrap();
            let expected = if q == 1 { 1 } else { 2 };
            assert_eq!(max_rainbow_forest(&g, &c).size(), expected, "q={q}");
        }
        let c = rainbow(4);
        let RainbowResult::NoTree(cert) = find_rst(&g, &c).unwrap() else { panic!() };
        assert!(cert.deficiency >= 1);
        assert!(!check_condition(&g, &c, &cert.colours));
    }

    #[test]
    fn too_few_colours_give_certificate() {
        for s in 0..20 {
            let n = 12;
            let g = generate_kout(n, 2, Seed::new(s)).unwrap();
            let c = assign_balanced_colouring(&g, n - 2, Seed::new(s + 100)).unwrap();
            let RainbowResult::NoTree(cert) = find_rst(&g, &c).unwrap() else { panic!("q=n-2 cannot have a tree") };
            assert!(cert.kappa_value as i64 >= (n - 2) as i64 - cert.colours.len() as i64 + 2);
            // The empty colour set is already a certificate here.
            assert!(!check_condition(&g, &c, &ColourSet::new(n - 2)));
        }
    }

    #[test]
    fn condition_examples() {
        let g = generate_kout(10, 2, Seed::new(8)).unwrap();
        let c = assign_balanced_colouring(&g, 9, Seed::new(9)).unwrap();
        assert!(check_condition(&g, &c, &ColourSet::new(9)));
        for col in 0..9 {
            assert!(check_condition(&g, &c, &ColourSet::from_ids(9, [col])));
        }
    }

    #[test]
    fn deterministic() {
        let g = generate_kout(200, 2, Seed::new(1)).unwrap();
        let c = assign_balanced_colouring(&g, 199, Seed::new(2)).unwrap();
        let a = find_rst(&g, &c).unwrap();
        let b = find_rst(&g, &c).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn solution_is_common_independent() {
        for s in 0..50 {
            let g = generate_kout(40, 2, Seed::new(s)).unwrap();
            let c = assign_balanced_colouring(&g, 39, Seed::new(s + 7)).unwrap();
            let f = max_rainbow_forest(&g, &c);
            assert!(is_forest(&g, &f.edges));
            assert!(is_rainbow(&c, &f.edges));
        }
    }

    #[test]
    fn certificate_refused_for_tree() {
        let g = generate_kout(10, 2, Seed::new(1)).unwrap();
        let c = rainbow(20);
        let outcome = solve(&g, &c);
        assert!(matches!(extract_certificate(&g, &c, &outcome), Err(Error::Internal(_))));
    }

    #[test]
    fn threshold_monte_carlo() {
        // k=2, q=n-1, n=1000: a tree in at least 90% of 200 runs.
        let n = 1000;
        let mut trees = 0;
        for s in 0..200u64 {
            let g = generate_kout(n, 2, Seed::new(2024).derive(s)).unwrap();
            let c = assign_balanced_colouring(&g, n - 1, Seed::new(2025).derive(s)).unwrap();
            trees += find_rst(&g, &c).unwrap().is_tree() as usize;
        }
        assert!(trees >= 180, "{trees} trees out of 200");
    }

    #[test]
    fn result_file_shapes() {
        let tree = ResultFile::new(&RainbowResult::Tree(vec![0, 2]));
        let v: serde_json::Value = serde_json::to_value(&tree).unwrap();
        assert_eq!(v["status"], "tree");
        assert!(v["certificate"].is_null());
        let cert = Certificate { colours: ColourSet::from_ids(3, [1]), kappa_value: 4, deficiency: 2 };
        let v = serde_json::to_value(ResultFile::new(&RainbowResult::NoTree(cert))).unwrap();
        assert_eq!(v["status"], "no_tree");
        assert_eq!(v["certificate"]["colours"], serde_json::json!([1]));
        assert_eq!(v["certificate"]["kappa"], 4);
    }
}
