//! Exact formulas and Monte Carlo estimators for auxiliary facts about
//! randomly coloured k-out graphs.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{invalid, Error, Result};
use crate::matroid::DisjointSetForest;
use crate::model::{assign_balanced_colouring, generate_gamma, generate_kout, BipartiteColourGraph, Colouring, MultiGraph};
use crate::seed::Seed;

pub const DEFAULT_Z_THRESHOLD: f64 = 3.0;

/// Number of cycles of a 2-regular bipartite multigraph (a doubled edge is a 2-cycle).
pub fn count_cycles_2regular_bipartite(gamma: &BipartiteColourGraph) -> Result<usize> {
    if gamma.k() != 2 {
        return Err(Error::Malformed(format!("left degree is {}, not 2", gamma.k())));
    }
    let degrees = gamma.right_degrees();
    let dummy = gamma.dummy();
    for (r, &d) in degrees.iter().enumerate() {
        // A dummy without special copies is simply absent.
        if d != 2 && !(r == dummy && d == 0) {
            return Err(Error::Malformed(format!("right vertex {r} has degree {d}, not 2")));
        }
    }
    let n = gamma.n();
    let mut dsf = DisjointSetForest::new(n + degrees.len());
    for (l, r) in gamma.edges() {
        dsf.union(l, n + r);
    }
    let absent = (degrees[dummy] == 0) as usize;
    Ok(dsf.components() - absent)
}

/// `sum_{i=1..n} 1/(2n - 2i + 1)`, the expected number of cycles in a uniform
/// pairing of two sides of `2n` points each.
pub fn expected_cycles_exact(n: usize) -> f64 {
    assert!(n >= 1, "n must be positive");
    // Smallest terms first.
    (0..n).rev().map(|j| 1.0 / (2 * j + 1) as f64).sum()
}

/// Unordered pairs of edges with the same endpoints and the same colour.
pub fn count_monochromatic_parallel_pairs(g: &MultiGraph, c: &Colouring) -> usize {
    let mut groups: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for e in g.edges() {
        let (u, v) = e.key();
        *groups.entry((u, v, c.colour(e.id))).or_default() += 1;
    }
    groups.values().map(|&m| m * (m - 1) / 2).sum()
}

/// Exact mean of [`count_monochromatic_parallel_pairs`] over G_{k,q}.
///
/// Each vertex pair is joined twice with probability `(k/(n-1))^2`, and two
/// fixed slots share a colour with probability `sum_c m_c(m_c-1) / (kn(kn-1))`.
pub fn expected_monochromatic_parallel_pairs(n: usize, k: usize, q: usize) -> f64 {
    let len = (n * k) as f64;
    let rho = n * k / q;
    let popular = n * k - q * rho;
    let same = (popular * (rho + 1) * rho + (q - popular) * rho * rho.saturating_sub(1)) as f64;
    let pairs = (n * (n - 1)) as f64 / 2.0;
    let mutual = (k as f64 / (n - 1) as f64).powi(2);
    pairs * mutual * same / (len * (len - 1.0))
}

pub fn is_connected(g: &MultiGraph) -> bool {
    let mut dsf = DisjointSetForest::new(g.n());
    for e in g.edges() {
        dsf.union(e.owner, e.target);
    }
    dsf.components() == 1
}

/// Fraction of sampled G_{k-out} graphs that are connected.
pub fn estimate_connectivity(n: usize, k: usize, trials: usize, seed: Seed) -> Result<f64> {
    if trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    let mut connected = 0;
    for t in 0..trials {
        connected += is_connected(&generate_kout(n, k, seed.derive(t as u64))?) as usize;
    }
    Ok(connected as f64 / trials as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleStats {
    pub samples: usize,
    pub counts: Vec<usize>,
    pub mean: f64,
    pub std_error: f64,
}

impl CycleStats {
    pub fn from_counts(counts: Vec<usize>) -> Self {
        let (mean, std_error) = mean_and_se(counts.iter().map(|&c| c as f64));
        CycleStats { samples: counts.len(), counts, mean, std_error }
    }
}

/// Sample mean and standard error (sample sd over sqrt of the count).
pub fn mean_and_se(xs: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let n = xs.clone().count() as f64;
    let mean = xs.clone().sum::<f64>() / n;
    if n < 2.0 {
        return (mean, 0.0);
    }
    let var = xs.map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Cycle counts of `samples` bipartite 2-regular graphs with `n` left
/// vertices and `q = n - 1` colours, so both sides carry `2n` points.
pub fn sample_gamma_cycles(n: usize, samples: usize, seed: Seed) -> Result<CycleStats> {
    if n < 2 || samples == 0 {
        return Err(invalid(format!("need n >= 2 and samples >= 1, got n={n}, samples={samples}")));
    }
    let mut counts = Vec::with_capacity(samples);
    for s in 0..samples {
        counts.push(count_cycles_2regular_bipartite(&generate_gamma(n, 2, n - 1, seed.derive(s as u64))?)?);
    }
    Ok(CycleStats::from_counts(counts))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub n: usize,
    pub samples: usize,
    pub exact: Option<f64>,
    pub empirical: f64,
    pub std_error: f64,
    pub z_score: Option<f64>,
    pub z_threshold: f64,
    pub pass: bool,
}

impl LemmaReport {
    fn new(lemma: &str, n: usize, samples: usize, exact: f64, empirical: f64, std_error: f64, z_threshold: f64) -> Self {
        let z = if std_error > 0.0 {
            (empirical - exact) / std_error
        } else if empirical == exact {
            0.0
        } else {
            f64::INFINITY
        };
        LemmaReport {
            lemma: lemma.to_string(),
            n,
            samples,
            exact: Some(exact),
            empirical,
            std_error,
            z_score: Some(z),
            z_threshold,
            pass: z.abs() <= z_threshold,
        }
    }
}

/// Lemmas the lab knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// Mean cycle count of the bipartite 2-regular vertex/colour graph.
    GammaCycles,
    /// Mean number of monochromatic parallel pairs in G_{2,n-1}.
    MonoParallel,
}

impl Lemma {
    pub fn name(&self) -> &'static str {
        match self {
            Lemma::GammaCycles => "gamma-cycles",
            Lemma::MonoParallel => "mono-parallel",
        }
    }

    pub fn parse(name: &str) -> Result<Lemma> {
        match name {
            "gamma-cycles" => Ok(Lemma::GammaCycles),
            "mono-parallel" => Ok(Lemma::MonoParallel),
            other => Err(invalid(format!("unknown lemma {other:?}; expected gamma-cycles or mono-parallel"))),
        }
    }

    pub fn all() -> [Lemma; 2] {
        [Lemma::GammaCycles, Lemma::MonoParallel]
    }
}

/// Runs one lemma check and compares the sample mean with the exact value.
pub fn run_lemma(lemma: Lemma, n: usize, samples: usize, seed: Seed, z_threshold: f64) -> Result<LemmaReport> {
    match lemma {
        Lemma::GammaCycles => {
            let stats = sample_gamma_cycles(n, samples, seed)?;
            Ok(LemmaReport::new(lemma.name(), n, samples, expected_cycles_exact(n), stats.mean, stats.std_error, z_threshold))
        }
        Lemma::MonoParallel => {
            if n < 3 || samples == 0 {
                return Err(invalid(format!("need n >= 3 and samples >= 1, got n={n}, samples={samples}")));
            }
            let mut counts = Vec::with_capacity(samples);
            for s in 0..samples {
                let sd = seed.derive(s as u64);
                let g = generate_kout(n, 2, sd.derive(0))?;
                let c = assign_balanced_colouring(&g, n - 1, sd.derive(1))?;
                counts.push(count_monochromatic_parallel_pairs(&g, &c) as f64);
            }
            let (mean, se) = mean_and_se(counts.iter().copied());
            let exact = expected_monochromatic_parallel_pairs(n, 2, n - 1);
            // The count is a sum of rare indicators, so with few samples the
            // sample variance is often zero; floor it at the Poisson variance.
            let se = se.max((exact / samples as f64).sqrt());
            Ok(LemmaReport::new(lemma.name(), n, samples, exact, mean, se, z_threshold))
        }
    }
}

/// Outcome of a two-sample chi-square homogeneity test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Chi-square test that two samples of a discrete statistic share one
/// distribution. Categories with a pooled expected count below 5 in either
/// sample are merged into one tail cell.
pub fn chi_square_two_sample<K: Ord + Clone>(a: &BTreeMap<K, u64>, b: &BTreeMap<K, u64>) -> ChiSquareTest {
    let na: u64 = a.values().sum();
    let nb: u64 = b.values().sum();
    let total = (na + nb) as f64;
    let mut keys: Vec<K> = a.keys().chain(b.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    let mut cells: Vec<(f64, f64)> = Vec::new();
    let mut tail = (0.0, 0.0);
    for key in keys {
        let x = *a.get(&key).unwrap_or(&0) as f64;
        let y = *b.get(&key).unwrap_or(&0) as f64;
        let pooled = x + y;
        if pooled * (na.min(nb) as f64) / total < 5.0 {
            tail.0 += x;
            tail.1 += y;
        } else {
            cells.push((x, y));
        }
    }
    if tail.0 + tail.1 > 0.0 {
        cells.push(tail);
    }
    let mut statistic = 0.0;
    for &(x, y) in &cells {
        let pooled = x + y;
        let ex = pooled * na as f64 / total;
        let ey = pooled * nb as f64 / total;
        statistic += (x - ex).powi(2) / ex + (y - ey).powi(2) / ey;
    }
    let dof = cells.len().saturating_sub(1);
    let p_value = if dof == 0 { 1.0 } else { ChiSquared::new(dof as f64).unwrap().sf(statistic) };
    ChiSquareTest { statistic, dof, p_value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Incidence;

    fn inc(colour: usize) -> Incidence {
        Incidence { colour, special: false }
    }

    #[test]
    fn cycle_counts_of_hand_built_graphs() {
        // One left vertex doubled to one colour.
        let g = BipartiteColourGraph::from_incidences(1, 2, 1, vec![inc(0), inc(0)]).unwrap();
        assert_eq!(count_cycles_2regular_bipartite(&g).unwrap(), 1);
        // Two disjoint doubled edges.
        let g = BipartiteColourGraph::from_incidences(2, 2, 2, vec![inc(0), inc(0), inc(1), inc(1)]).unwrap();
        assert_eq!(count_cycles_2regular_bipartite(&g).unwrap(), 2);
        // A Hamilton cycle l0-c0-l1-c1-l0.
        let g = BipartiteColourGraph::from_incidences(2, 2, 2, vec![inc(0), inc(1), inc(0), inc(1)]).unwrap();
        assert_eq!(count_cycles_2regular_bipartite(&g).unwrap(), 1);
    }

    #[test]
    fn cycle_count_rejects_irregular() {
        let g = generate_gamma(6, 2, 3, Seed::new(1)).unwrap();
        assert!(count_cycles_2regular_bipartite(&g).is_err());
        let g = generate_gamma(6, 3, 5, Seed::new(1)).unwrap();
        assert!(count_cycles_2regular_bipartite(&g).is_err());
    }

    #[test]
    fn exact_expectation_small_values() {
        assert_eq!(expected_cycles_exact(1), 1.0);
        assert!((expected_cycles_exact(2) - 4.0 / 3.0).abs() < 1e-15);
        assert!((expected_cycles_exact(3) - 23.0 / 15.0).abs() < 1e-15);
        for n in 1..200 {
            assert!(expected_cycles_exact(n + 1) > expected_cycles_exact(n));
        }
    }

    /// Enumerates every bijection between the 2n left points and 2n right
    /// points and averages the cycle count.
    fn pairing_mean_by_enumeration(n: usize) -> (u64, u64) {
        fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                permutations(items, k + 1, out);
                items.swap(k, i);
            }
        }
        let mut perms = Vec::new();
        permutations(&mut (0..2 * n).collect(), 0, &mut perms);
        let mut total = 0u64;
        for p in &perms {
            // Right point r belongs to right vertex r / 2.
            let mut dsf = DisjointSetForest::new(2 * n);
            for (left_point, &right_point) in p.iter().enumerate() {
                dsf.union(left_point / 2, n + right_point / 2);
            }
            total += dsf.components() as u64;
        }
        (total, perms.len() as u64)
    }

    #[test]
    fn exact_expectation_matches_enumeration() {
        // Frozen from the enumeration oracle: n=1 -> 1/1, n=2 -> 32/24, n=3 -> 1104/720.
        assert_eq!(pairing_mean_by_enumeration(1), (2, 2));
        assert_eq!(pairing_mean_by_enumeration(2), (32, 24));
        assert_eq!(pairing_mean_by_enumeration(3), (1104, 720));
        for n in 1..=4 {
            let (total, count) = pairing_mean_by_enumeration(n);
            assert!((total as f64 / count as f64 - expected_cycles_exact(n)).abs() < 1e-12);
        }
    }

    #[test]
    fn monochromatic_pairs_examples() {
        let g = generate_kout(2, 1, Seed::new(0)).unwrap();
        let c = Colouring::from_flags(1, &[(0, false), (0, false)]).unwrap();
        assert_eq!(count_monochromatic_parallel_pairs(&g, &c), 1);
        let c = Colouring::from_flags(2, &[(0, false), (1, false)]).unwrap();
        assert_eq!(count_monochromatic_parallel_pairs(&g, &c), 0);
    }

    #[test]
    fn monochromatic_expectation_matches_enumeration() {
        // n=3, k=1, q=1: every edge has colour 0. Over the 2^3 choice vectors,
        // count mutual pairs exhaustively.
        let mut total = 0;
        for mask in 0..8u32 {
            let targets: Vec<usize> = (0..3).map(|v| {
                let others: Vec<usize> = (0..3).filter(|&u| u != v).collect();
                others[((mask >> v) & 1) as usize]
            }).collect();
            let g = MultiGraph::from_targets(3, 1, targets).unwrap();
            let c = Colouring::from_flags(1, &[(0, false); 3]).unwrap();
            total += count_monochromatic_parallel_pairs(&g, &c);
        }
        assert!((total as f64 / 8.0 - expected_monochromatic_parallel_pairs(3, 1, 1)).abs() < 1e-12);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(estimate_connectivity(2, 1, 10, Seed::new(1)).unwrap(), 1.0);
        assert!(estimate_connectivity(5, 1, 0, Seed::new(1)).is_err());
    }

    #[test]
    fn rare_counts_do_not_report_infinite_z() {
        let r = run_lemma(Lemma::MonoParallel, 10_000, 50, Seed::new(1), 3.0).unwrap();
        assert!(r.std_error > 0.0);
        assert!(r.z_score.unwrap().is_finite());
        assert!(r.pass);
    }

    #[test]
    fn lemma_names_round_trip() {
        for l in Lemma::all() {
            assert_eq!(Lemma::parse(l.name()).unwrap(), l);
        }
        assert!(Lemma::parse("nope").is_err());
    }

    #[test]
    fn report_pass_flag_follows_threshold() {
        let r = run_lemma(Lemma::GammaCycles, 200, 500, Seed::new(5), 3.0).unwrap();
        assert_eq!(r.pass, r.z_score.unwrap().abs() <= 3.0);
        let strict = LemmaReport::new("x", 1, 1, 1.0, 2.0, 0.1, 3.0);
        assert!(!strict.pass);
    }

    #[test]
    fn chi_square_identical_and_different() {
        let a: BTreeMap<u8, u64> = [(0, 500), (1, 500)].into();
        let same = chi_square_two_sample(&a, &a);
        assert_eq!(same.statistic, 0.0);
        assert_eq!(same.p_value, 1.0);
        let b: BTreeMap<u8, u64> = [(0, 700), (1, 300)].into();
        assert!(chi_square_two_sample(&a, &b).p_value < 1e-10);
    }
}
