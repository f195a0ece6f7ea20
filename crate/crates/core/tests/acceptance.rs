//! Acceptance criteria. Runs every criterion at its pinned tolerance, prints
//! one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::index;
use rand::Rng;

use rkout::experiments::{rhc_exact, rpm_exact, sweep_rst, QRule, SweepConfig};
use rkout::intersect::{
    brute_force_max_rainbow_forest, check_condition, find_rst, max_rainbow_forest, min_colour_cut_by_enumeration,
    validate_tree, RainbowResult,
};
use rkout::lemma_lab::{
    chi_square_two_sample, count_monochromatic_parallel_pairs, estimate_connectivity, expected_cycles_exact,
    sample_gamma_cycles,
};
use rkout::matroid::ColourSet;
use rkout::model::{
    assign_balanced_colouring, couple_add_colour, gamma_to_coloured_kout, generate_gamma, generate_kout, Colouring,
    MultiGraph,
};
use rkout::Seed;

type Outcome = Result<String, String>;

fn check(cond: bool, detail: String) -> Outcome {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Random small instance: n in [3,8], k in {1,2,3} with k <= n-1, q in [max(1,n-1), kn].
fn small_instance(rng: &mut impl Rng, seed: Seed, max_n: usize) -> (MultiGraph, Colouring) {
    let n = rng.gen_range(3..=max_n);
    let k = rng.gen_range(1..=3usize.min(n - 1));
    let q = rng.gen_range((n - 1).max(1)..=k * n);
    let g = generate_kout(n, k, seed.derive(0)).unwrap();
    let c = assign_balanced_colouring(&g, q, seed.derive(1)).unwrap();
    (g, c)
}

fn any_violating_set(g: &MultiGraph, c: &Colouring) -> bool {
    let q = c.q();
    (0u64..1 << q).any(|mask| {
        let set = ColourSet::from_ids(q, (0..q).filter(|&i| mask >> i & 1 == 1));
        !check_condition(g, c, &set)
    })
}

fn oracle_equivalence() -> Outcome {
    let master = Seed::new(0xA11CE);
    let mut rng = master.rng();
    let (mut trees, mut no_trees, mut enumerated) = (0, 0, 0);
    for i in 0..500u64 {
        let (g, c) = small_instance(&mut rng, master.derive(i), 8);
        let fast = max_rainbow_forest(&g, &c).size();
        let slow = brute_force_max_rainbow_forest(&g, &c).map_err(|e| e.to_string())?.size();
        if fast != slow {
            return Err(format!("instance {i}: solver {fast} vs brute force {slow}"));
        }
        match find_rst(&g, &c).map_err(|e| format!("instance {i}: {e}"))? {
            RainbowResult::Tree(t) => {
                validate_tree(&g, &c, &t).map_err(|e| format!("instance {i}: {e}"))?;
                if slow != g.n() - 1 {
                    return Err(format!("instance {i}: tree returned but maximum is {slow}"));
                }
                trees += 1;
            }
            RainbowResult::NoTree(cert) => {
                let bound = c.q() as i64 - cert.colours.len() as i64 + 2;
                if (cert.kappa_value as i64) < bound || check_condition(&g, &c, &cert.colours) {
                    return Err(format!("instance {i}: certificate kappa {} < {bound}", cert.kappa_value));
                }
                if c.q() <= 2 * g.n() {
                    if !any_violating_set(&g, &c) {
                        return Err(format!("instance {i}: no violating set exists"));
                    }
                    enumerated += 1;
                }
                no_trees += 1;
            }
        }
    }
    Ok(format!("500/500 agree ({trees} trees, {no_trees} certificates, {enumerated} cross-checked by enumeration)"))
}

fn min_max_duality() -> Outcome {
    let master = Seed::new(0xD0A1);
    let mut rng = master.rng();
    for i in 0..100u64 {
        let (g, c) = small_instance(&mut rng, master.derive(i), 7);
        let max = max_rainbow_forest(&g, &c).size();
        let min = min_colour_cut_by_enumeration(&g, &c);
        if max != min {
            return Err(format!("instance {i} (n={}, q={}): max {max} != min {min}", g.n(), c.q()));
        }
    }
    Ok("100/100 instances: max common independent size = min over I of (n - kappa(C_I)) + (q - |I|)".into())
}

fn threshold() -> Outcome {
    let run = |rule| {
        sweep_rst(&SweepConfig { ns: vec![100, 300, 1000], k: 2, q_rule: rule, trials: 200, seed: Seed::new(7), workers: workers() })
            .map_err(|e| e.to_string())
    };
    let main = run(QRule::NMinus1)?;
    let freq: Vec<f64> = main.rows.iter().map(|r| r.frequency).collect();
    let below = run(QRule::NMinus2)?;
    let zeros = below.rows.iter().all(|r| r.successes == 0);
    let monotone = freq.windows(2).all(|w| w[1] >= w[0]);
    check(
        monotone && freq[2] >= 0.90 && zeros,
        format!("q=n-1 frequencies {freq:?} (need non-decreasing, >= 0.90 at n=1000); q=n-2 all zero: {zeros}"),
    )
}

fn gamma_cycles() -> Outcome {
    let n = 10_000;
    let stats = sample_gamma_cycles(n, 1000, Seed::new(11)).map_err(|e| e.to_string())?;
    let exact = expected_cycles_exact(n);
    let z = (stats.mean - exact) / stats.std_error;
    check(z.abs() <= 3.0, format!("mean {:.4} vs exact {exact:.4}, se {:.4}, z = {z:.2} (|z| <= 3)", stats.mean, stats.std_error))
}

fn mono_parallel() -> Outcome {
    let n = 1000;
    let seed = Seed::new(13);
    let mut with_pair = 0;
    for t in 0..1000u64 {
        let s = seed.derive(t);
        let g = generate_kout(n, 2, s.derive(0)).unwrap();
        let c = assign_balanced_colouring(&g, n - 1, s.derive(1)).unwrap();
        with_pair += (count_monochromatic_parallel_pairs(&g, &c) > 0) as usize;
    }
    let frac = with_pair as f64 / 1000.0;
    check(frac <= 0.02, format!("fraction of samples with a monochromatic parallel pair = {frac} (<= 0.02)"))
}

/// Number of bijections from the colour copies onto the ground set that make
/// some member of `family` rainbow, by enumerating all permutations.
fn rainbow_bijections(copies: &[usize], family: &[Vec<usize>]) -> u64 {
    fn go(perm: &mut Vec<usize>, k: usize, family: &[Vec<usize>], count: &mut u64) {
        if k == perm.len() {
            let hit = family.iter().any(|set| {
                let mut seen = Vec::with_capacity(set.len());
                set.iter().all(|&x| {
                    let col = perm[x];
                    let fresh = !seen.contains(&col);
                    seen.push(col);
                    fresh
                })
            });
            *count += hit as u64;
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(perm, k + 1, family, count);
            perm.swap(k, i);
        }
    }
    let mut perm = copies.to_vec();
    let mut count = 0;
    go(&mut perm, 0, family, &mut count);
    count
}

fn balanced_copies(len: usize, q: usize) -> Vec<usize> {
    let rho = len / q;
    let popular = len - q * rho;
    (0..q).flat_map(|c| std::iter::repeat(c).take(rho + (c < popular) as usize)).collect()
}

fn colour_monotonicity() -> Outcome {
    let master = Seed::new(0xC0);
    let mut rng = master.rng();
    let mut comparisons = 0;
    for f in 0..50u64 {
        let size = rng.gen_range(2..=7usize);
        let members = rng.gen_range(1..=4usize);
        let family: Vec<Vec<usize>> = (0..members)
            .map(|_| {
                let m = rng.gen_range(2..=size);
                index::sample(&mut rng, size, m).into_vec()
            })
            .collect();
        let probs: Vec<u64> = (1..=size).map(|q| rainbow_bijections(&balanced_copies(size, q), &family)).collect();
        for q in 1..size {
            if probs[q] < probs[q - 1] {
                return Err(format!("family {f}: P(q={}) = {}/{size}! < P(q={q}) = {}/{size}!", q + 1, probs[q], probs[q - 1]));
            }
            comparisons += 1;
            // The coupled colouring must carry the (q+1)-colour profile.
            let mut crng = master.derive(1000 + f).derive(q as u64).rng();
            let c = rkout::model::Colouring::from_parts(q, {
                let mut v = balanced_copies(size, q);
                rand::seq::SliceRandom::shuffle(v.as_mut_slice(), &mut crng);
                v
            }, vec![None; q]);
            let c = mark_balanced(c.map_err(|e| e.to_string())?);
            let d = couple_add_colour(&c, master.derive(f).derive(q as u64)).map_err(|e| e.to_string())?;
            d.check_balanced().map_err(|e| format!("family {f}, q={q}: {e}"))?;
        }
    }
    // Larger colourings for the profile check.
    for s in 0..200u64 {
        let g = generate_kout(30, 2, master.derive(s)).unwrap();
        let q = 1 + (s as usize % 59);
        let c = assign_balanced_colouring(&g, q, master.derive(s + 1)).unwrap();
        let d = couple_add_colour(&c, master.derive(s + 2)).map_err(|e| e.to_string())?;
        d.check_balanced().map_err(|e| format!("kn=60, q={q}: {e}"))?;
        if d.q() != q + 1 {
            return Err(format!("coupling produced q={}", d.q()));
        }
    }
    Ok(format!("{comparisons} exact comparisons P(q+1) >= P(q) over 50 families; coupled profiles valid"))
}

/// Gives each popular colour of a hand-made balanced colouring its first edge as special.
fn mark_balanced(c: Colouring) -> Colouring {
    let rho = c.rho();
    let classes = c.classes();
    let specials = classes.iter().map(|m| if m.len() == rho + 1 { Some(m[0]) } else { None }).collect();
    Colouring::from_parts(c.q(), c.colours().to_vec(), specials).unwrap()
}

fn joint_statistic(g: &MultiGraph, c: &Colouring) -> (usize, usize) {
    let mut own: Vec<usize> = g.owned(0).map(|e| c.colour(e)).collect();
    own.sort();
    own.dedup();
    (count_monochromatic_parallel_pairs(g, c), own.len())
}

fn sampler_equivalence() -> Outcome {
    let (n, k, q) = (4, 2, 3);
    let samples = 100_000u64;
    let mut direct: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut via_gamma: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let a = Seed::new(0x5A);
    let b = Seed::new(0x5B);
    for s in 0..samples {
        let g = generate_kout(n, k, a.derive(s).derive(0)).unwrap();
        let c = assign_balanced_colouring(&g, q, a.derive(s).derive(1)).unwrap();
        *direct.entry(joint_statistic(&g, &c)).or_default() += 1;
        let gamma = generate_gamma(n, k, q, b.derive(s).derive(0)).unwrap();
        let (g, c) = gamma_to_coloured_kout(&gamma, b.derive(s).derive(1)).unwrap();
        *via_gamma.entry(joint_statistic(&g, &c)).or_default() += 1;
    }
    let test = chi_square_two_sample(&direct, &via_gamma);
    check(
        test.p_value >= 0.001,
        format!("chi-square = {:.3} on {} dof, p = {:.4} (>= 0.001)", test.statistic, test.dof, test.p_value),
    )
}

fn sharpness_of_k() -> Outcome {
    let one = estimate_connectivity(1000, 1, 200, Seed::new(17)).map_err(|e| e.to_string())?;
    let two = estimate_connectivity(1000, 2, 200, Seed::new(19)).map_err(|e| e.to_string())?;
    check(one <= 0.2 && two >= 0.99, format!("connected: k=1 {one} (<= 0.2), k=2 {two} (>= 0.99)"))
}

fn probe_sanity() -> Outcome {
    let seed = Seed::new(23);
    let trials = 300;
    let mut notes = Vec::new();
    for n in [10usize, 12] {
        let rpm: Vec<(usize, usize)> = (1..=2 * n)
            .map(|q| rpm_exact(n, q, trials, seed, workers()).map(|r| (q, r.successes)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for &(q, s) in &rpm {
            if 2 * q < n && s != 0 {
                return Err(format!("rpm n={n} q={q}: {s} successes below n/2 colours"));
            }
        }
        if let Some(w) = rpm.windows(2).find(|w| w[1].1 < w[0].1) {
            return Err(format!("rpm n={n}: frequency drops from q={} ({}) to q={} ({})", w[0].0, w[0].1, w[1].0, w[1].1));
        }
        let rhc: Vec<(usize, usize)> = (1..=3 * n)
            .map(|q| rhc_exact(n, q, trials, seed, workers()).map(|r| (q, r.successes)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for &(q, s) in &rhc {
            if q < n && s != 0 {
                return Err(format!("rhc n={n} q={q}: {s} successes below n colours"));
            }
        }
        if let Some(w) = rhc.windows(2).find(|w| w[1].1 < w[0].1) {
            return Err(format!("rhc n={n}: frequency drops from q={} ({}) to q={} ({})", w[0].0, w[0].1, w[1].0, w[1].1));
        }
        notes.push(format!(
            "n={n}: rpm first nonzero q={:?}, rhc first nonzero q={:?}",
            rpm.iter().find(|r| r.1 > 0).map(|r| r.0),
            rhc.iter().find(|r| r.1 > 0).map(|r| r.0)
        ));
    }
    Ok(format!("zero below trivial bounds, non-decreasing in q ({})", notes.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 min-max duality", min_max_duality),
        ("3 threshold behaviour", threshold),
        ("4 gamma_2 cycle expectation", gamma_cycles),
        ("5 monochromatic parallel pairs", mono_parallel),
        ("6 colour monotonicity", colour_monotonicity),
        ("7 sampler equivalence", sampler_equivalence),
        ("8 sharpness of k", sharpness_of_k),
        ("9 probe sanity", probe_sanity),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
