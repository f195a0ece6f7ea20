//! Command-line front end. The `rkout` binary only forwards to [`run`].
//!
//! Exit codes: 0 success (or a tree was found), 1 no rainbow spanning tree,
//! 2 invalid input, 3 internal inconsistency.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::experiments::{default_workers, rhc_exact, rpm_exact, sweep_rst, ProbeResult, QRule, SweepConfig};
use crate::intersect::{find_rst, RainbowResult, ResultFile};
use crate::lemma_lab::{run_lemma, Lemma, LemmaReport, DEFAULT_Z_THRESHOLD};
use crate::model::{assign_balanced_colouring, generate_kout, InterchangeFile};
use crate::seed::Seed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_TREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rkout", version, about = "Rainbow spanning trees in randomly coloured k-out graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a coloured k-out graph and write the interchange file.
    Gen(GenArgs),
    /// Decide whether an interchange file has a rainbow spanning tree.
    Solve(SolveArgs),
    /// Monte Carlo sweep of the rainbow-spanning-tree frequency.
    Sweep(SweepArgs),
    /// Compare auxiliary estimators with their exact values.
    Lemmas(LemmaArgs),
    /// Exact small-n probes for rainbow perfect matchings / Hamilton cycles.
    Probe(ProbeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct SeedArgs {
    /// Master seed (falls back to RKOUT_SEED, then 0).
    #[arg(long, env = "RKOUT_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    q: usize,
    #[command(flatten)]
    seed: SeedArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Interchange file to read.
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Fixed colour count (overrides --q-rule).
    #[arg(long)]
    q: Option<usize>,
    /// One of n-1, n-2, kn, or an integer.
    #[arg(long, default_value = "n-1")]
    q_rule: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[command(flatten)]
    seed: SeedArgs,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct LemmaArgs {
    /// gamma-cycles or mono-parallel; all lemmas when omitted.
    #[arg(long)]
    name: Option<String>,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Number of samples.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[command(flatten)]
    seed: SeedArgs,
    #[arg(long, default_value_t = DEFAULT_Z_THRESHOLD)]
    z_threshold: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProbeTarget {
    Rpm,
    Rhc,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    #[arg(value_enum)]
    kind: ProbeTarget,
    #[arg(long)]
    n: usize,
    /// Comma-separated colour counts.
    #[arg(long, value_delimiter = ',', required = true)]
    q: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[command(flatten)]
    seed: SeedArgs,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// Resolved settings of one invocation, echoed into every output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub subcommand: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub n: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_popular: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

impl RunConfig {
    fn new(subcommand: &str) -> Self {
        RunConfig {
            subcommand: subcommand.into(),
            n: Vec::new(),
            k: None,
            q: None,
            q_rule: None,
            rho: None,
            num_popular: None,
            trials: None,
            seed: None,
            workers: None,
            out: None,
            format: None,
        }
    }

    /// Fills `rho` and `num_popular` for a single `(n, k, q)`.
    fn with_profile(mut self, n: usize, k: usize, q: usize) -> Self {
        if q > 0 {
            self.rho = Some(n * k / q);
            self.num_popular = Some(n * k - q * (n * k / q));
        }
        self
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serialises")
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rkout: {e}");
            match e {
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Lemmas(a) => cmd_lemmas(a),
        Command::Probe(a) => cmd_probe(a),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<i32> {
    let mut config = RunConfig::new("gen").with_profile(a.n, a.k, a.q);
    config.n = vec![a.n];
    config.k = Some(a.k);
    config.q = Some(a.q);
    config.seed = Some(a.seed.seed);
    config.out = a.out.clone();
    if a.q == 0 || a.q > a.n * a.k {
        return Err(invalid(format!("q must satisfy 1 <= q <= kn = {}, got {}", a.n * a.k, a.q)));
    }
    let seed = Seed::new(a.seed.seed);
    let g = generate_kout(a.n, a.k, seed.derive(0))?;
    let c = assign_balanced_colouring(&g, a.q, seed.derive(1))?;
    let mut file = InterchangeFile::new(&g, &c);
    file.config = Some(config.json());
    emit(&a.out, &(file.to_json()? + "\n"))?;
    Ok(EXIT_OK)
}

fn cmd_solve(a: SolveArgs) -> Result<i32> {
    let text = fs::read_to_string(&a.input)?;
    let (g, c) = InterchangeFile::from_json(&text)?.decode()?;
    let mut config = RunConfig::new("solve").with_profile(g.n(), g.k(), c.q());
    config.n = vec![g.n()];
    config.k = Some(g.k());
    config.q = Some(c.q());
    config.out = a.out.clone();
    let result = find_rst(&g, &c)?;
    let mut file = ResultFile::new(&result);
    file.config = Some(config.json());
    emit(&a.out, &(serde_json::to_string_pretty(&file)? + "\n"))?;
    Ok(match result {
        RainbowResult::Tree(_) => EXIT_OK,
        RainbowResult::NoTree(_) => EXIT_NO_TREE,
    })
}

fn cmd_sweep(a: SweepArgs) -> Result<i32> {
    let q_rule = match a.q {
        Some(q) => QRule::Fixed(q),
        None => a.q_rule.parse()?,
    };
    let workers = a.workers.unwrap_or_else(default_workers);
    if workers == 0 {
        return Err(invalid("workers must be at least 1"));
    }
    let sweep = SweepConfig { ns: a.n.clone(), k: a.k, q_rule, trials: a.trials, seed: Seed::new(a.seed.seed), workers };
    sweep.validate()?;
    let mut config = RunConfig::new("sweep");
    if let [n] = a.n[..] {
        config = config.with_profile(n, a.k, q_rule.resolve(n, a.k)?);
    }
    config.n = a.n;
    config.k = Some(a.k);
    config.q_rule = Some(q_rule.to_string());
    config.trials = Some(a.trials);
    config.seed = Some(a.seed.seed);
    config.workers = Some(workers);
    config.out = a.out.clone();
    config.format = Some(a.format);
    let table = sweep_rst(&sweep)?;
    let text = match a.format {
        Format::Csv => format!("# config: {}\n{}", config.json(), table.to_csv()),
        Format::Json => {
            serde_json::to_string_pretty(&serde_json::json!({ "config": config.json(), "rows": table.rows }))? + "\n"
        }
    };
    emit(&a.out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReportLine<'a> {
    #[serde(flatten)]
    report: &'a LemmaReport,
    config: serde_json::Value,
}

fn cmd_lemmas(a: LemmaArgs) -> Result<i32> {
    let lemmas = match &a.name {
        Some(name) => vec![Lemma::parse(name)?],
        None => Lemma::all().to_vec(),
    };
    if a.trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    if !(a.z_threshold > 0.0) {
        return Err(invalid("z-threshold must be positive"));
    }
    let mut config = RunConfig::new("lemmas").with_profile(a.n, 2, a.n.saturating_sub(1));
    config.n = vec![a.n];
    config.k = Some(2);
    config.q = Some(a.n.saturating_sub(1));
    config.trials = Some(a.trials);
    config.seed = Some(a.seed.seed);
    config.out = a.out.clone();
    let mut text = String::new();
    for (i, lemma) in lemmas.into_iter().enumerate() {
        let report = run_lemma(lemma, a.n, a.trials, Seed::new(a.seed.seed).derive(i as u64), a.z_threshold)?;
        text += &serde_json::to_string(&ReportLine { report: &report, config: config.json() })?;
        text.push('\n');
    }
    emit(&a.out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_probe(a: ProbeArgs) -> Result<i32> {
    let workers = a.workers.unwrap_or_else(default_workers);
    if workers == 0 {
        return Err(invalid("workers must be at least 1"));
    }
    let seed = Seed::new(a.seed.seed);
    let results: Vec<ProbeResult> = a
        .q
        .iter()
        .map(|&q| match a.kind {
            ProbeTarget::Rpm => rpm_exact(a.n, q, a.trials, seed, workers),
            ProbeTarget::Rhc => rhc_exact(a.n, q, a.trials, seed, workers),
        })
        .collect::<Result<_>>()?;
    let k = match a.kind {
        ProbeTarget::Rpm => 2,
        ProbeTarget::Rhc => 3,
    };
    let mut config = RunConfig::new("probe");
    if let [q] = a.q[..] {
        config = config.with_profile(a.n, k, q);
        config.q = Some(q);
    }
    config.n = vec![a.n];
    config.k = Some(k);
    config.trials = Some(a.trials);
    config.seed = Some(a.seed.seed);
    config.workers = Some(workers);
    config.out = a.out.clone();
    config.format = Some(a.format);
    let text = match a.format {
        Format::Csv => {
            let mut s = format!("# config: {}\nkind,n,k,q,trials,successes,frequency\n", config.json());
            for r in &results {
                let kind = serde_json::to_value(r.kind)?;
                s += &format!("{},{},{},{},{},{},{}\n", kind.as_str().unwrap(), r.n, k, r.q, r.trials, r.successes, r.frequency);
            }
            s
        }
        Format::Json => {
            serde_json::to_string_pretty(&serde_json::json!({ "config": config.json(), "results": results }))? + "\n"
        }
    };
    emit(&a.out, &text)?;
    Ok(EXIT_OK)
}
