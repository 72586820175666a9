use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stripcolor::adversary::{check_outcome, run_adversary, AdversaryOutcome, Region};
use stripcolor::curves::build_verified;
use stripcolor::engine::{FirstFit, LeastUsed, OnlineColorer, RandomProper};
use stripcolor::experiments::{run_batch, run_instance, Algorithm, BatchConfig, Execution, Verify};
use stripcolor::generate::{generate, GeneratorKind};
use stripcolor::geometry::AttachedSegment;
use stripcolor::instance::{parse_poset, report_to_tsv, Instance, ReportRow};
use stripcolor::poset::{fixtures, Poset};
use stripcolor::stripcolor::{flatten, StripColor};
use stripcolor::{svg, Caps};

#[derive(Parser)]
#[command(name = "stripcolor", version, about = "On-line coloring of objects between two lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random instance.
    Generate(GenerateArgs),
    /// Color an instance file and check the result.
    Run(RunArgs),
    /// Generate and color many seeded instances.
    Batch(BatchArgs),
    /// Play the forcing strategy against an algorithm on attached segments.
    Adversary(AdversaryArgs),
    /// Build a curve representation of a poset one element at a time.
    Curves(CurvesArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// segments, convex, quasi_convex or attached.
    #[arg(long, default_value = "quasi_convex")]
    kind: String,
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    omega_cap: usize,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    instance: PathBuf,
    /// stripcolor, firstfit, leastused or random.
    #[arg(long, default_value = "stripcolor")]
    algorithm: String,
    /// Seed recorded in the report and used by the random colorer.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "fast")]
    verify: String,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    transcript: Option<PathBuf>,
}

#[derive(Args)]
struct BatchArgs {
    #[arg(long, default_value = "quasi_convex")]
    kind: String,
    #[arg(long, default_value_t = 40)]
    n: usize,
    /// First seed; the batch uses `count` consecutive seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: u64,
    #[arg(long, default_value_t = 6)]
    omega_cap: usize,
    /// Comma-separated list of algorithms.
    #[arg(long, default_value = "stripcolor,firstfit")]
    algorithm: String,
    #[arg(long, default_value = "fast")]
    verify: String,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct AdversaryArgs {
    #[arg(long, short, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value = "firstfit")]
    algorithm: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CurvesArgs {
    /// Poset file.
    #[arg(long, conflicts_with = "fixture")]
    poset: Option<PathBuf>,
    /// layered, two_plus_two, chain:N, antichain:N or standard:K.
    #[arg(long)]
    fixture: Option<String>,
    /// Comma-separated insertion order; identity when omitted.
    #[arg(long, conflicts_with = "seed")]
    order: Option<String>,
    /// Shuffle the insertion order with this seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Draw the stored horizontal lines in the SVG.
    #[arg(long)]
    lines: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the command ran but a check failed.
fn dispatch(command: Command) -> Result<bool> {
    let caps = Caps::from_env()?;
    match command {
        Command::Generate(a) => cmd_generate(a, &caps),
        Command::Run(a) => cmd_run(a, &caps),
        Command::Batch(a) => cmd_batch(a, &caps),
        Command::Adversary(a) => cmd_adversary(a, &caps),
        Command::Curves(a) => cmd_curves(a, &caps),
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn report_failures(failures: &[String]) -> bool {
    for f in failures {
        eprintln!("FAIL {f}");
    }
    failures.is_empty()
}

fn cmd_generate(a: GenerateArgs, caps: &Caps) -> Result<bool> {
    let kind: GeneratorKind = a.kind.parse()?;
    let text = generate(kind, a.n, a.seed, a.omega_cap, caps)?.to_text();
    match a.out {
        Some(path) => write(&path, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn cmd_run(a: RunArgs, caps: &Caps) -> Result<bool> {
    let text = fs::read_to_string(&a.instance).with_context(|| format!("reading {}", a.instance.display()))?;
    let instance = Instance::parse(&text)?;
    let algorithm: Algorithm = a.algorithm.parse()?;
    let out = run_instance(&instance, algorithm, a.seed, a.verify.parse()?, caps)?;
    let r = &out.row;
    let bound = r.bound.map_or_else(|| "-".into(), |b| b.to_string());
    println!(
        "n={} omega={} algorithm={} colors={} bound={} proper={}",
        r.n, r.omega, r.algorithm, r.colors_used, bound, r.proper
    );
    if let Some(audit) = &out.audit {
        let (g, w) = audit.worst_gamma_ratio;
        println!("worst gamma/class-omega = {g}/{w}");
    }
    if let Some(path) = &a.report {
        write(path, &report_to_tsv(std::slice::from_ref(r)))?;
    }
    if let Some(path) = &a.transcript {
        write(path, &out.transcript)?;
    }
    if let Some(path) = &a.svg {
        let doc = match &instance {
            Instance::Strip(objects) => svg::render_strip(objects, &out.colors),
            Instance::Attached(segments) => svg::render_attached(segments, &out.colors, None, &[]),
        };
        write(path, &doc)?;
    }
    Ok(report_failures(&out.failures()))
}

fn cmd_batch(a: BatchArgs, caps: &Caps) -> Result<bool> {
    let algorithms = a
        .algorithm
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<stripcolor::Result<Vec<Algorithm>>>()?;
    let config = BatchConfig {
        kind: a.kind.parse()?,
        n: a.n,
        omega_cap: a.omega_cap,
        first_seed: a.seed,
        count: a.count,
        algorithms,
        verify: a.verify.parse::<Verify>()?,
    };
    let execution = if a.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let result = run_batch(&config, caps, execution)?;
    let tsv = report_to_tsv(&result.rows);
    match &a.report {
        Some(path) => write(path, &tsv)?,
        None => print!("{tsv}"),
    }
    let proper = result.rows.iter().filter(|r| r.proper).count();
    eprintln!("{} rows, {} proper, {} failures", result.rows.len(), proper, result.failures.len());
    Ok(report_failures(&result.failures))
}

struct AdversaryRun {
    outcome_problems: Vec<String>,
    family: Vec<AttachedSegment>,
    colors: Vec<usize>,
    witness: stripcolor::geometry::VerticalLine,
    pierced: Vec<usize>,
    row: ReportRow,
}

fn adversary_with<A: OnlineColorer<AttachedSegment>>(
    k: usize,
    algorithm: A,
    seed: u64,
    caps: &Caps,
    ids: impl Fn(&[A::Color]) -> Vec<usize>,
) -> Result<AdversaryRun> {
    let (outcome, transcript): (AdversaryOutcome<A::Color>, _) = run_adversary(k, algorithm, &Region::default(), caps)?;
    let row = ReportRow {
        seed,
        n: transcript.len(),
        omega: transcript.omega(),
        algorithm: transcript.algorithm.clone(),
        colors_used: outcome.colors_on_pierced.len(),
        bound: None,
        proper: transcript.proper,
    };
    Ok(AdversaryRun {
        outcome_problems: check_outcome(&outcome),
        colors: ids(&outcome.colors),
        family: outcome.family,
        witness: outcome.witness,
        pierced: outcome.pierced,
        row,
    })
}

fn cmd_adversary(a: AdversaryArgs, caps: &Caps) -> Result<bool> {
    let algorithm: Algorithm = a.algorithm.parse()?;
    let run = match algorithm {
        Algorithm::StripColor => adversary_with(a.k, StripColor::new(), a.seed, caps, flatten)?,
        Algorithm::FirstFit => adversary_with(a.k, FirstFit::new(), a.seed, caps, <[usize]>::to_vec)?,
        Algorithm::LeastUsed => adversary_with(a.k, LeastUsed::new(), a.seed, caps, <[usize]>::to_vec)?,
        Algorithm::Random => adversary_with(a.k, RandomProper::new(a.seed), a.seed, caps, <[usize]>::to_vec)?,
    };
    println!(
        "k={} segments={} omega={} algorithm={} colors_on_pierced={} pierced={}",
        a.k,
        run.family.len(),
        run.row.omega,
        run.row.algorithm,
        run.row.colors_used,
        run.pierced.len()
    );
    if let Some(path) = &a.report {
        write(path, &report_to_tsv(std::slice::from_ref(&run.row)))?;
    }
    if let Some(path) = &a.svg {
        write(path, &svg::render_attached(&run.family, &run.colors, Some(&run.witness), &run.pierced))?;
    }
    Ok(report_failures(&run.outcome_problems))
}

fn fixture(name: &str) -> Result<Poset> {
    let sized = |prefix: &str| -> Result<Option<usize>> {
        match name.strip_prefix(prefix) {
            Some(n) => Ok(Some(n.parse().with_context(|| format!("bad size in fixture {name:?}"))?)),
            None => Ok(None),
        }
    };
    if name == "layered" {
        return Ok(fixtures::layered_types());
    }
    if name == "two_plus_two" {
        return Ok(fixtures::two_plus_two());
    }
    if let Some(n) = sized("chain:")? {
        return Ok(Poset::chain(n));
    }
    if let Some(n) = sized("antichain:")? {
        return Ok(Poset::antichain(n));
    }
    if let Some(k) = sized("standard:")? {
        return Ok(fixtures::standard_example(k));
    }
    bail!("unknown fixture {name:?}")
}

fn parse_order(text: &str, n: usize) -> Result<Vec<usize>> {
    let order: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse().with_context(|| format!("bad element {s:?} in order")))
        .collect::<Result<_>>()?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        bail!("order must be a permutation of 0..{n}");
    }
    Ok(order)
}

fn cmd_curves(a: CurvesArgs, caps: &Caps) -> Result<bool> {
    let poset = match (&a.poset, &a.fixture) {
        (Some(path), _) => parse_poset(&fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)?,
        (None, Some(name)) => fixture(name)?,
        (None, None) => bail!("pass --poset FILE or --fixture NAME"),
    };
    let n = poset.n();
    let order = match (&a.order, a.seed) {
        (Some(text), _) => parse_order(text, n)?,
        (None, Some(seed)) => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            order
        }
        (None, None) => (0..n).collect(),
    };
    let (sys, problems) = build_verified(&poset, &order, caps)?;
    let order_text: Vec<String> = order.iter().map(usize::to_string).collect();
    println!(
        "n={} order={} lines={} vertices={} verified={}",
        n,
        order_text.join(","),
        sys.lines().len(),
        sys.vertex_count(),
        problems.is_empty()
    );
    if let Some(path) = &a.svg {
        write(path, &svg::render_curves(&sys, a.lines))?;
    }
    Ok(report_failures(&problems))
}
