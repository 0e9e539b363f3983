//! Command implementations. Each returns a deterministic JSON result and a
//! pass flag; the caller wraps them into a report.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use stokes_core::cocycle::{pullback_cocycle, CocycleSystem};
use stokes_core::equivariant::{descent_compare, LabelAction};
use stokes_core::error::{Error, Result};
use stokes_core::glp::{run_trials, GlpChart};
use stokes_core::groupoid::{count_iso_classes, enumerate_functors};
use stokes_core::json as codec;
use stokes_core::presenter::{build_curve_presenter, rep_fiber_product_check};
use stokes_core::simplify::simplify;
use stokes_core::stratum::StratumGroups;
use stokes_core::word::Letter;

use crate::report::read_input;

pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "stokes",
    version,
    about = "Desk-scale verification of skeletal Stokes presenters by exhaustive counting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Enumerate cocycles on a complex over a uniform label group
    Cocycles(CocyclesArgs),
    /// Compare equivariant classes upstairs with plain classes downstairs
    Descent(DescentArgs),
    /// Check the pushout universal property at counting level
    Pushout(PushoutArgs),
    /// Build a curve presenter and audit its gluing relation
    Curve(CurveArgs),
    /// Audit the local chart's groupoid axioms numerically
    GlpCheck(GlpArgs),
    /// Compare gauge-class counts across barycentric subdivisions
    SubdivideInvariance(SubdivideArgs),
    /// Build a block-unipotent Stokes group and audit its order
    Unipotent(UnipotentArgs),
    /// Run a manifest of experiments and aggregate
    Suite(SuiteArgs),
}

fn cap_default() -> u64 {
    std::env::var("STOKES_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Args)]
pub struct CocyclesArgs {
    /// Stratified 2-complex (JSON)
    #[arg(long)]
    pub complex: PathBuf,
    /// Label group used uniformly on all strata (JSON)
    #[arg(long)]
    pub group: PathBuf,
    /// Also classify into gauge orbits and list canonical representatives
    #[arg(long)]
    pub orbits: bool,
    /// Enumeration cap; defaults to STOKES_CAP or 10^7
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args)]
pub struct DescentArgs {
    /// Stratified 2-complex (JSON)
    #[arg(long)]
    pub complex: PathBuf,
    /// Label group used uniformly on all strata (JSON)
    #[arg(long)]
    pub group: PathBuf,
    /// Free cellular deck action (JSON)
    #[arg(long)]
    pub action: PathBuf,
    /// Enumeration cap; defaults to STOKES_CAP or 10^7
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args)]
pub struct PushoutArgs {
    /// Cospan of presented groupoids (JSON)
    #[arg(long)]
    pub cospan: PathBuf,
    /// Enumeration target groupoid (JSON)
    #[arg(long)]
    pub target: PathBuf,
    /// Enumeration cap; defaults to STOKES_CAP or 10^7
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args)]
pub struct CurveArgs {
    /// Curve data: interior presentation plus punctures (JSON)
    #[arg(long)]
    pub spec: PathBuf,
    /// Enumeration target groupoid (JSON)
    #[arg(long)]
    pub target: PathBuf,
    /// Enumeration cap; defaults to STOKES_CAP or 10^7
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args)]
pub struct GlpArgs {
    /// Pole order (k >= 2)
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Kummer level (n >= 1)
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Number of random composable triples
    #[arg(long, default_value_t = 1000)]
    pub trials: u32,
    /// Relative tolerance for the axiom checks
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args)]
pub struct SubdivideArgs {
    /// Stratified 2-complex (JSON)
    #[arg(long)]
    pub complex: PathBuf,
    /// Label group used uniformly on all strata (JSON)
    #[arg(long)]
    pub group: PathBuf,
    /// Number of barycentric subdivisions to compare against (1 or 2)
    #[arg(long, default_value_t = 2)]
    pub depth: u32,
    /// Enumeration cap; defaults to STOKES_CAP or 10^7
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args)]
pub struct UnipotentArgs {
    /// Dimension per index, comma separated (e.g. 1,1,1)
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
    #[arg(long)]
    pub prime: u32,
    /// Preorder pairs a<b by index, comma separated (default: the chain)
    #[arg(long, value_delimiter = ',')]
    pub pairs: Vec<String>,
    /// Also emit the full group table and matrix realization
    #[arg(long)]
    pub emit_group: bool,
}

#[derive(Args)]
pub struct SuiteArgs {
    /// Experiment list (JSON)
    #[arg(long)]
    pub manifest: PathBuf,
}

/// Result value, pass flag, and input digests of one command run.
pub struct Outcome {
    pub result: serde_json::Value,
    pub pass: bool,
    pub inputs: BTreeMap<String, String>,
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Cocycles(a) => cocycles(a),
        Command::Descent(a) => descent(a),
        Command::Pushout(a) => pushout(a),
        Command::Curve(a) => curve(a),
        Command::GlpCheck(a) => glp_check(a),
        Command::SubdivideInvariance(a) => subdivide(a),
        Command::Unipotent(a) => unipotent(a),
        Command::Suite(a) => suite(a),
    }
}

fn unipotent(a: &UnipotentArgs) -> Result<Outcome> {
    use stokes_core::unipotent::{build_unipotent_stokes_group, PreorderedIndex};
    let n = a.dims.len();
    let pairs: Vec<(usize, usize)> = if a.pairs.is_empty() {
        (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
    } else {
        a.pairs
            .iter()
            .map(|s| {
                let (x, y) = s
                    .split_once('<')
                    .ok_or_else(|| Error::Parse(format!("pair {s} is not of the form a<b")))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index in pair {s}")))
                };
                Ok((parse(x)?, parse(y)?))
            })
            .collect::<Result<_>>()?
    };
    let labels = (0..n).map(|i| format!("q{i}")).collect();
    let idx = PreorderedIndex::new(labels, a.dims.clone(), &pairs)?;
    let built = build_unipotent_stokes_group(&idx, a.prime)?;
    let expected = (a.prime as u128).pow(idx.free_entry_count() as u32);
    let matches = built.group.order() as u128 == expected;
    let mut result = json!({
        "order": built.group.order(),
        "expected_order": expected,
        "free_entries": idx.free_entry_count(),
        "matches_formula": matches,
    });
    if a.emit_group {
        result["group"] =
            serde_json::to_value(codec::unipotent_to_doc(&built)).expect("group serializes");
    }
    Ok(Outcome { result, pass: matches, inputs: BTreeMap::new() })
}

fn cocycles(a: &CocyclesArgs) -> Result<Outcome> {
    let cap = a.cap.unwrap_or_else(cap_default);
    let mut inputs = BTreeMap::new();
    let complex = codec::parse_complex(&read_input(&a.complex, &mut inputs)?)?;
    let group = codec::parse_group(&read_input(&a.group, &mut inputs)?)?;
    let groups = StratumGroups::uniform(complex.poset(), group.clone());
    let sys = CocycleSystem::new(&complex, &groups);
    let all = sys.enumerate(cap)?;
    let mut result = json!({ "cocycle_count": all.len() });
    if a.orbits {
        let orbits = sys.gauge_orbits(&all, cap)?;
        let reps: Vec<Vec<String>> = orbits
            .iter()
            .map(|o| {
                o.representative
                    .labels
                    .iter()
                    .map(|&x| group.name(x).to_string())
                    .collect()
            })
            .collect();
        result["orbit_count"] = json!(orbits.len());
        result["representatives"] = json!(reps);
    }
    Ok(Outcome { result, pass: true, inputs })
}

fn descent(a: &DescentArgs) -> Result<Outcome> {
    let cap = a.cap.unwrap_or_else(cap_default);
    let mut inputs = BTreeMap::new();
    let complex = codec::parse_complex(&read_input(&a.complex, &mut inputs)?)?;
    let group = codec::parse_group(&read_input(&a.group, &mut inputs)?)?;
    let action = codec::parse_action(&read_input(&a.action, &mut inputs)?, &complex)?;
    let groups = StratumGroups::uniform(complex.poset(), group);
    let sys = CocycleSystem::new(&complex, &groups);
    let labels = LabelAction::trivial(action.deck().order(), &groups, complex.poset().len());
    let report = descent_compare(&sys, &action, &labels, cap)?;
    let pass = report.equal;
    Ok(Outcome {
        result: json!({
            "upstairs_hfp": report.upstairs_hfp,
            "downstairs": report.downstairs,
            "equal": report.equal,
        }),
        pass,
        inputs,
    })
}

fn pushout(a: &PushoutArgs) -> Result<Outcome> {
    let cap = a.cap.unwrap_or_else(cap_default);
    let mut inputs = BTreeMap::new();
    let cospan = codec::parse_cospan(&read_input(&a.cospan, &mut inputs)?)?;
    let target = codec::parse_target(&read_input(&a.target, &mut inputs)?)?;
    let report = rep_fiber_product_check(&cospan, &target, cap)?;
    Ok(Outcome {
        result: json!({
            "pushout_classes": report.pushout_classes,
            "cocone_classes": report.cocone_classes,
            "equal": report.equal,
        }),
        pass: report.equal,
        inputs,
    })
}

fn curve(a: &CurveArgs) -> Result<Outcome> {
    let cap = a.cap.unwrap_or_else(cap_default);
    let mut inputs = BTreeMap::new();
    let spec = codec::parse_curve_spec(&read_input(&a.spec, &mut inputs)?)?;
    let target = codec::parse_target(&read_input(&a.target, &mut inputs)?)?;
    let presenter = build_curve_presenter(&spec)?;
    let functors = enumerate_functors(&presenter.pushout.groupoid, &target, cap)?;
    let reduced = simplify(&presenter.pushout.groupoid)?;
    let classes = count_iso_classes(&reduced, &target, cap)?;

    // gluing audit: every functor sends each peripheral word to the image of
    // that puncture's cyclic Stokes word, conjugated by the bridge.
    let mut gluing_holds = true;
    for (i, peripheral) in presenter.peripherals.iter().enumerate() {
        let p = &spec.punctures[i];
        let cyclic_letters: Vec<Letter> = (0..p.sector_count())
            .map(|s| Letter::pos(presenter.stokes_gens[i][s][p.transitions[s]]))
            .collect();
        let cyclic = presenter.pushout.groupoid.word(&cyclic_letters)?;
        let bridge = presenter.pushout.bridges[i];
        for f in &functors {
            let delta = f.eval_word(&target, peripheral);
            let w = f.eval_word(&target, &cyclic);
            let b = f.gens[bridge];
            let conj = target.compose(target.inverse(b), target.compose(w, b));
            if delta != conj {
                gluing_holds = false;
            }
        }
    }
    Ok(Outcome {
        result: json!({
            "functor_count": functors.len(),
            "class_count": classes,
            "gluing_holds": gluing_holds,
        }),
        pass: gluing_holds,
        inputs,
    })
}

fn glp_check(a: &GlpArgs) -> Result<Outcome> {
    let chart = GlpChart::new(a.k, a.n, a.tol)?;
    let report = run_trials(&chart, a.trials, a.seed);
    let pass = report.pass;
    Ok(Outcome {
        result: serde_json::to_value(&report).expect("report serializes"),
        pass,
        inputs: BTreeMap::new(),
    })
}

fn subdivide(a: &SubdivideArgs) -> Result<Outcome> {
    let cap = a.cap.unwrap_or_else(cap_default);
    if !(1..=2).contains(&a.depth) {
        return Err(Error::Argument("depth must be 1 or 2".into()));
    }
    let mut inputs = BTreeMap::new();
    let complex = codec::parse_complex(&read_input(&a.complex, &mut inputs)?)?;
    let group = codec::parse_group(&read_input(&a.group, &mut inputs)?)?;

    let mut counts = Vec::new();
    let mut current = complex;
    for level in 0..=a.depth {
        let groups = StratumGroups::uniform(current.poset(), group.clone());
        let sys = CocycleSystem::new(&current, &groups);
        counts.push(sys.class_count(cap)?);
        if level < a.depth {
            // also check that a sample cocycle pulls back validly
            let (next, map) = current.barycentric_subdivide();
            let next_groups = StratumGroups::uniform(next.poset(), group.clone());
            let next_sys = CocycleSystem::new(&next, &next_groups);
            let trivial = stokes_core::cocycle::Cocycle {
                labels: current.edges().iter().map(|_| group.identity()).collect(),
            };
            pullback_cocycle(&sys, &next_sys, &map, &trivial)?;
            current = next;
        }
    }
    let equal = counts.windows(2).all(|w| w[0] == w[1]);
    Ok(Outcome {
        result: json!({ "class_counts": counts, "equal": equal }),
        pass: equal,
        inputs,
    })
}

#[derive(serde::Deserialize)]
struct Manifest {
    experiments: Vec<Experiment>,
}

#[derive(serde::Deserialize)]
struct Experiment {
    name: String,
    args: Vec<String>,
}

fn suite(a: &SuiteArgs) -> Result<Outcome> {
    let mut inputs = BTreeMap::new();
    let text = read_input(&a.manifest, &mut inputs)?;
    let manifest: Manifest =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("manifest: {e}")))?;

    let mut experiments = Vec::new();
    let mut all_pass = true;
    for exp in &manifest.experiments {
        let mut argv = vec!["stokes".to_string()];
        argv.extend(exp.args.iter().cloned());
        let entry = match Cli::try_parse_from(&argv) {
            Err(e) => {
                all_pass = false;
                json!({ "name": exp.name, "pass": false, "error": e.to_string() })
            }
            Ok(cli) => match run(&cli.command) {
                Ok(outcome) => {
                    all_pass &= outcome.pass;
                    for (k, v) in outcome.inputs {
                        inputs.insert(k, v);
                    }
                    json!({ "name": exp.name, "pass": outcome.pass, "result": outcome.result })
                }
                Err(e) => {
                    all_pass = false;
                    json!({ "name": exp.name, "pass": false, "error": e.to_string() })
                }
            },
        };
        experiments.push(entry);
    }
    Ok(Outcome {
        result: json!({ "experiments": experiments, "all_pass": all_pass }),
        pass: all_pass,
        inputs,
    })
}
