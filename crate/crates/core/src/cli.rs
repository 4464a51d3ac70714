//! The `dpr` command line: `report`, `verify` and `make`.
//!
//! Exit status is 0 when everything holds, 1 for unusable input and 2 when a
//! counterexample or a failed axiom was found.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bicrossed::{accepted_data_lattice, builtin_pair};
use crate::corpus::{family, join_instance_args, parse_instance, Instance, FAMILIES};
use crate::error::{Error, Result};
use crate::group::builtin_group;
use crate::io::{to_json, CocycleFile, DatumFile, GroupFile, MatchedPairFile};
use crate::pipeline::{analyze_all, AnalysisOptions, InstanceReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dpr", version, about = "Exponents of twisted Drinfeld doubles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exponent report for explicit instances.
    Report {
        /// e.g. `cyclic:3 zeta:1/3`, `inflated:d4:2:1/2`, `trivial:s3`, a cocycle file
        instances: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Runs the battery over a corpus; exits 2 on any counterexample.
    Verify {
        /// family names (`default`, `cyclic`, `inflated`, `trivial`,
        /// `bicrossed`), cocycle file globs or instances
        corpus: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
        /// Coboundary perturbations per instance of order at most 9.
        #[arg(long, default_value_t = 0)]
        invariance: usize,
    },
    /// Writes a group, cocycle, matched pair or datum file.
    Make {
        #[command(subcommand)]
        what: MakeCommand,
        /// Output path; standard output when absent.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum MakeCommand {
    /// `group cyclic 6` or `group <builtin name>`.
    Group { args: Vec<String> },
    /// `cocycle cyclic 3 1/3` or `cocycle <instance>`.
    Cocycle { args: Vec<String> },
    /// `matched-pair s3`.
    MatchedPair { name: String },
    /// A seeded datum accepted by a builtin pair.
    Datum {
        pair: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// JSON manifest with `instances` and `options`.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Largest group order for the global coboundary solver.
    #[arg(long)]
    solver_cap: Option<usize>,
    /// Largest group order for the H³ computation.
    #[arg(long)]
    h3_cap: Option<usize>,
    /// Also compute |H³(G, C^×)|.
    #[arg(long)]
    with_h3: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Skip the axiom suite.
    #[arg(long)]
    no_axioms: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, hide = true)]
    fault_theta: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h3_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub with_h3: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub instances: Vec<String>,
    #[serde(default)]
    pub options: ManifestOptions,
}

#[derive(Serialize)]
struct ErrorEntry {
    label: String,
    error: String,
}

#[derive(Serialize)]
struct RunDocument<'a> {
    schema: u32,
    command: &'a str,
    instances: usize,
    passed: usize,
    counterexamples: usize,
    errors: usize,
    reports: Vec<&'a InstanceReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failed: Vec<ErrorEntry>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Report { instances, run } => run_instances("report", &instances, &run, 0, false, out),
        Command::Verify { corpus, run, invariance } => run_instances("verify", &corpus, &run, invariance, true, out),
        Command::Make { what, out: path } => make(what, path.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn is_glob(s: &str) -> bool {
    s.contains(['*', '?', '['])
}

/// Expands corpus arguments into instances. Families are accepted only when
/// `families` is set.
fn collect(args: &[String], base: &Path, seed: u64, families: bool) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for a in join_instance_args(args) {
        if families && (a == "default" || FAMILIES.contains(&a.as_str())) {
            out.extend(family(&a, seed)?);
        } else if families && is_glob(&a) {
            let pattern = base.join(&a);
            let paths = glob::glob(&pattern.to_string_lossy()).map_err(|e| Error::Parse(format!("{a}: {e}")))?;
            for p in paths {
                let p = p.map_err(|e| Error::Parse(e.to_string()))?;
                out.push(parse_instance(&p.to_string_lossy(), Path::new("."))?);
            }
        } else {
            out.push(parse_instance(&a, base)?);
        }
    }
    Ok(out)
}

fn run_instances(
    command: &str,
    args: &[String],
    run: &RunArgs,
    invariance: usize,
    families: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let (manifest, base) = match &run.manifest {
        Some(p) => {
            let m: Manifest = crate::io::read_json(p)?;
            (m, p.parent().unwrap_or(Path::new(".")).to_path_buf())
        }
        None => (Manifest::default(), PathBuf::from(".")),
    };
    let mo = &manifest.options;
    let defaults = AnalysisOptions::default();
    let seed = run.seed.or(mo.seed).unwrap_or(defaults.seed);
    let opts = AnalysisOptions {
        solver_cap: run.solver_cap.or(mo.solver_cap).unwrap_or(defaults.solver_cap),
        h3_cap: run.h3_cap.or(mo.h3_cap).unwrap_or(defaults.h3_cap),
        with_h3: run.with_h3 || mo.with_h3.unwrap_or(false),
        with_axioms: !run.no_axioms,
        invariance_samples: invariance,
        seed,
        fault_theta: run.fault_theta,
        ..defaults
    };
    let jobs = run
        .jobs
        .or(mo.jobs)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut instances = collect(&manifest.instances, &base, seed, families)?;
    instances.extend(collect(args, Path::new("."), seed, families)?);
    if instances.is_empty() {
        return Err(Error::Parse(format!("{command}: no instances given")));
    }
    let results = analyze_all(&instances, &opts, jobs)?;
    let mut reports = Vec::new();
    let mut failed = Vec::new();
    let mut violation = false;
    for (label, r) in &results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => {
                violation |= matches!(e, Error::TheoremViolation(_));
                failed.push(ErrorEntry { label: label.clone(), error: e.to_string() });
            }
        }
    }
    let counterexamples = reports.iter().filter(|r| !r.passes()).count();
    let doc = RunDocument {
        schema: 1,
        command,
        instances: results.len(),
        passed: reports.len() - counterexamples,
        counterexamples,
        errors: failed.len(),
        reports,
        failed,
    };
    match run.format {
        Format::Json => out.write_all(to_json(&doc)?.as_bytes())?,
        Format::Table => write_table(&doc, out)?,
    }
    Ok(if counterexamples > 0 || violation {
        EXIT_COUNTEREXAMPLE
    } else if doc.errors > 0 {
        EXIT_INPUT
    } else {
        EXIT_OK
    })
}

fn write_table(doc: &RunDocument, out: &mut dyn Write) -> Result<()> {
    let width = doc.reports.iter().map(|r| r.label.len()).chain(doc.failed.iter().map(|f| f.label.len())).max();
    let w = width.unwrap_or(8).max(8);
    writeln!(out, "{:<w$}  {:>4}  {:>5}  {:>5}  {:>5}  {:>14}  {:>4}  status", "instance", "|G|", "expG", "expω", "expD", "pi/rib/mon", "e(ω)")?;
    for r in &doc.reports {
        let e = &r.exponent;
        let routes = format!("{}/{}/{}", e.routes.pi, e.routes.ribbon, e.routes.monodromy);
        let eo = e.e_omega_global.map_or("-".to_string(), |v| v.to_string());
        let failures = r.failures();
        let status = if failures.is_empty() { "ok".to_string() } else { format!("FAIL {}", failures.join(",")) };
        writeln!(
            out,
            "{:<w$}  {:>4}  {:>5}  {:>5}  {:>5}  {:>14}  {:>4}  {status}",
            r.label, e.group_order, e.exp_g, e.exp_omega_g, e.exp_double, routes, eo
        )?;
    }
    for f in &doc.failed {
        writeln!(out, "{:<w$}  error: {}", f.label, f.error)?;
    }
    writeln!(
        out,
        "{} instances, {} passed, {} with counterexamples, {} errors",
        doc.instances, doc.passed, doc.counterexamples, doc.errors
    )?;
    Ok(())
}

fn make(what: MakeCommand, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let text = match what {
        MakeCommand::Group { args } => {
            let name = match args.as_slice() {
                [kind, n] if kind == "cyclic" => format!("c{n}"),
                [name] => name.clone(),
                _ => return Err(Error::Parse("usage: make group cyclic <n> | make group <name>".into())),
            };
            to_json(&GroupFile::from_group(&builtin_group(&name)?))?
        }
        MakeCommand::Cocycle { args } => {
            let desc = match args.as_slice() {
                [kind, n, zeta] if kind == "cyclic" => format!("cyclic:{n} zeta:{zeta}"),
                [kind, n] if kind == "cyclic" => format!("cyclic:{n}"),
                _ => join_instance_args(&args).join("+"),
            };
            let inst = parse_instance(&desc, Path::new("."))?;
            let group_ref = inst
                .group_ref
                .clone()
                .ok_or_else(|| Error::Parse(format!("`{desc}` has no named group to refer to")))?;
            to_json(&CocycleFile::from_cocycle(&inst.omega, &group_ref, inst.kind()))?
        }
        MakeCommand::MatchedPair { name } => {
            let (mp, f_ref, g_ref) = builtin_pair(&name)?;
            to_json(&MatchedPairFile::from_pair(&mp, f_ref, g_ref))?
        }
        MakeCommand::Datum { pair, seed } => {
            let (mp, _, _) = builtin_pair(&pair)?;
            let bic = mp.build()?;
            let lattice = accepted_data_lattice(&bic, bic.group.order() as u64)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let datum = lattice.sample(&mut rng, 1).pop().expect("one sample");
            to_json(&DatumFile::from_datum(&datum))?
        }
    };
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}
