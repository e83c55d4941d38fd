//! Command-line front end: `gen`, `augment`, `verify`, `stats`, `export` and
//! `pair`.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O failure, 3 partial data
//! failure (unparsable inputs, oracle budget exhaustion, or label flips under
//! `verify --strict`).
//!
//! Every command that writes a directory also writes `manifest.jsonl` into
//! it: a `run` record with the command line, followed by one record per
//! item in input order. All randomness comes from `--seed` or from the seeds
//! embedded in chain strings, so a run is reproducible from its manifest.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::augment::Chain;
use crate::contrastive::make_pair;
use crate::formula::{parse_dimacs, serialize_dimacs, Formula, Label};
use crate::gen::{gen_corpus, Family, GenSpec, NumVars, SrConfig};
use crate::graph::{build_lig, graph_to_json, Provenance};
use crate::oracle::{solve_dpll, SolverConfig};
use crate::stats::corpus_stats;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_DATA: i32 = 3;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "SATAUG_THREADS";

pub const MANIFEST_FILE: &str = "manifest.jsonl";

#[derive(Parser, Debug)]
#[command(name = "sataug", version, about = "Satisfiability-preserving CNF augmentation toolkit")]
struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = THREADS_ENV, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a labelled random corpus.
    Gen(GenArgs),
    /// Apply an augmentation chain to every input formula.
    Augment(AugmentArgs),
    /// Compare oracle labels of matching files in two directories.
    Verify(VerifyArgs),
    /// Subsumption and decision-step statistics of a corpus.
    Stats(StatsArgs),
    /// Export LIG / LIG+ graphs as JSON.
    Export(ExportArgs),
    /// Build two augmented views of each input formula.
    Pair(PairArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    family: String,
    /// Variable count, or an inclusive range `lo..hi` (SR only).
    #[arg(long)]
    vars: String,
    #[arg(long, default_value_t = 0)]
    clauses: usize,
    /// Literals per clause (UR, PR).
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Power-law exponent (PR).
    #[arg(long, default_value_t = 1.7)]
    exp: f64,
    /// Instances (UR, PR) or pairs (SR).
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = SrConfig::default().bernoulli)]
    sr_bernoulli: f64,
    #[arg(long, default_value_t = SrConfig::default().geometric)]
    sr_geometric: f64,
    #[arg(long, short)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct AugmentArgs {
    /// Chain string, e.g. `CR:0.2:42,SC:0:0`. Empty copies the inputs.
    #[arg(long, allow_hyphen_values = true)]
    chain: String,
    #[arg(long, short)]
    out: PathBuf,
    /// Label inputs and outputs with the oracle and record decision counts.
    #[arg(long)]
    verify: bool,
    /// Record wall-clock time per item (makes the manifest non-reproducible).
    #[arg(long)]
    timings: bool,
    /// Files, directories (all `*.cnf` inside) or glob patterns.
    #[arg(required = true)]
    inputs: Vec<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    before: PathBuf,
    after: PathBuf,
    /// Exit with code 3 if any label changed.
    #[arg(long)]
    strict: bool,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct StatsArgs {
    /// Corpus directory, file, or glob pattern.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Measure decision counts again after this chain.
    #[arg(long)]
    chain: Option<String>,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long, short)]
    out: PathBuf,
    /// Link the two literal nodes of each variable (LIG+).
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    plus: bool,
    /// Chain string recorded in each document's provenance.
    #[arg(long)]
    chain: Option<String>,
    #[arg(required = true)]
    inputs: Vec<String>,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    chain1: String,
    #[arg(long, allow_hyphen_values = true)]
    chain2: String,
    #[arg(long, short)]
    out: PathBuf,
    /// Also export both views as LIG+ JSON.
    #[arg(long)]
    graphs: bool,
    #[arg(required = true)]
    inputs: Vec<String>,
}

/// Error carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            error: error.into(),
        }
    }

    fn io(error: impl Into<anyhow::Error>) -> Failure {
        Failure {
            code: EXIT_IO,
            error: error.into(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv: Vec<String> = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| match cli.command {
        Command::Gen(a) => cmd_gen(a, &argv),
        Command::Augment(a) => cmd_augment(a, &argv),
        Command::Verify(a) => cmd_verify(a),
        Command::Stats(a) => cmd_stats(a),
        Command::Export(a) => cmd_export(a, &argv),
        Command::Pair(a) => cmd_pair(a, &argv),
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            f.code
        }
    }
}

#[derive(Serialize)]
struct RunRecord<'a> {
    record: &'static str,
    command: &'a str,
    arguments: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    version: &'static str,
}

fn write_manifest(
    dir: &Path,
    command: &str,
    argv: &[String],
    seed: Option<u64>,
    records: &[serde_json::Value],
) -> Result<(), Failure> {
    let path = dir.join(MANIFEST_FILE);
    let mut out = Vec::new();
    let header = RunRecord {
        record: "run",
        command,
        // program name differs between installs
        arguments: argv.get(1..).unwrap_or_default(),
        seed,
        version: env!("CARGO_PKG_VERSION"),
    };
    serde_json::to_writer(&mut out, &header).expect("manifest record serializes");
    out.push(b'\n');
    for rec in records {
        serde_json::to_writer(&mut out, rec).expect("manifest record serializes");
        out.push(b'\n');
    }
    fs::write(&path, out)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::io)
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating {}", dir.display()))
        .map_err(Failure::io)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::io)
}

fn parse_num_vars(s: &str) -> Result<NumVars, Failure> {
    let bad = || Failure::usage(anyhow!("invalid --vars `{s}`, expected N or LO..HI"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
        Ok(NumVars::Range(lo, hi))
    } else {
        s.trim().parse().map(NumVars::Fixed).map_err(|_| bad())
    }
}

fn cmd_gen(a: GenArgs, argv: &[String]) -> CmdResult {
    let family: Family = a.family.parse().map_err(Failure::usage)?;
    let num_vars = parse_num_vars(&a.vars)?;
    if family != Family::Sr && matches!(num_vars, NumVars::Range(..)) {
        return Err(Failure::usage(anyhow!("variable ranges are only supported for SR")));
    }
    let fixed = match num_vars {
        NumVars::Fixed(n) => n,
        NumVars::Range(lo, _) => lo,
    };
    let mut spec = match family {
        Family::Sr => GenSpec::sr(fixed),
        Family::Ur => GenSpec::ur(fixed, a.clauses, a.k),
        Family::Pr => GenSpec::pr(fixed, a.clauses, a.k, a.exp),
    };
    spec.num_vars = num_vars;
    spec.sr = SrConfig {
        bernoulli: a.sr_bernoulli,
        geometric: a.sr_geometric,
    };
    spec.validate().map_err(Failure::usage)?;
    if a.count == 0 {
        return Err(Failure::usage(anyhow!("--count must be at least 1")));
    }

    let corpus = gen_corpus(&spec, a.count, a.seed).map_err(|e| Failure {
        code: EXIT_DATA,
        error: e.into(),
    })?;
    create_dir(&a.out)?;
    let prefix = family.to_string().to_ascii_lowercase();
    let names: Vec<String> = match family {
        Family::Sr => (0..a.count)
            .flat_map(|i| [format!("{prefix}-{i:05}-sat.cnf"), format!("{prefix}-{i:05}-unsat.cnf")])
            .collect(),
        _ => (0..a.count).map(|i| format!("{prefix}-{i:05}.cnf")).collect(),
    };
    let mut records = Vec::with_capacity(corpus.len());
    for (inst, name) in corpus.iter().zip(&names) {
        write_file(&a.out.join(name), &serialize_dimacs(&inst.formula))?;
        records.push(json!({
            "record": "instance",
            "path": name,
            "label": inst.label,
            "family": inst.meta.family,
            "seed": inst.meta.seed,
            "parameters": {
                "num_vars": inst.meta.num_vars,
                "num_clauses": inst.meta.num_clauses,
                "clause_len": inst.meta.clause_len,
                "power_exponent": inst.meta.power_exponent,
            },
        }));
    }
    write_manifest(&a.out, "gen", argv, Some(a.seed), &records)?;
    eprintln!("wrote {} instances to {}", corpus.len(), a.out.display());
    Ok(EXIT_OK)
}

/// Expands files, directories (their `*.cnf` files) and glob patterns into
/// a sorted, duplicate-free list.
fn expand_inputs(inputs: &[String]) -> Result<Vec<PathBuf>, Failure> {
    let mut out = Vec::new();
    for input in inputs {
        let path = Path::new(input);
        if path.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::io)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "cnf"))
                .collect();
            files.sort();
            out.extend(files);
        } else if input.contains(['*', '?', '[']) {
            let mut files: Vec<PathBuf> = glob::glob(input)
                .map_err(Failure::usage)?
                .filter_map(Result::ok)
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            out.extend(files);
        } else if path.is_file() {
            out.push(path.to_path_buf());
        } else {
            return Err(Failure::io(anyhow!("no such input: {input}")));
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|p| seen.insert(p.clone()));
    Ok(out)
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Reads and parses every input in parallel, keeping input order.
fn read_formulas(paths: &[PathBuf]) -> Vec<Result<Formula, String>> {
    paths
        .par_iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            parse_dimacs(&text)
                .map(|parsed| parsed.formula)
                .map_err(|e| format!("{}: {e}", p.display()))
        })
        .collect()
}

fn parse_chain(s: &str) -> Result<Chain, Failure> {
    s.parse::<Chain>()
        .with_context(|| format!("invalid chain `{s}`"))
        .map_err(Failure::usage)
}

#[derive(Serialize)]
struct OracleView {
    label: Label,
    decisions: u64,
}

fn oracle_view(f: &Formula) -> Result<OracleView, String> {
    solve_dpll(f, &SolverConfig::default())
        .map(|r| OracleView {
            label: r.label,
            decisions: r.decisions,
        })
        .map_err(|e| e.to_string())
}

fn cmd_augment(a: AugmentArgs, argv: &[String]) -> CmdResult {
    let chain = parse_chain(&a.chain)?;
    let paths = expand_inputs(&a.inputs)?;
    create_dir(&a.out)?;
    let formulas = read_formulas(&paths);

    let results: Vec<serde_json::Value> = paths
        .par_iter()
        .zip(formulas)
        .enumerate()
        .map(|(index, (path, parsed))| {
            let start = Instant::now();
            let name = file_name(path);
            let effective = chain.reseeded(index as u64);
            let mut rec = json!({
                "record": "instance",
                "index": index,
                "input": path.to_string_lossy(),
                "chain": effective.to_string(),
            });
            let outcome = parsed.and_then(|f| {
                let out = effective.apply(&f).map_err(|e| e.to_string())?;
                Ok((f, out))
            });
            match outcome {
                Ok((before, after)) => {
                    let out_path = a.out.join(&name);
                    if let Err(e) = fs::write(&out_path, serialize_dimacs(&after)) {
                        rec["io_error"] = json!(format!("{}: {e}", out_path.display()));
                    } else {
                        rec["output"] = json!(name);
                    }
                    if a.verify {
                        match (oracle_view(&before), oracle_view(&after)) {
                            (Ok(b), Ok(f)) => {
                                rec["label_before"] = json!(b.label);
                                rec["label_after"] = json!(f.label);
                                rec["decisions_before"] = json!(b.decisions);
                                rec["decisions_after"] = json!(f.decisions);
                            }
                            (Err(e), _) | (_, Err(e)) => rec["error"] = json!(e),
                        }
                    }
                }
                Err(e) => rec["error"] = json!(e),
            }
            if a.timings {
                rec["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
            }
            rec
        })
        .collect();

    if let Some(e) = results.iter().find_map(|r| r.get("io_error")) {
        return Err(Failure::io(anyhow!("{}", e.as_str().unwrap_or_default())));
    }
    write_manifest(&a.out, "augment", argv, None, &results)?;
    let failed = results.iter().filter(|r| r.get("error").is_some()).count();
    for r in results.iter().filter_map(|r| r.get("error")) {
        eprintln!("error: {}", r.as_str().unwrap_or_default());
    }
    eprintln!(
        "augmented {} of {} inputs into {}",
        results.len() - failed,
        results.len(),
        a.out.display()
    );
    Ok(if failed > 0 { EXIT_DATA } else { EXIT_OK })
}

#[derive(Serialize)]
struct PairReport {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    label_before: Option<Label>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label_after: Option<Label>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decisions_before: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decisions_after: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    pairs: usize,
    preserved: usize,
    flipped: usize,
    errors: usize,
    details: Vec<PairReport>,
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    for dir in [&a.before, &a.after] {
        if !dir.is_dir() {
            return Err(Failure::io(anyhow!("not a directory: {}", dir.display())));
        }
    }
    let before = expand_inputs(&[a.before.to_string_lossy().into_owned()])?;
    let by_name: BTreeMap<String, PathBuf> =
        before.into_iter().map(|p| (file_name(&p), p)).collect();
    let after = expand_inputs(&[a.after.to_string_lossy().into_owned()])?;
    let matched: Vec<(String, PathBuf, PathBuf)> = after
        .into_iter()
        .filter_map(|p| {
            let name = file_name(&p);
            by_name.get(&name).map(|b| (name, b.clone(), p))
        })
        .collect();

    let details: Vec<PairReport> = matched
        .par_iter()
        .map(|(name, b, f)| {
            let mut rep = PairReport {
                file: name.clone(),
                label_before: None,
                label_after: None,
                decisions_before: None,
                decisions_after: None,
                error: None,
            };
            let parsed = read_formulas(&[b.clone(), f.clone()]);
            let views: Result<Vec<OracleView>, String> = parsed
                .into_iter()
                .map(|r| r.and_then(|f| oracle_view(&f)))
                .collect();
            match views {
                Ok(v) => {
                    rep.label_before = Some(v[0].label);
                    rep.label_after = Some(v[1].label);
                    rep.decisions_before = Some(v[0].decisions);
                    rep.decisions_after = Some(v[1].decisions);
                }
                Err(e) => rep.error = Some(e),
            }
            rep
        })
        .collect();

    let errors = details.iter().filter(|d| d.error.is_some()).count();
    let flipped = details
        .iter()
        .filter(|d| d.error.is_none() && d.label_before != d.label_after)
        .count();
    let report = VerifyReport {
        pairs: details.len(),
        preserved: details.len() - errors - flipped,
        flipped,
        errors,
        details,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Some(path) = &a.report {
        write_file(path, &text)?;
    }
    print!("{text}");
    let _ = std::io::stdout().flush();
    eprintln!(
        "{} pairs: {} preserved, {} flipped, {} errors",
        report.pairs, report.preserved, report.flipped, report.errors
    );
    Ok(if report.errors > 0 || (a.strict && report.flipped > 0) {
        EXIT_DATA
    } else {
        EXIT_OK
    })
}

fn cmd_stats(a: StatsArgs) -> CmdResult {
    let chain = a.chain.as_deref().map(parse_chain).transpose()?;
    let paths = expand_inputs(&a.inputs)?;
    let mut formulas = Vec::with_capacity(paths.len());
    let mut failed = 0;
    for r in read_formulas(&paths) {
        match r {
            Ok(f) => formulas.push(f),
            Err(e) => {
                eprintln!("error: {e}");
                failed += 1;
            }
        }
    }
    let stats = corpus_stats(&formulas, chain.as_ref(), &SolverConfig::default()).map_err(|e| {
        Failure {
            code: EXIT_DATA,
            error: e.into(),
        }
    })?;
    println!(
        "{}",
        serde_json::to_string_pretty(&stats).expect("stats serialize")
    );
    if let Some(ratio) = stats.median_ratio {
        if !(0.5..=2.0).contains(&ratio) {
            log::warn!("median decision ratio {ratio:.3} outside [0.5, 2]");
        }
    }
    Ok(if failed > 0 { EXIT_DATA } else { EXIT_OK })
}

fn graph_name(path: &Path, suffix: &str) -> String {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    format!("{stem}{suffix}.json")
}

fn cmd_export(a: ExportArgs, argv: &[String]) -> CmdResult {
    if let Some(c) = &a.chain {
        parse_chain(c)?;
    }
    let paths = expand_inputs(&a.inputs)?;
    create_dir(&a.out)?;
    let formulas = read_formulas(&paths);
    let mut records = Vec::with_capacity(paths.len());
    let mut failed = 0;
    for (index, (path, parsed)) in paths.iter().zip(formulas).enumerate() {
        let mut rec = json!({"record": "instance", "index": index, "input": path.to_string_lossy()});
        match parsed {
            Ok(f) => {
                let name = graph_name(path, "");
                let prov = Provenance {
                    source: Some(file_name(path)),
                    chain: a.chain.clone(),
                };
                write_file(&a.out.join(&name), &graph_to_json(&build_lig(&f, a.plus), &prov))?;
                rec["output"] = json!(name);
            }
            Err(e) => {
                eprintln!("error: {e}");
                rec["error"] = json!(e);
                failed += 1;
            }
        }
        records.push(rec);
    }
    write_manifest(&a.out, "export", argv, None, &records)?;
    Ok(if failed > 0 { EXIT_DATA } else { EXIT_OK })
}

fn cmd_pair(a: PairArgs, argv: &[String]) -> CmdResult {
    let first = parse_chain(&a.chain1)?;
    let second = parse_chain(&a.chain2)?;
    let paths = expand_inputs(&a.inputs)?;
    create_dir(&a.out)?;
    let formulas = read_formulas(&paths);
    let mut records = Vec::with_capacity(paths.len());
    let mut failed = 0;
    for (index, (path, parsed)) in paths.iter().zip(formulas).enumerate() {
        let (c1, c2) = (first.reseeded(index as u64), second.reseeded(index as u64));
        let mut rec = json!({
            "record": "instance",
            "index": index,
            "input": path.to_string_lossy(),
            "chain1": c1.to_string(),
            "chain2": c2.to_string(),
        });
        let outcome = parsed.and_then(|f| make_pair(&f, &c1, &c2).map_err(|e| e.to_string()));
        match outcome {
            Ok((v1, v2)) => {
                let stem = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                let names = [format!("{stem}.view1.cnf"), format!("{stem}.view2.cnf")];
                for ((name, view), chain) in names.iter().zip([&v1, &v2]).zip([&c1, &c2]) {
                    write_file(&a.out.join(name), &serialize_dimacs(view))?;
                    if a.graphs {
                        let prov = Provenance {
                            source: Some(file_name(path)),
                            chain: Some(chain.to_string()),
                        };
                        let gname = name.trim_end_matches(".cnf").to_string() + ".json";
                        write_file(&a.out.join(gname), &graph_to_json(&build_lig(view, true), &prov))?;
                    }
                }
                rec["outputs"] = json!(names);
            }
            Err(e) => {
                eprintln!("error: {e}");
                rec["error"] = json!(e);
                failed += 1;
            }
        }
        records.push(rec);
    }
    write_manifest(&a.out, "pair", argv, None, &records)?;
    Ok(if failed > 0 { EXIT_DATA } else { EXIT_OK })
}
