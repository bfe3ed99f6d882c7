//! Command-line front end: statistics queries, tableau/growth renderings,
//! verification sweeps, and counting censuses.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 guard exceeded. The `DESCENTKIT_MAX_N` environment variable raises the
//! size guards for all long-running commands.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use descentkit::census::{self, Check};
use descentkit::growth::GrowthDiagram;
use descentkit::oracle;
use descentkit::perm::{DescentSet, Permutation};
use descentkit::render;
use descentkit::rsk::rsk;
use descentkit::stats::{
    alternating_length, len_word, ls_d, ls_profile, ls_set, Composition, DescentWord,
};
use descentkit::tableau::StandardTableau;

#[derive(Parser)]
#[command(name = "descentkit", version, about = "Descent-restricted subsequence statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a statistic of a permutation.
    Stat(StatArgs),
    /// Print the insertion and recording tableaux of a permutation.
    Rsk(RenderArgs),
    /// Print the evacuation tableau of a tableau (or of Q of a permutation).
    Evac(RenderArgs),
    /// Render the evacuation growth diagram.
    Growth(GrowthArgs),
    /// Run exhaustive invariant sweeps and write a JSON report.
    Verify(VerifyArgs),
    /// Run a counting census and write a JSON report.
    Census(CensusArgs),
}

#[derive(Args)]
struct StatArgs {
    /// Permutation in one-line notation ("4365172" or "4 3 6 5 1 7 2").
    perm: String,
    /// Longest subsequence with exactly this many descents.
    #[arg(long, conflicts_with_all = ["set", "comp", "word", "alt", "all"])]
    d: Option<usize>,
    /// Longest subsequence with exactly this descent set (comma list, "" for empty).
    #[arg(long, conflicts_with_all = ["comp", "word", "alt", "all"])]
    set: Option<String>,
    /// Descent set given as a composition, e.g. "2,3,1".
    #[arg(long, conflicts_with_all = ["word", "alt", "all"])]
    comp: Option<String>,
    /// Longest subsequence whose descent word is a prefix of w^inf.
    #[arg(long, conflicts_with_all = ["alt", "all"])]
    word: Option<String>,
    /// Longest alternating subsequence.
    #[arg(long, conflicts_with_all = ["all"])]
    alt: bool,
    /// The full profile over every descent set.
    #[arg(long)]
    all: bool,
    /// With --all: use the brute-force oracle instead of the triangle walk.
    #[arg(long)]
    oracle: bool,
    /// Emit JSON instead of plain text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Permutation, or a bracketed tableau such as "[1 2 4][3][5]".
    input: String,
    #[arg(long, default_value = "ascii")]
    format: String,
}

#[derive(Args)]
struct GrowthArgs {
    /// Permutation, or a bracketed tableau such as "[1 2 4][3][5]".
    input: String,
    /// One of: ascii, dot, json.
    #[arg(long, default_value = "ascii")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest permutation size to sweep.
    #[arg(long = "max-n", default_value_t = 6)]
    max_n: usize,
    /// Comma list of check names, or "all".
    #[arg(long, default_value = "all")]
    checks: String,
    /// Worker threads for the sweeps (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Report file path.
    #[arg(long, default_value = "descentkit-verify.json")]
    out: String,
    /// Omit the timestamp from the report for byte-stable output.
    #[arg(long)]
    stable: bool,
}

#[derive(Args)]
struct CensusArgs {
    /// Permutation size (asc-is, ls1-deficient, classes).
    #[arg(long)]
    n: Option<usize>,
    /// One of: asc-is, ls1-deficient, classes, bijection.
    #[arg(long)]
    which: String,
    /// Shape for --which bijection, e.g. "3 2 2".
    #[arg(long)]
    shape: Option<String>,
    /// Worker threads (0 = automatic).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Report file path.
    #[arg(long, default_value = "descentkit-census.json")]
    out: String,
    /// Omit the timestamp from the report for byte-stable output.
    #[arg(long)]
    stable: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn guard(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Stat(args) => cmd_stat(args),
        Command::Rsk(args) => cmd_rsk(args),
        Command::Evac(args) => cmd_evac(args),
        Command::Growth(args) => cmd_growth(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Census(args) => cmd_census(args),
    }
}

/// Environment override for the size guards.
fn effective_guard(default: usize) -> usize {
    std::env::var("DESCENTKIT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .map_or(default, |v: usize| v.max(default))
}

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    text.parse()
        .map_err(|e| Failure::usage(format!("invalid permutation `{text}`: {e}")))
}

fn parse_set(text: &str) -> Result<DescentSet, Failure> {
    text.parse()
        .map_err(|e| Failure::usage(format!("invalid descent set `{text}`: {e}")))
}

fn format_set(set: &DescentSet) -> String {
    let parts: Vec<String> = set.positions().iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn cmd_stat(args: StatArgs) -> Result<u8, Failure> {
    let p = parse_perm(&args.perm)?;
    if args.oracle && !args.all {
        return Err(Failure::usage("--oracle only applies to --all"));
    }
    if args.all {
        return stat_all(&p, args.oracle, args.json);
    }
    let (label, value) = if let Some(d) = args.d {
        (format!("ls_d d={d}"), ls_d(&p, d))
    } else if let Some(text) = &args.set {
        let set = parse_set(text)?;
        (format!("ls_set D={}", format_set(&set)), ls_set(&p, &set))
    } else if let Some(text) = &args.comp {
        let comp: Composition = text
            .parse()
            .map_err(|e| Failure::usage(format!("invalid composition `{text}`: {e}")))?;
        let set = comp.to_descents();
        (format!("ls_set D={}", format_set(&set)), ls_set(&p, &set))
    } else if let Some(text) = &args.word {
        let word: DescentWord = text
            .parse()
            .map_err(|e| Failure::usage(format!("invalid descent word `{text}`: {e}")))?;
        (format!("len_w w={word}"), len_word(&p, &word))
    } else if args.alt {
        ("as".to_string(), alternating_length(&p))
    } else {
        return Err(Failure::usage(
            "select exactly one of --d, --set, --comp, --word, --alt, --all",
        ));
    };
    if args.json {
        println!(
            "{}",
            json!({ "perm": p.entries(), "statistic": label, "value": value })
        );
    } else {
        println!("{value}");
    }
    Ok(0)
}

fn stat_all(p: &Permutation, use_oracle: bool, as_json: bool) -> Result<u8, Failure> {
    let n = p.n();
    let values: Vec<usize> = if use_oracle {
        let guard = effective_guard(oracle::BRUTE_FORCE_MAX_N);
        let profile = oracle::brute_profile_with_guard(p, guard)
            .map_err(|e| Failure::guard(e.to_string()))?;
        profile.values().iter().map(|&v| v as usize).collect()
    } else {
        let guard = effective_guard(14);
        if n > guard {
            return Err(Failure::guard(format!(
                "n = {n} exceeds the profile guard {guard}; use --oracle or DESCENTKIT_MAX_N"
            )));
        }
        ls_profile(p)
    };
    if as_json {
        let profile: Vec<Value> = values
            .iter()
            .enumerate()
            .map(|(mask, &v)| {
                json!({
                    "set": DescentSet::from_mask(mask as u64).positions(),
                    "value": v,
                })
            })
            .collect();
        println!("{}", json!({ "perm": p.entries(), "n": n, "profile": profile }));
    } else {
        let mut out = String::new();
        for (mask, &v) in values.iter().enumerate() {
            let set = DescentSet::from_mask(mask as u64);
            let _ = writeln!(out, "{}\t{v}", format_set(&set));
        }
        print!("{out}");
    }
    Ok(0)
}

/// A permutation, or a bracketed tableau.
fn parse_tableau_or_perm(input: &str) -> Result<StandardTableau, Failure> {
    let trimmed = input.trim();
    if trimmed.starts_with('[') {
        trimmed
            .parse()
            .map_err(|e| Failure::usage(format!("invalid tableau `{trimmed}`: {e}")))
    } else {
        Ok(rsk(&parse_perm(trimmed)?).recording)
    }
}

fn cmd_rsk(args: RenderArgs) -> Result<u8, Failure> {
    let p = parse_perm(&args.input)?;
    let pair = rsk(&p);
    match args.format.as_str() {
        "ascii" => {
            println!("P: {}", pair.insertion);
            println!("Q: {}", pair.recording);
        }
        "json" => {
            println!(
                "{}",
                json!({ "P": pair.insertion.rows(), "Q": pair.recording.rows() })
            );
        }
        other => return Err(Failure::usage(format!("unknown format `{other}`"))),
    }
    Ok(0)
}

fn cmd_evac(args: RenderArgs) -> Result<u8, Failure> {
    let q = parse_tableau_or_perm(&args.input)?;
    let e = descentkit::growth::evacuate(&q);
    match args.format.as_str() {
        "ascii" => println!("{e}"),
        "json" => println!("{}", json!({ "evac": e.rows() })),
        other => return Err(Failure::usage(format!("unknown format `{other}`"))),
    }
    Ok(0)
}

fn cmd_growth(args: GrowthArgs) -> Result<u8, Failure> {
    let q = parse_tableau_or_perm(&args.input)?;
    let g = GrowthDiagram::from_tableau(&q);
    match args.format.as_str() {
        "ascii" => print!("{}", render::growth_to_ascii(&g)),
        "dot" => print!("{}", render::growth_to_dot(&g)),
        "json" => println!("{}", render::growth_to_json(&g)),
        other => return Err(Failure::usage(format!("unknown format `{other}`"))),
    }
    Ok(0)
}

fn install_pool(jobs: usize) -> Result<Option<rayon::ThreadPool>, Failure> {
    if jobs == 0 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map(Some)
        .map_err(|e| Failure::io(format!("thread pool: {e}")))
}

fn report_meta(command: &str, parameters: Value, stable: bool) -> Value {
    let mut meta = json!({
        "tool": "descentkit",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "parameters": parameters,
    });
    if !stable {
        let ms = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0);
        meta["generated_unix_ms"] = json!(ms);
    }
    meta
}

fn write_report(path: &str, report: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| Failure::io(format!("serialize report: {e}")))?;
    std::fs::write(path, text + "\n").map_err(|e| Failure::io(format!("write {path}: {e}")))
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let checks: Vec<Check> = if args.checks.trim() == "all" {
        Check::ALL.to_vec()
    } else {
        args.checks
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|name| {
                Check::from_name(name)
                    .ok_or_else(|| Failure::usage(format!("unknown check `{name}`")))
            })
            .collect::<Result<_, _>>()?
    };
    if checks.is_empty() {
        return Err(Failure::usage("no checks selected"));
    }
    let guard = effective_guard(census::SWEEP_MAX_N);
    let pool = install_pool(args.jobs)?;
    let sweep = {
        let run = || census::sweep_verify(args.max_n, &checks, guard);
        match &pool {
            Some(pool) => pool.install(run),
            None => run(),
        }
    }
    .map_err(|e| Failure::guard(e.to_string()))?;

    for &check in &checks {
        let rows: Vec<_> = sweep
            .results
            .iter()
            .filter(|r| r.check == check.name())
            .collect();
        let population: u64 = rows.iter().map(|r| r.population).sum();
        let failures: u64 = rows.iter().map(|r| r.failure_count).sum();
        if failures == 0 {
            println!("PASS {} n<={} population={population}", check.name(), args.max_n);
        } else {
            let first = rows
                .iter()
                .flat_map(|r| r.failures.iter())
                .next()
                .map(String::as_str)
                .unwrap_or("");
            println!(
                "FAIL {} n<={} failures={failures} first: {first}",
                check.name(),
                args.max_n
            );
        }
    }

    let report = json!({
        "meta": report_meta(
            "verify",
            json!({ "max_n": args.max_n, "checks": checks.iter().map(|c| c.name()).collect::<Vec<_>>() }),
            args.stable,
        ),
        "results": sweep.results,
    });
    write_report(&args.out, &report)?;
    Ok(if sweep.all_passed() { 0 } else { 1 })
}

fn cmd_census(args: CensusArgs) -> Result<u8, Failure> {
    let pool = install_pool(args.jobs)?;
    let size = || {
        args.n
            .ok_or_else(|| Failure::usage("--n is required for this census"))
    };
    let run = || -> Result<(Value, String, bool), Failure> {
        match args.which.as_str() {
            "asc-is" => {
                let guard = effective_guard(census::CENSUS_MAX_N);
                let r = census::count_asc_eq_is_minus_1(size()?, guard)
                    .map_err(|e| Failure::guard(e.to_string()))?;
                let line = format!("direct={} formula={}", r.direct, r.formula);
                let ok = r.matches();
                Ok((serde_json::to_value(&r).unwrap(), line, ok))
            }
            "ls1-deficient" => {
                let guard = effective_guard(census::CENSUS_MAX_N);
                let r = census::count_ls1_deficient(size()?, guard)
                    .map_err(|e| Failure::guard(e.to_string()))?;
                let line = format!("direct={} formula={}", r.direct, r.formula);
                let ok = r.matches();
                Ok((serde_json::to_value(&r).unwrap(), line, ok))
            }
            "classes" => {
                let guard = effective_guard(census::EQUIVALENCE_MAX_N);
                let r = census::equivalence_classes(size()?, guard)
                    .map_err(|e| Failure::guard(e.to_string()))?;
                let line = format!(
                    "by_profile={} by_triangle={} identical={}",
                    r.by_profile, r.by_triangle, r.identical
                );
                let ok = r.identical && r.by_profile == r.by_triangle;
                Ok((serde_json::to_value(&r).unwrap(), line, ok))
            }
            "bijection" => {
                let text = args
                    .shape
                    .as_deref()
                    .ok_or_else(|| Failure::usage("--shape is required for --which bijection"))?;
                let shape: descentkit::tableau::Partition = text
                    .parse()
                    .map_err(|e| Failure::usage(format!("invalid shape `{text}`: {e}")))?;
                let guard = effective_guard(descentkit::tableau::SYT_ENUMERATION_CAP);
                let r = descentkit::tableau::descent_count_bijection_check(&shape, guard)
                    .map_err(|e| Failure::guard(e.to_string()))?;
                let line = format!(
                    "direct={} formula={} family={} injective={}",
                    r.direct, r.formula, r.map_in_family, r.map_injective
                );
                let ok = r.passes();
                let value = json!({
                    "shape": shape.parts(),
                    "direct": r.direct,
                    "formula": r.formula.to_string(),
                    "map_in_family": r.map_in_family,
                    "map_injective": r.map_injective,
                });
                Ok((value, line, ok))
            }
            other => Err(Failure::usage(format!("unknown census `{other}`"))),
        }
    };
    let (value, line, ok) = match &pool {
        Some(pool) => pool.install(run),
        None => run(),
    }?;
    println!("{line}");
    let report = json!({
        "meta": report_meta(
            "census",
            json!({ "n": args.n, "which": args.which, "shape": args.shape }),
            args.stable,
        ),
        "results": value,
    });
    write_report(&args.out, &report)?;
    Ok(if ok { 0 } else { 1 })
}
