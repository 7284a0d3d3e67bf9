//! Batch front end: `construct`, `certify`, `bounds`, `table` and `selftest`.
//!
//! Exit codes: `certify` returns 0 certified, 1 refuted, 2 inconclusive; every
//! command returns 3 on error.

pub mod config;
pub mod table;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;
use sumrank::certify::{self, Property};
use sumrank::construct::recipes;
use sumrank::{descriptor, hamming, Field, MatrixProfile, SumRankCode};

use config::{parse_pairs, recipe_params, BudgetConfig, JobConfig};

pub const EXIT_ERROR: i32 = 3;
pub const THREADS_ENV: &str = "SUMRANK_THREADS";

#[derive(Debug, Parser)]
#[command(name = "sumrank", version, about = "Construct and certify sum-rank metric codes")]
pub struct Cli {
    /// Worker threads (default: $SUMRANK_THREADS, else all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code from a recipe and write its JSON descriptor.
    Construct(ConstructArgs),
    /// Compute invariants of a code and decide a property.
    Certify(CertifyArgs),
    /// Evaluate a closed-form bound or a family's sufficient conditions.
    Bounds(BoundsArgs),
    /// Compare size bounds over a parameter grid.
    Table(TableArgs),
    /// Run built-in consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Recipe name; see --list.
    pub recipe: Option<String>,
    /// Recipe parameters as key=value.
    pub params: Vec<String>,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// List recipes and their parameters.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// min-distance, covering-radius, perfect, quasi-perfect, distance-optimal, msrd or almost-msrd.
    pub property: Option<String>,
    /// Recipe parameters as key=value (with --recipe).
    pub params: Vec<String>,
    /// Code descriptor written by `construct`.
    #[arg(long, conflicts_with = "recipe")]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub recipe: Option<String>,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub codewords: Option<u64>,
    #[arg(long)]
    pub ambient: Option<u64>,
    #[arg(long)]
    pub syndromes: Option<u64>,
    /// Print a plain-text summary instead of JSON.
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// conditions, singleton, sphere-packing, strong-bch, block-length, strong-blf, entropy or hamming-covering.
    pub kind: String,
    /// Parameters as key=value.
    pub params: Vec<String>,
    /// Universal constant for the block-length bounds.
    #[arg(long)]
    pub constant: Option<f64>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// m, e, n, t (comma-separated list) and optionally d (comma-separated list).
    pub params: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn init_threads(flag: Option<usize>, file: Option<usize>) -> Result<()> {
    let env = std::env::var(THREADS_ENV).ok().map(|v| v.parse::<usize>().with_context(|| format!("{THREADS_ENV}={v:?}"))).transpose()?;
    if let Some(n) = flag.or(file).or(env) {
        if n == 0 {
            bail!("thread count must be positive");
        }
        // A pool may already exist when running inside tests; the first one wins.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Construct(a) => construct(a, cli.threads, out, err),
        Command::Certify(a) => certify_cmd(a, cli.threads, out, err),
        Command::Bounds(a) => bounds(a, out),
        Command::Table(a) => table_cmd(a, out),
        Command::Selftest => selftest(out),
    }
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn summary(code: &SumRankCode) -> String {
    let profile = code.profile();
    let blocks = match profile.uniform_shape() {
        Some((n, m)) => format!("{} x ({n}x{m})", profile.t()),
        None => profile.blocks().iter().map(|(n, m)| format!("{n}x{m}")).collect::<Vec<_>>().join(", "),
    };
    let mut s = String::new();
    if let Some(o) = code.origin() {
        let p: Vec<String> = o.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("recipe      {} {}\n", o.recipe, p.join(" ")));
    }
    s.push_str(&format!("field       {}\n", profile.field()));
    s.push_str(&format!("blocks      {blocks}\n"));
    s.push_str(&format!("dimension   {} (codimension {})\n", code.dim(), code.codim()));
    if let Some(d) = code.designed_distance() {
        s.push_str(&format!("designed d  {d}\n"));
    }
    s
}

fn construct(a: ConstructArgs, threads: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if a.list {
        for r in recipes::RECIPES {
            let mut p: Vec<String> = r.params.iter().map(|s| s.to_string()).collect();
            p.extend(r.optional.iter().map(|s| format!("[{s}]")));
            writeln!(out, "{:<26} {:<22} {}", r.name, p.join(" "), r.summary)?;
        }
        return Ok(0);
    }
    let cfg = JobConfig::load_optional(a.config.as_deref())?;
    init_threads(threads, cfg.threads)?;
    let recipe = a.recipe.or(cfg.recipe.clone()).ok_or_else(|| anyhow!("no recipe given"))?;
    let params = recipe_params(&cfg.params, &a.params)?;
    let code = recipes::build(&recipe, &params)?;
    let text = descriptor::to_json(&code);
    let output = a.output.or(cfg.output);
    write_output(output.as_deref(), &text, out)?;
    let s = summary(&code);
    if output.is_some() {
        out.write_all(s.as_bytes())?;
    } else {
        err.write_all(s.as_bytes())?;
    }
    Ok(0)
}

fn load_code(path: &Path, err: &mut dyn Write) -> Result<SumRankCode> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let code = descriptor::from_json(&text).with_context(|| format!("loading {}", path.display()))?;
    if descriptor::to_json(&code) != text {
        writeln!(err, "warning: {} is not in canonical form", path.display())?;
    }
    Ok(code)
}

fn certify_cmd(a: CertifyArgs, threads: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = JobConfig::load_optional(a.config.as_deref())?;
    init_threads(threads, cfg.threads)?;
    let property: Property = a.property.or(cfg.property.clone()).ok_or_else(|| anyhow!("no property given"))?.parse()?;
    let budgets = cfg.budgets(&BudgetConfig { codewords: a.codewords, ambient: a.ambient, syndromes: a.syndromes })?;
    let code = match (a.code.or(cfg.code.clone()), a.recipe.or(cfg.recipe.clone())) {
        (Some(path), None) => {
            if !a.params.is_empty() {
                bail!("parameters apply to --recipe, not --code");
            }
            load_code(&path, err)?
        }
        (None, Some(recipe)) => recipes::build(&recipe, &recipe_params(&cfg.params, &a.params)?)?,
        (Some(_), Some(_)) => bail!("give either a code descriptor or a recipe, not both"),
        (None, None) => bail!("no code given: use --code FILE or --recipe NAME"),
    };
    let cert = certify::certify(&code, property, &budgets)?;
    let text = if a.text {
        let mut s = summary(&code);
        s.push_str(&format!("property    {}\n", cert.property));
        for q in &cert.quantities {
            s.push_str(&format!("  {:<28} {:<16} ({})\n", q.name, q.value, q.method));
        }
        for b in &cert.bounds {
            s.push_str(&format!("  {:<28} {} [{}]\n", b.name, b.value, b.assumptions));
        }
        s.push_str(&format!("verdict     {:?}\n", cert.verdict).to_lowercase());
        s
    } else {
        let mut s = cert.to_json();
        s.push('\n');
        s
    };
    write_output(a.output.or(cfg.output).as_deref(), &text, out)?;
    Ok(cert.verdict.exit_code())
}

fn get<T: std::str::FromStr>(p: &BTreeMap<String, String>, key: &str) -> Result<T> {
    let v = p.get(key).ok_or_else(|| anyhow!("missing parameter {key}"))?;
    v.parse().map_err(|_| anyhow!("bad value for {key}: {v:?}"))
}

/// Profile from `q` and either `blocks=2x2,2x3` or `t`, `n`, `m`.
fn profile_from(p: &BTreeMap<String, String>) -> Result<MatrixProfile> {
    let field = Field::from_order(get(p, "q")?)?;
    let blocks: Vec<(usize, usize)> = match p.get("blocks") {
        Some(list) => list
            .split(',')
            .map(|b| {
                let (n, m) = b.split_once('x').ok_or_else(|| anyhow!("block {b:?} is not NxM"))?;
                Ok((n.trim().parse()?, m.trim().parse()?))
            })
            .collect::<Result<_>>()?,
        None => vec![(get(p, "n")?, get(p, "m")?); get::<usize>(p, "t")?],
    };
    Ok(MatrixProfile::new(&field, blocks)?)
}

fn bounds(a: BoundsArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = JobConfig::load_optional(a.config.as_deref())?;
    let p = parse_pairs(&a.params)?;
    let c = a.constant.or(cfg.constant).unwrap_or(1.0);
    let value = match a.kind.as_str() {
        "conditions" => {
            let family: String = get(&p, "family")?;
            let numeric: BTreeMap<String, u64> =
                p.iter().filter(|(k, _)| k.as_str() != "family").map(|(k, v)| Ok((k.clone(), v.parse()?))).collect::<Result<_>>()?;
            serde_json::to_value(certify::condition_checks(&family, &numeric)?)?
        }
        "singleton" => {
            let profile = profile_from(&p)?;
            let b = certify::singleton_like_bound(&profile, get(&p, "d")?)?;
            json!({ "bound": b.to_string(), "exponent": b.exponent })
        }
        "sphere-packing" => {
            let profile = profile_from(&p)?;
            let s = certify::sphere_packing(&profile, get(&p, "k")?, get(&p, "d")?);
            json!({ "radius": s.radius, "lhs": s.lhs.to_string(), "rhs": s.rhs.to_string(), "holds": s.holds, "tight": s.tight })
        }
        "strong-bch" => {
            let b = certify::strong_singleton_bch(get(&p, "m")?, get(&p, "t")?, get(&p, "e")?, get(&p, "n")?, get(&p, "d")?)?;
            serde_json::to_value(b)?
        }
        "block-length" => serde_json::to_value(certify::block_length_bound(get(&p, "q")?, get(&p, "m")?, get(&p, "u")?, get(&p, "R")?, c)?)?,
        "strong-blf" => serde_json::to_value(certify::strong_singleton_blf(
            get(&p, "q")?,
            get(&p, "m")?,
            get(&p, "u")?,
            get(&p, "R")?,
            get(&p, "t")?,
            c,
        )?)?,
        "entropy" => json!({ "value": certify::entropy(get(&p, "Q")?, get(&p, "rho")?)? }),
        "hamming-covering" => {
            let (q, m, u): (u64, u32, usize) = (get(&p, "q")?, get(&p, "m")?, get(&p, "u")?);
            let field = recipes::extension(q, m)?;
            let code = hamming::hamming_code(&field, u)?;
            let (radius, _) = code.covering_radius(1 << 16)?;
            json!({
                "t": code.len(),
                "hamming-covering-radius": radius,
                "sum-rank-radius": m as usize * radius,
                "size-bound": certify::size_bound_from_hamming(&code.size(), m).to_string(),
                "gf-q-codimension": (m as usize).pow(2) * code.codim(),
            })
        }
        other => bail!("unknown bound {other}"),
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    Ok(0)
}

fn list(p: &BTreeMap<String, String>, key: &str) -> Result<Vec<u64>> {
    p.get(key)
        .ok_or_else(|| anyhow!("missing parameter {key}"))?
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<u64>().map_err(|_| anyhow!("bad value {s:?} in {key}")))
        .collect()
}

fn table_cmd(a: TableArgs, out: &mut dyn Write) -> Result<i32> {
    let p = parse_pairs(&a.params)?;
    let ts = list(&p, "t")?;
    let ds = if p.contains_key("d") { Some(list(&p, "d")?) } else { None };
    let rows = table::comparison_table(get(&p, "m")?, get(&p, "e")?, get(&p, "n")?, &ts, ds.as_deref());
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
    } else {
        out.write_all(table::render(&rows).as_bytes())?;
    }
    Ok(0)
}

fn selftest(out: &mut dyn Write) -> Result<i32> {
    let checks: Vec<(&str, fn() -> Result<bool>)> = vec![
        ("rank-one 2x2 and 3x3 binary counts", || {
            Ok(sumrank::spaces::count_rank_matrices(2, 2, 1, 2)? == BigUint::from(9u32)
                && sumrank::spaces::count_rank_matrices(3, 3, 1, 2)? == BigUint::from(49u32))
        }),
        ("radius-2 ball in two binary 2x2 blocks", || {
            let f = Field::prime(2)?;
            Ok(MatrixProfile::uniform(&f, 2, 2, 2)?.ball_volume(2) == BigUint::from(112u32))
        }),
        ("quasi-perfect 2x2 code, q=2 u=2", || {
            let p = [("q", 2u64), ("m", 2), ("u", 2)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
            let code = recipes::build("quasi-perfect-2xm", &p)?;
            let cert = certify::certify(&code, Property::QuasiPerfect, &sumrank::Budgets::default())?;
            Ok(cert.verdict == sumrank::Verdict::Certified)
        }),
        ("descriptor round trip", || {
            let p = [("q", 2u64), ("t", 4)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
            let text = descriptor::to_json(&recipes::build("almost-msrd-2x2", &p)?);
            Ok(descriptor::to_json(&descriptor::from_json(&text)?) == text)
        }),
        ("strong bound below Singleton-like at t=65535", || {
            let b = certify::strong_singleton_bch(2, 65535, 2, 16, 33)?;
            Ok(b.bound.exponent < b.singleton.exponent)
        }),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let status = match check() {
            Ok(true) => "PASS".to_string(),
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        if status != "PASS" {
            failed += 1;
        }
        writeln!(out, "{status} {name}")?;
    }
    Ok(if failed == 0 { 0 } else { EXIT_ERROR })
}
