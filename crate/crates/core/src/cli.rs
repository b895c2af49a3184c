//! Command-line front end. [`run`] does all the work and returns the exit
//! code and output, so the binary stays a one-liner and tests can call it.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cache::DiskCache;
use crate::checks::{self, CheckConfig, SuiteReport};
use crate::emit::{lambda_from_json, Emit, Format};
use crate::error::{Error, Result};
use crate::parse::parse_lambda;
use crate::perm::Permutation;
use crate::poly::{LambdaPoly, Partition, StrictPartition};
use crate::schubert_a as a;
use crate::table::{self, RowOutcome};
use crate::type_c::{self as c, TripleC};

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Enriched Schubert polynomials of types A and C")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format: json, latex or text.
    #[arg(long, global = true, default_value = "json")]
    pub format: String,

    /// Read bare one-line permutations `v1,...,vn` as the window starting at `p`.
    #[arg(long, global = true, value_name = "p:n")]
    pub window: Option<String>,

    /// Use the twisted polynomial (x_i replaced by x_i - z).
    #[arg(long, global = true)]
    pub twisted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Schubert,
    Twisted,
    Stanley,
    Multischur,
    SchubertC,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one object: a permutation for schubert/twisted/stanley, a
    /// partition for multischur, a type C triple for schubert-c.
    Compute { kind: Kind, target: String },
    /// The enriched Schubert polynomial of a permutation.
    Schubert { w: String },
    /// The twisted Schubert polynomial of a permutation.
    Twisted { w: String },
    /// The Stanley polynomial of a permutation.
    Stanley { w: String },
    /// Structure constants of a product of two Schubert polynomials.
    Product { u: String, v: String },
    /// One step of the transition recursion.
    Transition { w: String },
    /// The localization of the Schubert polynomial of `w` at `v`.
    Localize { v: String, w: String },
    /// Expand a polynomial in the Schubert basis.
    Interpolate { poly: String },
    /// Normal form of an expression in c, z, x, y in the Q basis.
    GammaNf { expr: String },
    /// The pfaffian Q of a strict partition, in c-monomials.
    Qlambda { lambda: String },
    /// The type C Schubert polynomial of a triple `k=..;p=..;q=..`.
    SchubertC { triple: String },
    /// Project a permutation's twisted polynomial, or an expression, to type C.
    ProjectAc { target: String },
    /// Run the type A to type C comparison checks.
    VerifyAtoc,
    /// Recompute the 24 reference rows on the window [0,3].
    VerifyTable {
        /// Alternative JSON fixture of expected rows.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Run an invariant suite, or `all`.
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        degree: u32,
        /// Random instances per law.
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((ok, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: if ok { 0 } else { EXIT_FAILED }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = match e {
                Error::Parse { .. } => EXIT_PARSE,
                _ => EXIT_DOMAIN,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

struct Ctx {
    format: Format,
    window: Option<(i32, usize)>,
    twisted: bool,
    cache: Option<DiskCache>,
}

fn parse_window(s: &str) -> Result<(i32, usize)> {
    let (p, n) = s
        .split_once(':')
        .ok_or_else(|| Error::parse(0, format!("window {s:?} should be p:n")))?;
    let p = p.trim().parse().map_err(|_| Error::parse(0, format!("bad window start {p:?}")))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| Error::parse(s.find(':').unwrap_or(0) + 1, format!("bad window size {n:?}")))?;
    Ok((p, n))
}

impl Ctx {
    fn perm(&self, s: &str) -> Result<Permutation> {
        let t = s.trim();
        if t.starts_with("w@") || t == "id" {
            return t.parse();
        }
        let Some((p, n)) = self.window else {
            return t.parse();
        };
        let mut vals = Vec::new();
        let mut pos = 0;
        for piece in t.split(',') {
            let v = piece
                .trim()
                .parse::<i32>()
                .map_err(|_| Error::parse(pos, format!("expected an integer, found {:?}", piece.trim())))?;
            vals.push(v);
            pos += piece.len() + 1;
        }
        if vals.len() != n {
            return Err(Error::parse(0, format!("window has {n} positions, got {} values", vals.len())));
        }
        Permutation::from_window(p, vals)
    }

    fn lambda_cached(&self, key: String, f: impl FnOnce() -> Result<LambdaPoly>) -> Result<LambdaPoly> {
        match &self.cache {
            Some(cache) => cache.get_or_insert(&key, lambda_from_json, Emit::to_json, f),
            None => f(),
        }
    }

    fn schubert(&self, w: &Permutation, twisted: bool) -> Result<LambdaPoly> {
        if twisted {
            self.lambda_cached(format!("twisted:{w}"), || Ok(a::twisted(w)))
        } else {
            self.lambda_cached(format!("schubert:{w}"), || Ok(a::schubert(w)))
        }
    }

    fn emit(&self, x: &impl Emit) -> String {
        x.render(self.format)
    }
}

fn execute(cli: &Cli) -> Result<(bool, String)> {
    let ctx = Ctx {
        format: cli.format.parse()?,
        window: cli.window.as_deref().map(parse_window).transpose()?,
        twisted: cli.twisted,
        cache: DiskCache::from_env(),
    };
    let out = match &cli.command {
        Command::Compute { kind, target } => compute(&ctx, *kind, target)?,
        Command::Schubert { w } => compute(&ctx, Kind::Schubert, w)?,
        Command::Twisted { w } => compute(&ctx, Kind::Twisted, w)?,
        Command::Stanley { w } => compute(&ctx, Kind::Stanley, w)?,
        Command::Product { u, v } => {
            let (u, v) = (ctx.perm(u)?, ctx.perm(v)?);
            let f = &ctx.schubert(&u, false)? * &ctx.schubert(&v, false)?;
            ctx.emit(&a::interpolate(&f))
        }
        Command::Transition { w } => {
            let w = ctx.perm(w)?;
            let step = a::transition(&w)
                .ok_or_else(|| Error::domain(format!("{w} has no transition step")))?;
            ctx.emit(&step.expansion())
        }
        Command::Localize { v, w } => {
            let (v, w) = (ctx.perm(v)?, ctx.perm(w)?);
            let f = ctx.schubert(&w, ctx.twisted)?;
            ctx.emit(&crate::schubert_a::identities::localize(&v, &f)?)
        }
        Command::Interpolate { poly } => ctx.emit(&a::interpolate(&parse_lambda(poly)?)),
        Command::GammaNf { expr } => ctx.emit(&c::parse_gamma(expr)?),
        Command::Qlambda { lambda } => ctx.emit(&c::q_pfaffian(&lambda.parse::<StrictPartition>()?)),
        Command::SchubertC { triple } => compute(&ctx, Kind::SchubertC, triple)?,
        Command::ProjectAc { target } => {
            let t = target.trim();
            let image = if t.starts_with("w@") || t == "id" || ctx.window.is_some() {
                c::projected_schubert(&ctx.perm(t)?)?
            } else {
                c::project_a_to_c(&parse_lambda(t)?)?
            };
            ctx.emit(&image)
        }
        Command::VerifyAtoc => return report_suites(&ctx, &checks::run("atoc", &CheckConfig::default())?),
        Command::VerifyTable { fixture } => {
            let rows = match fixture {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
                    table::rows_from_json(&text)?
                }
                None => table::reference_rows()?,
            };
            return Ok(report_table(&ctx, &table::verify_rows(rows)));
        }
        Command::Check { suite, seed, degree, instances } => {
            let cfg = CheckConfig { seed: *seed, degree: *degree, instances: *instances };
            return report_suites(&ctx, &checks::run(suite, &cfg)?);
        }
    };
    Ok((true, out))
}

fn compute(ctx: &Ctx, kind: Kind, target: &str) -> Result<String> {
    Ok(match kind {
        Kind::Schubert => ctx.emit(&ctx.schubert(&ctx.perm(target)?, ctx.twisted)?),
        Kind::Twisted => ctx.emit(&ctx.schubert(&ctx.perm(target)?, true)?),
        Kind::Stanley => {
            let w = ctx.perm(target)?;
            ctx.emit(&ctx.lambda_cached(format!("stanley:{w}"), || Ok(a::stanley(&w)))?)
        }
        Kind::Multischur => {
            let lam: Partition = target.parse()?;
            ctx.emit(&ctx.lambda_cached(format!("multischur:{lam}"), || Ok(a::multivariate_schur(&lam)))?)
        }
        Kind::SchubertC => {
            let t = target.trim();
            if t.starts_with("w@") || t == "id" {
                return Err(Error::domain(format!(
                    "{t} is not a type C triple; only vexillary signed permutations, given by triples k=..;p=..;q=.., are supported"
                )));
            }
            let tau: TripleC = t.parse()?;
            ctx.emit(&c::schubert_c_vexillary(&tau)?)
        }
    })
}

fn report_table(ctx: &Ctx, outcomes: &[RowOutcome]) -> (bool, String) {
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let ok = passed == outcomes.len();
    let text = match ctx.format {
        Format::Json => json!({
            "rows": outcomes
                .iter()
                .map(|o| json!({ "w": o.row.label, "pass": o.passed() }))
                .collect::<Vec<_>>(),
            "passed": passed,
            "total": outcomes.len(),
        })
        .to_string(),
        _ => {
            let mut s = String::new();
            for o in outcomes {
                let _ = writeln!(s, "{:<12} {}", o.row.label, if o.passed() { "pass" } else { "FAIL" });
            }
            let _ = write!(s, "{passed}/{} rows pass", outcomes.len());
            s
        }
    };
    (ok, text)
}

const SHOWN_FAILURES: usize = 5;

fn report_suites(ctx: &Ctx, reports: &[SuiteReport]) -> Result<(bool, String)> {
    let ok = reports.iter().all(SuiteReport::passed);
    let text = match ctx.format {
        Format::Json => json!({
            "suites": reports
                .iter()
                .map(|r| json!({
                    "name": r.name,
                    "instances": r.instances,
                    "failures": r.failures.len(),
                    "examples": &r.failures[..r.failures.len().min(SHOWN_FAILURES)],
                }))
                .collect::<Vec<_>>(),
            "pass": ok,
        })
        .to_string(),
        _ => {
            let mut s = String::new();
            for r in reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{:<14} {verdict}  {} instances, {} failures",
                    r.name,
                    r.instances,
                    r.failures.len()
                );
                for f in r.failures.iter().take(SHOWN_FAILURES) {
                    let _ = writeln!(s, "    {f}");
                }
            }
            let total: usize = reports.iter().map(|r| r.instances).sum();
            let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
            let _ = write!(s, "{} suites, {total} instances, {failed} failures", reports.len());
            s
        }
    };
    Ok((ok, text))
}

