//! The `graphpoly` command line.
//!
//! Everything goes through [`run_command`], which returns the exit code and
//! both output streams instead of touching the process, so the whole
//! command surface can be tested in-process.
//!
//! Exit codes: 0 success / all checks passed, 1 a verification failed,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphpoly::harness::{describe, fuzz_cases, run_case, run_identity, FuzzConfig, Outcome};
use graphpoly::{
    chromatic_polynomial, corpus, flow_polynomial, format::render_plane_graph, parse_graph_file, w_function,
    Error, GraphFile, Identity, IntPoly, Limits, Verdict,
};
use serde_json::{json, Value as Json};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "graphpoly", version, about = "Chromatic and flow polynomials of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Polynomial output: `pretty` (k^2 - k) or `coeffs` (ascending list).
    #[arg(long, global = true, value_enum, default_value_t = PolyFormat::Pretty)]
    format: PolyFormat,

    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Pretty,
    Coeffs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the chromatic polynomial C(G, k).
    Chromatic(FileArg),
    /// Print the flow polynomial F(G, k).
    Flow(FileArg),
    /// Print the plane dual in the graph file format (needs an embedding).
    Dual(FileArg),
    /// Print w(G, k) = k^k_shift * f with f = F(G, k) and k_shift = n - m.
    W(FileArg),
    /// Check identities on one graph.
    Verify(VerifyArgs),
    /// Check identities on seeded random graphs.
    Fuzz(FuzzArgs),
}

#[derive(Args, Debug)]
struct FileArg {
    /// Graph file, or `corpus:<name>` for a bundled graph.
    file: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identities to check (repeatable or comma separated); `all` checks
    /// every identity that applies to the input.
    #[arg(long, value_delimiter = ',', required = true)]
    identity: Vec<String>,

    /// Integer k for the identities checked at a single value.
    #[arg(long, default_value_t = 2)]
    k: u32,

    /// Append wall-clock durations (makes output non-reproducible).
    #[arg(long)]
    timings: bool,

    file: PathBuf,
}

#[derive(Args, Debug)]
struct FuzzArgs {
    #[arg(long, default_value_t = 8)]
    max_edges: usize,

    #[arg(long, default_value_t = 100)]
    trials: usize,

    #[arg(long, default_value_t = 1)]
    seed: u64,

    #[arg(long, value_delimiter = ',', default_value = "eq1")]
    identity: Vec<String>,

    #[arg(long, default_value_t = 2)]
    k: u32,

    /// Append wall-clock durations (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

/// Parses `argv` (including the program name) and runs the command, with
/// limits taken from the environment.
pub fn run_command<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Limits::from_env() {
        Ok(limits) => run_with_limits(argv, limits),
        Err(e) => input_error(&e.to_string()),
    }
}

pub fn run_with_limits<I, T>(argv: I, limits: Limits) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                // --help and --version
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let ctx = Ctx { coeffs: cli.format == PolyFormat::Coeffs, json: cli.json, limits };
    match ctx.dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => input_error(&e.to_string()),
    }
}

fn input_error(message: &str) -> Output {
    Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
}

struct Ctx {
    coeffs: bool,
    json: bool,
    limits: Limits,
}

fn load(path: &PathBuf) -> Result<GraphFile, Error> {
    let s = path.to_string_lossy();
    if let Some(name) = s.strip_prefix("corpus:") {
        return corpus::graph_file(name);
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_graph_file(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn parse_identities(raw: &[String]) -> Result<Vec<Identity>, Error> {
    let mut out = Vec::new();
    for name in raw {
        if name == "all" {
            out.extend(Identity::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.dedup();
    Ok(out)
}

fn ok(stdout: String) -> Output {
    Output { code: EXIT_OK, stdout, stderr: String::new() }
}

impl Ctx {
    fn dispatch(&self, command: Command) -> Result<Output, Error> {
        match command {
            Command::Chromatic(a) => Ok(self.poly("chromatic", &chromatic_polynomial(&load(&a.file)?.graph))),
            Command::Flow(a) => Ok(self.poly("flow", &flow_polynomial(&load(&a.file)?.graph))),
            Command::Dual(a) => {
                let file = load(&a.file)?;
                let pg = file.plane.ok_or_else(|| Error::Input("dual needs a graph with an embedding".into()))?;
                let dual = render_plane_graph(&pg.dual());
                Ok(ok(if self.json { format!("{}\n", json!({ "dual": dual })) } else { dual }))
            }
            Command::W(a) => {
                let w = w_function(&load(&a.file)?.graph);
                let f = self.render_poly(&w.f);
                Ok(ok(if self.json {
                    format!("{}\n", json!({ "f": f, "k_shift": w.k_shift }))
                } else {
                    format!("f = {f}\nk_shift = {}\n", w.k_shift)
                }))
            }
            Command::Verify(a) => self.verify(a),
            Command::Fuzz(a) => self.fuzz(a),
        }
    }

    fn render_poly(&self, p: &IntPoly) -> String {
        if self.coeffs {
            p.to_coeff_string()
        } else {
            p.to_string()
        }
    }

    fn poly(&self, key: &str, p: &IntPoly) -> Output {
        let text = self.render_poly(p);
        ok(if self.json { format!("{}\n", json!({ key: text })) } else { format!("{text}\n") })
    }

    fn verify(&self, a: VerifyArgs) -> Result<Output, Error> {
        let file = load(&a.file)?;
        let explicit = !a.identity.iter().any(|s| s == "all");
        let identities = parse_identities(&a.identity)?;
        let descriptor = describe(&file.graph, file.plane.as_ref());
        let mut report = Report::new(self, a.timings);
        for identity in identities {
            if identity.needs_embedding() && file.plane.is_none() {
                if explicit {
                    return Err(Error::Input(format!("identity {identity} needs a graph with an embedding")));
                }
                report.push(None, identity, &descriptor, Outcome::Skipped("no embedding".into()), None);
                continue;
            }
            let start = Instant::now();
            let outcome = match run_identity(identity, &file.graph, file.plane.as_ref(), a.k, &self.limits) {
                Ok(v) => Outcome::Checked(v),
                // Asking for an identity on a graph outside its hypotheses
                // is a usage error; under `all` it is only skipped.
                Err(e @ (Error::Precondition(_) | Error::Resource { .. })) if !explicit => Outcome::Skipped(e.to_string()),
                Err(e) => return Err(e),
            };
            report.push(None, identity, &descriptor, outcome, Some(start.elapsed()));
        }
        Ok(report.finish())
    }

    fn fuzz(&self, a: FuzzArgs) -> Result<Output, Error> {
        let cfg = FuzzConfig {
            max_edges: a.max_edges,
            trials: a.trials,
            seed: a.seed,
            identities: parse_identities(&a.identity)?,
            k: a.k,
            limits: self.limits,
        };
        let mut report = Report::new(self, a.timings);
        for case in fuzz_cases(&cfg)? {
            let start = Instant::now();
            let outcome = run_case(&case, &cfg);
            report.push(Some(case.trial), case.identity, &case.descriptor(), outcome, Some(start.elapsed()));
        }
        Ok(report.finish())
    }
}

/// Accumulates verification reports in order and renders them as text
/// lines or JSON records.
struct Report<'a> {
    ctx: &'a Ctx,
    timings: bool,
    out: String,
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl<'a> Report<'a> {
    fn new(ctx: &'a Ctx, timings: bool) -> Self {
        Report { ctx, timings, out: String::new(), passed: 0, failed: 0, skipped: 0 }
    }

    fn push(&mut self, trial: Option<usize>, identity: Identity, graph: &str, outcome: Outcome, took: Option<Duration>) {
        let took = took.filter(|_| self.timings);
        match &outcome {
            Outcome::Checked(v) if v.passed => self.passed += 1,
            Outcome::Checked(_) => self.failed += 1,
            Outcome::Skipped(_) => self.skipped += 1,
        }
        if self.ctx.json {
            let record = self.record(trial, identity, graph, &outcome, took);
            let _ = writeln!(self.out, "{record}");
            return;
        }
        let prefix = trial.map(|t| format!("[{t}] ")).unwrap_or_default();
        let time = took.map(|d| format!(" ({:.3} ms)", d.as_secs_f64() * 1e3)).unwrap_or_default();
        match outcome {
            Outcome::Checked(v) => {
                let status = if v.passed { "PASS" } else { "FAIL" };
                let note = v.note.as_ref().map(|n| format!(" [{n}]")).unwrap_or_default();
                let _ = writeln!(self.out, "{prefix}{status} {identity} {graph}{note}{time}");
                if !v.passed {
                    self.sides(&v);
                }
            }
            Outcome::Skipped(reason) => {
                let _ = writeln!(self.out, "{prefix}SKIP {identity} {graph}: {reason}");
            }
        }
    }

    fn sides(&mut self, v: &Verdict) {
        let _ = writeln!(self.out, "  lhs = {}", v.lhs.render(self.ctx.coeffs));
        let _ = writeln!(self.out, "  rhs = {}", v.rhs.render(self.ctx.coeffs));
    }

    fn record(&self, trial: Option<usize>, identity: Identity, graph: &str, outcome: &Outcome, took: Option<Duration>) -> Json {
        let mut r = json!({ "identity": identity.name(), "graph": graph });
        if let Some(t) = trial {
            r["trial"] = json!(t);
        }
        match outcome {
            Outcome::Checked(v) => {
                r["verdict"] = json!(if v.passed { "pass" } else { "fail" });
                r["lhs"] = json!(v.lhs.render(self.ctx.coeffs));
                r["rhs"] = json!(v.rhs.render(self.ctx.coeffs));
                if let Some(n) = &v.note {
                    r["note"] = json!(n);
                }
            }
            Outcome::Skipped(reason) => {
                r["verdict"] = json!("skip");
                r["reason"] = json!(reason);
            }
        }
        if let Some(d) = took {
            r["duration_ms"] = json!(d.as_secs_f64() * 1e3);
        }
        r
    }

    fn finish(mut self) -> Output {
        if !self.ctx.json {
            let _ = writeln!(self.out, "{} passed, {} failed, {} skipped", self.passed, self.failed, self.skipped);
        }
        Output {
            code: if self.failed > 0 { EXIT_FAILED } else { EXIT_OK },
            stdout: self.out,
            stderr: String::new(),
        }
    }
}
