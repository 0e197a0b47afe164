//! The `ncqh` front end: argument types and the four commands. Each command
//! returns its stdout text and an [`Exit`]; configuration problems come back
//! as errors and map to exit code 2.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ncalg::{element_string, parse_element};
use crate::polyvec::PBracket;
use crate::quiver::{parse_quiver, serialize_quiver, Arrow, QuiverPresentation, Vertex};
use crate::repspace::checks::{self, RankMode, RankReport};
use crate::repspace::{random_point, DimensionVector};
use crate::sample::{self, Alphabet};
use crate::structures::{self as st, CheckReport, QBStructure, QPStructure};

#[derive(Debug, Parser)]
#[command(name = "ncqh", version, about = "Exact checks for quasi-Hamiltonian structures on quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification campaign and write a JSON report.
    Verify(VerifyArgs),
    /// Glue two vertices and print the fused (P, Φ).
    Fuse(FuseArgs),
    /// Solve for the compatible ω.
    Omega(OmegaArgs),
    /// Print the normal form of an expression.
    Show(ShowArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CheckName {
    P1,
    P2,
    P3,
    B1,
    B2,
    B3,
    C,
    Lemma72,
    Prop54,
    Prop74,
    Thm53,
    Lemma77,
    Lemma710,
    Rep,
}

impl CheckName {
    /// Checks that need ω.
    fn needs_omega(self) -> bool {
        use CheckName::*;
        matches!(self, B1 | B2 | B3 | C | Lemma72 | Prop74 | Lemma77 | Lemma710)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(short, long)]
    pub quiver: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    pub checks: Vec<CheckName>,
    /// Dimension vector for `rep`, e.g. `1:2,2:2`. Defaults to 1 everywhere.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Sampled points for `rep`.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Solve for ω before running checks that need it.
    #[arg(long)]
    pub derive_omega: bool,
}

#[derive(Debug, clap::Args)]
pub struct FuseArgs {
    #[arg(short, long)]
    pub quiver: PathBuf,
    pub v: u32,
    pub w: u32,
    /// Where to write the fused quiver file.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct OmegaArgs {
    #[arg(short, long)]
    pub quiver: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ShowArgs {
    /// Quiver to read arrow names from; the basic quiver when omitted.
    #[arg(short, long)]
    pub quiver: Option<PathBuf>,
    pub expr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success,
    CheckFailed,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::CheckFailed => 1,
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit: Exit,
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Fuse(a) => fuse(a),
        Command::Omega(a) => omega(a),
        Command::Show(a) => show(a),
    }
}

fn load_quiver(path: &Path) -> anyhow::Result<QuiverPresentation> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_quiver(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_output(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports serialize") + "\n"
}

fn progress(what: &str) {
    eprintln!("[ncqh] {what}");
}

fn phi_map(s: &QPStructure) -> BTreeMap<String, String> {
    s.phi
        .vertices()
        .map(|p| (p.to_string(), element_string(&s.phi.phi(p, &s.dq), &s.dq)))
        .collect()
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub quiver: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
    pub numeric: Option<NumericReport>,
}

#[derive(Debug, Serialize)]
pub struct NumericReport {
    pub alpha: String,
    pub samples: usize,
    pub points: Vec<PointReport>,
}

#[derive(Debug, Serialize)]
pub struct PointReport {
    pub seed: u64,
    pub retries: usize,
    pub homomorphism_failures: usize,
    pub rewriting_failures: usize,
    pub d_oracle_failures: usize,
    pub gl_action_failures: usize,
    pub quasi_jacobi_failures: usize,
    pub rank_p3: RankReport,
    pub rank_b3: Option<RankReport>,
    pub compatible: Option<bool>,
}

impl PointReport {
    fn passed(&self) -> bool {
        self.homomorphism_failures == 0
            && self.rewriting_failures == 0
            && self.d_oracle_failures == 0
            && self.gl_action_failures == 0
            && self.quasi_jacobi_failures == 0
            && self.rank_p3.full()
            && self.rank_b3.as_ref().is_none_or(RankReport::full)
            && self.compatible != Some(false)
    }
}

const PAIRS_PER_POINT: usize = 50;
const WORDS_PER_POINT: usize = 50;
const FORMS_PER_POINT: usize = 10;

fn alpha_string(a: &DimensionVector) -> String {
    a.entries().map(|(v, n)| format!("{v}:{n}")).collect::<Vec<_>>().join(",")
}

/// Exact oracles at `samples` seeded points; point `i` uses seed `seed + i`.
pub fn numeric_campaign(
    s: &QPStructure,
    w: Option<&QBStructure>,
    alpha: &DimensionVector,
    seed: u64,
    samples: usize,
) -> anyhow::Result<NumericReport> {
    let dq = &s.dq;
    let pb = PBracket::from_bivector(&s.p, dq);
    let mut points = Vec::with_capacity(samples);
    for i in 0..samples {
        let pseed = seed.wrapping_add(i as u64);
        let pt = random_point(dq, alpha, pseed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(pseed);
        rng.set_stream(1);
        let d_fail = (0..FORMS_PER_POINT)
            .filter(|_| {
                let x = sample::element(dq, Alphabet::Forms, 2, 3, 1, &mut rng);
                !checks::d_matches_dual(&x, dq, &pt, &mut rng)
            })
            .count();
        points.push(PointReport {
            seed: pseed,
            retries: pt.retries,
            homomorphism_failures: checks::homomorphism(dq, &pt, PAIRS_PER_POINT, &mut rng),
            rewriting_failures: checks::rewriting_soundness(dq, &pt, WORDS_PER_POINT, &mut rng),
            d_oracle_failures: d_fail,
            gl_action_failures: checks::gl_action(dq, &pt),
            quasi_jacobi_failures: checks::quasi_jacobi(&pb, dq, &pt),
            rank_p3: checks::rank_nondegeneracy(dq, &pt, RankMode::P3, Some(&pb), None, None, true),
            rank_b3: w.map(|w| {
                checks::rank_nondegeneracy(dq, &pt, RankMode::B3, None, Some(&w.omega), Some(&w.phi), true)
            }),
            compatible: w.map(|w| checks::compatibility_residual(s, w, &pt).is_zero()),
        });
        progress(&format!("rep: point {} of {samples} (seed {pseed})", i + 1));
    }
    Ok(NumericReport { alpha: alpha_string(alpha), samples, points })
}

fn rep_check(n: &NumericReport) -> CheckReport {
    let mut r = CheckReport::new("rep");
    for p in &n.points {
        if !p.passed() {
            r.fail(format!("point with seed {} fails an oracle", p.seed), None);
        }
    }
    r
}

/// Runs one named check. `lemma77` also runs the derivation-level identity
/// it rests on, reported as `lemma78`.
fn run_check(name: CheckName, s: &QPStructure, w: Option<&QBStructure>) -> Vec<CheckReport> {
    use CheckName::*;
    let need = || w.expect("ω built before dispatch");
    match name {
        P1 => vec![st::check_p1(s)],
        P2 => vec![st::check_p2(s)],
        P3 => vec![st::check_p3(s)],
        B1 => vec![st::check_b1(need())],
        B2 => vec![st::check_b2(need())],
        B3 => vec![st::check_b3(need())],
        C => vec![st::check_c(s, need())],
        Lemma72 => vec![st::check_lemma72(&st::build_diagram(s, need()))],
        Prop74 => vec![st::check_prop74(&st::build_diagram(s, need()))],
        Prop54 => vec![st::check_prop54(s)],
        Thm53 => vec![st::check_theorem53(s, true)],
        Lemma77 => vec![st::check_lemma77(s, need()), st::check_lemma78(s)],
        Lemma710 => vec![st::check_lemma710(s, need())],
        Rep => unreachable!("handled by the numeric campaign"),
    }
}

pub fn verify(a: &VerifyArgs) -> anyhow::Result<Outcome> {
    let mut names = a.checks.clone();
    names.sort();
    names.dedup();
    if names.is_empty() {
        bail!("no checks requested");
    }
    if names.contains(&CheckName::Rep) && a.samples == 0 {
        bail!("--samples must be at least 1 for rep");
    }
    if names.iter().any(|c| c.needs_omega()) && !a.derive_omega {
        bail!("omega required: run omega first or pass --derive-omega");
    }
    let q = load_quiver(&a.quiver)?;
    let s = st::quiver_qp(&q.double());
    let alpha = match &a.alpha {
        Some(t) => DimensionVector::parse(t, &s.dq)?,
        None => DimensionVector::uniform(&s.dq, 1)?,
    };

    let mut reports = Vec::new();
    let w = if a.derive_omega {
        let start = Instant::now();
        let w = st::omega_from_p(&s);
        progress(&format!("omega: {} ms", start.elapsed().as_millis()));
        match w {
            Ok(w) => Some(w),
            Err(e) => {
                let mut r = CheckReport::new("omega");
                r.fail(e.to_string(), None);
                reports.push(r);
                None
            }
        }
    } else {
        None
    };

    let mut numeric = None;
    for &name in &names {
        if name.needs_omega() && w.is_none() {
            let mut r = CheckReport::new(&name.to_string());
            r.fail("ω could not be built", None);
            reports.push(r);
            continue;
        }
        if name == CheckName::Rep {
            let start = Instant::now();
            let n = numeric_campaign(&s, w.as_ref(), &alpha, a.seed, a.samples)?;
            reports.push(rep_check(&n));
            numeric = Some(n);
            progress(&format!("rep: {} ms", start.elapsed().as_millis()));
            continue;
        }
        for r in run_check(name, &s, w.as_ref()) {
            progress(&format!("{}: {} in {} ms", r.name, if r.passed { "pass" } else { "FAIL" }, r.millis));
            reports.push(r);
        }
    }
    reports.sort_by(|x, y| x.name.cmp(&y.name));

    let report = VerifyReport {
        quiver: a.quiver.display().to_string(),
        seed: a.seed,
        passed: reports.iter().all(|r| r.passed),
        checks: reports,
        numeric,
    };
    let text = to_json(&report);
    let exit = if report.passed { Exit::Success } else { Exit::CheckFailed };
    match &a.output {
        Some(p) => {
            write_output(p, &text)?;
            Ok(Outcome { stdout: String::new(), exit })
        }
        None => Ok(Outcome { stdout: text, exit }),
    }
}

/// Same keys, in the same order, as a quiver file.
#[derive(Debug, Serialize)]
struct QuiverOut<'a> {
    vertices: &'a [Vertex],
    arrows: &'a [Arrow],
}

#[derive(Debug, Serialize)]
struct FuseTranscript<'a> {
    glued: [u32; 2],
    vertex: u32,
    quiver: QuiverOut<'a>,
    p: String,
    phi: BTreeMap<String, String>,
}

pub fn fuse(a: &FuseArgs) -> anyhow::Result<Outcome> {
    let q = load_quiver(&a.quiver)?;
    let s = st::quiver_qp(&q.double());
    let f = st::fuse_structure(&s, a.v, a.w).map_err(|e| anyhow!("cannot fuse {} and {}: {e}", a.v, a.w))?;
    let qtext = serialize_quiver(f.dq.base());
    if let Some(p) = &a.output {
        write_output(p, &qtext)?;
    }
    let t = FuseTranscript {
        glued: [a.v, a.w],
        vertex: a.v.min(a.w),
        quiver: QuiverOut { vertices: f.dq.base().vertices(), arrows: f.dq.base().arrows() },
        p: element_string(&f.p, &f.dq),
        phi: phi_map(&f),
    };
    Ok(Outcome { stdout: to_json(&t), exit: Exit::Success })
}

#[derive(Debug, Serialize)]
struct OmegaTranscript {
    omega: String,
    phi: BTreeMap<String, String>,
}

/// ω for a given `(P, Φ)`, or the non-degeneracy diagnostic.
pub fn omega_transcript(s: &QPStructure) -> Result<String, st::StructureError> {
    let w = st::omega_from_p(s)?;
    Ok(to_json(&OmegaTranscript { omega: element_string(&w.omega, &s.dq), phi: phi_map(s) }))
}

pub fn omega(a: &OmegaArgs) -> anyhow::Result<Outcome> {
    let q = load_quiver(&a.quiver)?;
    let s = st::quiver_qp(&q.double());
    match omega_transcript(&s) {
        Ok(text) => {
            if let Some(p) = &a.output {
                write_output(p, &text)?;
                return Ok(Outcome { stdout: String::new(), exit: Exit::Success });
            }
            Ok(Outcome { stdout: text, exit: Exit::Success })
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(Outcome { stdout: String::new(), exit: Exit::CheckFailed })
        }
    }
}

pub fn show(a: &ShowArgs) -> anyhow::Result<Outcome> {
    let q = match &a.quiver {
        Some(p) => load_quiver(p)?,
        None => QuiverPresentation::basic(),
    };
    let dq = q.double();
    let x = parse_element(&a.expr, &dq).with_context(|| format!("parsing `{}`", a.expr))?;
    Ok(Outcome { stdout: element_string(&x, &dq) + "\n", exit: Exit::Success })
}
