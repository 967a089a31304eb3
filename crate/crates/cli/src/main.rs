//! `curvelab`: windows of curve graphs, quotients by closure samples, and
//! the verification suites, from the command line.

mod cache;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use curvelab::arc2::{self, ArcSearch};
use curvelab::farey::{self, ClosureSpec, FareyWindow, IntMatrix, Slope};
use curvelab::graph::PentagonIndex;
use curvelab::quotient::{self, *};
use curvelab::sphere5::base::base_coords;
use curvelab::sphere5::curve::{validate_coords, NormalCurve, Witness};
use curvelab::sphere5::generators::Generators;
use curvelab::sphere5::halftwist::{detect_half_twists, half_twist_of};
use curvelab::sphere5::intersection::intersection_number;
use curvelab::sphere5::triangulation::base_triangulation;
use curvelab::sphere5::window::{build_window, curve_at, key_label, CurveWindow};
use curvelab::sphere5::word::Word;
use curvelab::window::{to_dot, Window};

const DEFAULT_SEED: u64 = 20;

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
    #[error("{0} failed")]
    Failed(String),
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(name = "curvelab", version, about = "Curve graphs of low-complexity surfaces and their large-displacement quotients")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The Farey graph.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// The curve graph of the five-punctured sphere.
    #[command(subcommand)]
    S5(S5Cmd),
    /// Arc-complex triangles and their pentagon fillings.
    #[command(subcommand)]
    Arc2(Arc2Cmd),
    /// Quotient windows.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Build a quotient and run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InstanceName {
    Farey,
    S5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Suite {
    Simplicial,
    Lift,
    Ball2,
    Covering,
    UniqueLift,
    Pentagons,
    Halftwist,
    Support,
}

#[derive(Args, Clone)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct FareyClosure {
    /// Base hyperbolic matrix `a,b,c,d`.
    #[arg(long, default_value = "2,1,1,1")]
    matrix: String,
    #[arg(long, default_value_t = 8)]
    power: u32,
    #[arg(long = "conj-len", default_value_t = 2)]
    conj_len: usize,
    /// Maximum number of conjugates multiplied together.
    #[arg(long, default_value_t = 1)]
    depth: usize,
}

#[derive(Subcommand)]
enum FareyCmd {
    /// Distance between two slopes.
    Dist {
        from: String,
        to: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Height window.
    Window {
        #[arg(long, default_value_t = 13)]
        height: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Closure sample of `A^K`.
    Closure {
        #[command(flatten)]
        closure: FareyClosure,
        #[command(flatten)]
        output: Output,
    },
    /// Window displacement of every sampled element.
    Displacement {
        #[arg(long, default_value_t = 55)]
        height: i64,
        #[command(flatten)]
        closure: FareyClosure,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct S5Source {
    /// Word bound of a window built (or loaded from the cache) on the fly.
    #[arg(long, alias = "word-bound", default_value_t = 3)]
    bound: usize,
    /// S5 window JSON (as written by `s5 ball`) instead of `--bound`.
    #[arg(long)]
    window: Option<PathBuf>,
}

#[derive(Subcommand)]
enum S5Cmd {
    /// Window of curves `w(c_j)` with `|w| <= bound`.
    Ball {
        #[arg(long, alias = "word-bound", default_value_t = 3)]
        bound: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Pentagons of a window, validated by intersection numbers.
    Pentagons {
        #[command(flatten)]
        source: S5Source,
        #[command(flatten)]
        output: Output,
    },
    /// Two-pentagon detection of the half-twists about `beta` applied to
    /// `alpha`, for a pair of window ids or for `(g(c1), g(c3))`.
    Halftwist {
        #[command(flatten)]
        source: S5Source,
        #[arg(long, requires = "beta")]
        alpha: Option<usize>,
        #[arg(long, requires = "alpha")]
        beta: Option<usize>,
        /// The word `g`; random words of length at most 3 when neither this
        /// nor a pair is given.
        #[arg(long, conflicts_with = "alpha")]
        word: Option<String>,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct Arc2Input {
    /// Three curve ids of the window.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    curves: Vec<usize>,
    /// S5 window JSON (as written by `s5 ball`); also the search space for
    /// connectors and auxiliary curves.
    #[arg(long)]
    window: PathBuf,
}

#[derive(Subcommand)]
enum Arc2Cmd {
    /// Configuration class of an arc triangle.
    Classify {
        #[command(flatten)]
        arcs: Arc2Input,
        #[command(flatten)]
        output: Output,
    },
    /// Pentagon filling of the loop of an arc triangle.
    Fill {
        #[command(flatten)]
        arcs: Arc2Input,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct QuotientArgs {
    #[arg(long, value_enum, default_value_t = InstanceName::Farey)]
    instance: InstanceName,
    /// Farey window height.
    #[arg(long, default_value_t = 55)]
    height: i64,
    /// S5 window word bound.
    #[arg(long, default_value_t = 3)]
    bound: usize,
    /// Load the window from JSON instead of building it.
    #[arg(long)]
    window: Option<PathBuf>,
    #[command(flatten)]
    closure: FareyClosure,
    /// S5 element `f` whose power generates the sample; empty sample when
    /// omitted.
    #[arg(long)]
    word: Option<String>,
}

#[derive(Subcommand)]
enum QuotientCmd {
    Build {
        #[command(flatten)]
        args: QuotientArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct VerifyArgs {
    #[command(flatten)]
    quotient: QuotientArgs,
    /// Comma-separated suites; a default set per instance when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    suites: Vec<Suite>,
    /// Output directory for `reports.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(what)) => {
            eprintln!("curvelab: {what} failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("curvelab: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Farey(c) => farey_cmd(c),
        Cmd::S5(c) => s5_cmd(c),
        Cmd::Arc2(c) => arc2_cmd(c),
        Cmd::Quotient(QuotientCmd::Build { args, output }) => quotient_build(&args, &output),
        Cmd::Verify(args) => verify(&args),
    }
}

fn write_out(out: &Option<PathBuf>, mut text: String) -> Result<()> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// JSON, or the given text; DOT only where a graph is the output.
fn emit(output: &Output, v: &Value, text: impl FnOnce() -> String, dot: Option<&dyn Fn() -> String>) -> Result<()> {
    let s = match output.format {
        Format::Json => pretty(v),
        Format::Text => text(),
        Format::Dot => match dot {
            Some(f) => f(),
            None => return Err(input("--format dot is not available for this command")),
        },
    };
    write_out(&output.out, s)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn farey_window(height: i64) -> Result<FareyWindow> {
    if height < 1 {
        return Err(input("height must be positive"));
    }
    let key = cache::key(farey::INSTANCE, height as u64);
    if let Some(w) = cache::load(&key).and_then(|s| Window::from_json_str(&s, farey::INSTANCE).ok()) {
        if w.bound == height as u64 {
            return Ok(w);
        }
    }
    let w = farey::build_window(height);
    cache::store(&key, &serde_json::to_string(&w.to_json_value()).expect("window serializes"));
    Ok(w)
}

fn s5_window(bound: usize) -> Result<CurveWindow> {
    if bound > 6 {
        return Err(input("word bound above 6 is beyond desk scale"));
    }
    let key = cache::key(curvelab::sphere5::window::INSTANCE, bound as u64);
    if let Some(w) = cache::load(&key).and_then(|s| load_s5_json(&s).ok()) {
        if w.bound == bound as u64 {
            return Ok(w);
        }
    }
    let w = build_window(bound);
    cache::store(&key, &serde_json::to_string(&w.to_json_value()).expect("window serializes"));
    Ok(w)
}

/// Parses an S5 window and checks every curve and witness.
fn load_s5_json(s: &str) -> Result<CurveWindow> {
    let w: CurveWindow = Window::from_json_str(s, curvelab::sphere5::window::INSTANCE).map_err(input)?;
    let t = base_triangulation();
    let g = Generators::get();
    for (i, x) in w.vertices.iter().enumerate() {
        validate_coords(&t, x).map_err(|e| input(format!("curve {i}: {e}")))?;
        let Some(word) = &w.words[i] else { return Err(input(format!("curve {i}: missing witness"))) };
        let wit: Witness = word.parse().map_err(|e| input(format!("curve {i}: {e}")))?;
        if g.apply_word(&wit.word, &base_coords(wit.base)) != *x {
            return Err(input(format!("curve {i}: witness {word} does not reach the curve")));
        }
    }
    Ok(w)
}

fn closure_spec(c: &FareyClosure) -> Result<ClosureSpec> {
    let base: IntMatrix = c.matrix.parse().map_err(input)?;
    Ok(ClosureSpec { base, power: c.power, conjugator_length: c.conj_len, product_depth: c.depth })
}

fn slope_labels(w: &FareyWindow) -> Vec<String> {
    w.vertices.iter().map(|s| s.to_string()).collect()
}

fn curve_labels(w: &CurveWindow) -> Vec<String> {
    w.vertices.iter().map(key_label).collect()
}

fn farey_cmd(c: FareyCmd) -> Result<()> {
    match c {
        FareyCmd::Dist { from, to, format } => {
            let output = Output { format, out: None };
            let (s, t): (Slope, Slope) = (from.parse().map_err(input)?, to.parse().map_err(input)?);
            let d = farey::farey_distance(s, t);
            let v = json!({ "from": s, "to": t, "distance": d });
            emit(&output, &v, || d.to_string(), None)
        }
        FareyCmd::Window { height, output } => {
            let w = farey_window(height)?;
            let v = w.to_json_value();
            let text = || format!("farey window of height {height}: {} vertices, {} edges", w.len(), w.graph.edge_count());
            emit(&output, &v, text, Some(&|| to_dot("farey", &slope_labels(&w), &w.graph)))
        }
        FareyCmd::Closure { closure, output } => {
            let spec = closure_spec(&closure)?;
            let elems = farey::sample_closure(&spec).map_err(input)?;
            let v = json!({ "spec": spec, "elements": elems });
            let text = || elems.iter().map(|e| format!("{}\t{}", e.word, e.matrix)).collect::<Vec<_>>().join("\n");
            emit(&output, &v, text, None)
        }
        FareyCmd::Displacement { height, closure, output } => {
            let w = farey_window(height)?;
            let spec = closure_spec(&closure)?;
            let elems = farey::sample_closure(&spec).map_err(input)?;
            let rows: Vec<farey::Displacement> = elems
                .iter()
                .map(|e| {
                    let (min, at) = farey::window_displacement(&e.matrix, &w);
                    farey::Displacement { word: e.word.clone(), min, argmin: at.to_string() }
                })
                .collect();
            let min = rows.iter().map(|r| r.min).min();
            let v = json!({ "height": height, "spec": spec, "min": min, "elements": rows });
            let text = || {
                let mut lines: Vec<String> = rows.iter().map(|r| format!("{}\t{}\t{}", r.word, r.min, r.argmin)).collect();
                lines.push(format!("minimum\t{}", min.map_or("-".into(), |m| m.to_string())));
                lines.join("\n")
            };
            emit(&output, &v, text, None)
        }
    }
}

fn pentagon_valid(w: &CurveWindow, p: &[usize; 5]) -> bool {
    let c: Vec<NormalCurve> = p.iter().map(|&v| curve_at(w, v)).collect();
    (0..5).all(|i| {
        (i + 1..5).all(|j| {
            let want = if j == i + 1 || (i == 0 && j == 4) { 0 } else { 2 };
            intersection_number(&c[i], &c[j]).ok() == Some(want)
        })
    })
}

fn s5_source(src: &S5Source) -> Result<CurveWindow> {
    match &src.window {
        Some(p) => load_s5_json(&read(p)?),
        None => s5_window(src.bound),
    }
}

/// Detection against the true half-twists for one pair of curves.
fn halftwist_row(w: &CurveWindow, idx: &PentagonIndex, label: Value, alpha: &NormalCurve, beta: &NormalCurve) -> Result<(Value, bool)> {
    let (Some(a), Some(b)) = (w.index_of(&alpha.coords), w.index_of(&beta.coords)) else {
        return Ok((json!({ "pair": label, "status": "outside-window" }), true));
    };
    let i = intersection_number(alpha, beta).map_err(input)?;
    if i != 2 {
        return Err(input(format!("half-twists need i(alpha, beta) = 2, found {i}")));
    }
    let expected: BTreeSet<String> = [1, -1]
        .iter()
        .map(|&s| half_twist_of(beta, alpha, s).map(|c| key_label(&c.coords)))
        .collect::<std::result::Result<_, _>>()
        .map_err(input)?;
    let detected: BTreeSet<String> = detect_half_twists(w, idx, a, b).iter().map(|d| key_label(&w.vertices[d.gamma])).collect();
    let agree = detected == expected;
    let row = json!({
        "pair": label,
        "alpha": a,
        "beta": b,
        "detected": detected,
        "expected": expected,
        "status": if agree { "pass" } else { "fail" },
    });
    Ok((row, agree))
}

fn s5_cmd(c: S5Cmd) -> Result<()> {
    match c {
        S5Cmd::Ball { bound, output } => {
            let w = s5_window(bound)?;
            let v = w.to_json_value();
            let text = || format!("s5 window of word bound {bound}: {} curves, {} edges", w.len(), w.graph.edge_count());
            emit(&output, &v, text, Some(&|| to_dot("s5", &curve_labels(&w), &w.graph)))
        }
        S5Cmd::Pentagons { source, output } => {
            let w = s5_source(&source)?;
            let ps = w.graph.pentagons();
            let invalid: Vec<&[usize; 5]> = ps.iter().filter(|p| !pentagon_valid(&w, p)).collect();
            let v = json!({ "bound": w.bound, "count": ps.len(), "invalid": invalid, "pentagons": ps });
            let text = || format!("{} pentagons in a window of {} curves, {} failing the 0/2 pattern", ps.len(), w.len(), invalid.len());
            emit(&output, &v, text, None)?;
            if invalid.is_empty() {
                Ok(())
            } else {
                Err(CliError::Failed("pentagon validation".into()))
            }
        }
        S5Cmd::Halftwist { source, alpha, beta, word, samples, seed, output } => {
            let w = s5_source(&source)?;
            let idx = PentagonIndex::new(w.graph.pentagons());
            let mut rows = Vec::new();
            let mut bad = 0;
            if let (Some(a), Some(b)) = (alpha, beta) {
                if let Some(&v) = [a, b].iter().find(|&&v| v >= w.len()) {
                    return Err(input(format!("curve id {v} is not in the window ({} curves)", w.len())));
                }
                let (row, ok) = halftwist_row(&w, &idx, json!([a, b]), &curve_at(&w, a), &curve_at(&w, b))?;
                rows.push(row);
                bad += usize::from(!ok);
            } else {
                let words: Vec<Word> = match word {
                    Some(s) => vec![s.parse().map_err(input)?],
                    None => {
                        let mut rng = ChaCha8Rng::seed_from_u64(seed);
                        (0..samples)
                            .map(|_| {
                                let len = rng.gen_range(0..=3);
                                Word::random(&mut rng, len)
                            })
                            .collect()
                    }
                };
                let g = Generators::get();
                for word in &words {
                    let curve = |j: usize| NormalCurve::with_witness(g.apply_word(word, &base_coords(j)), Witness { word: word.clone(), base: j });
                    let (row, ok) = halftwist_row(&w, &idx, json!(word.to_string()), &curve(0), &curve(2))?;
                    rows.push(row);
                    bad += usize::from(!ok);
                }
            }
            let v = json!({ "bound": w.bound, "seed": seed, "pairs": rows });
            let text = || rows.iter().map(|r| format!("{}\t{}", r["pair"], r["status"].as_str().unwrap_or(""))).collect::<Vec<_>>().join("\n");
            emit(&output, &v, text, None)?;
            if bad == 0 {
                Ok(())
            } else {
                Err(CliError::Failed("half-twist detection".into()))
            }
        }
    }
}

fn arc2_setup(a: &Arc2Input) -> Result<(CurveWindow, [usize; 3])> {
    let w = load_s5_json(&read(&a.window)?)?;
    let ids: [usize; 3] = a.curves.clone().try_into().map_err(|_| input("--curves takes exactly three ids"))?;
    if let Some(&bad) = ids.iter().find(|&&v| v >= w.len()) {
        return Err(input(format!("curve id {bad} is not in the window ({} curves)", w.len())));
    }
    Ok((w, ids))
}

fn kind_name(k: arc2::Kind) -> String {
    serde_json::to_value(k).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

fn arc2_cmd(c: Arc2Cmd) -> Result<()> {
    match c {
        Arc2Cmd::Classify { arcs, output } => {
            let (w, ids) = arc2_setup(&arcs)?;
            let s = ArcSearch::new(&w).map_err(input)?;
            let t = arc2::classify(&s, ids).map_err(input)?;
            let v = json!({
                "arcs": t.arcs,
                "endpoints": t.arcs.map(|v| s.vertex(v).endpoint_labels()),
                "pattern": t.pattern,
                "kind": t.kind,
                "epsilons": t.epsilons,
            });
            let text = || format!("{} {:?}", kind_name(t.kind), t.arcs);
            emit(&output, &v, text, None)
        }
        Arc2Cmd::Fill { arcs, output } => {
            let (w, ids) = arc2_setup(&arcs)?;
            let s = ArcSearch::new(&w).map_err(input)?;
            let t = arc2::classify(&s, ids).map_err(input)?;
            let f = arc2::fill_triangle(&s, &t).map_err(input)?;
            let cert = arc2::certify(&s, &f);
            let mut v = arc2::filling_json(&s, &t, &f);
            v["certified"] = json!(cert.is_ok());
            if let Err(e) = &cert {
                v["certificate-error"] = json!(e);
            }
            let text = || {
                let mut lines = vec![format!("{}: {} pentagons", kind_name(t.kind), f.pentagons.len())];
                lines.extend(f.pentagons.iter().map(|p| format!("{p:?}")));
                lines.join("\n")
            };
            emit(&output, &v, text, None)?;
            cert.map_err(|e| CliError::Failed(format!("filling certificate ({e})")))
        }
    }
}

enum Built {
    Farey(FareyWindow, QuotientWindow<IntMatrix>),
    S5(CurveWindow, S5Instance, QuotientWindow<Word>),
}

fn build(args: &QuotientArgs) -> Result<Built> {
    match args.instance {
        InstanceName::Farey => {
            let w = match &args.window {
                Some(p) => Window::from_json_str(&read(p)?, farey::INSTANCE).map_err(input)?,
                None => farey_window(args.height)?,
            };
            let sample = farey_sample(&closure_spec(&args.closure)?).map_err(input)?;
            let q = build_quotient(&FareyInstance, &w, &sample).map_err(input)?;
            Ok(Built::Farey(w, q))
        }
        InstanceName::S5 => {
            let w = match &args.window {
                Some(p) => load_s5_json(&read(p)?)?,
                None => s5_window(args.bound)?,
            };
            let sample = match &args.word {
                Some(s) => {
                    let f: Word = s.parse().map_err(input)?;
                    quotient::s5_sample(&f, args.closure.power, args.closure.conj_len)
                }
                None => ClosureSample::empty(curvelab::sphere5::window::INSTANCE),
            };
            let inst = S5Instance::for_window(&w);
            let q = build_quotient(&inst, &w, &sample).map_err(input)?;
            Ok(Built::S5(w, inst, q))
        }
    }
}

fn quotient_dot(labels: &[String], classes: &[Vec<usize>], g: &curvelab::graph::Graph) -> String {
    let l: Vec<String> = classes.iter().map(|c| labels[c[0]].clone()).collect();
    to_dot("quotient", &l, g)
}

fn quotient_build(args: &QuotientArgs, output: &Output) -> Result<()> {
    match build(args)? {
        Built::Farey(w, q) => {
            let v = quotient_json(&w, &q);
            let text = || quotient_text(w.len(), q.classes.len(), q.graph.edge_count(), q.min_displacement());
            emit(output, &v, text, Some(&|| quotient_dot(&slope_labels(&w), &q.classes, &q.graph)))
        }
        Built::S5(w, _, q) => {
            let v = quotient_json(&w, &q);
            let text = || quotient_text(w.len(), q.classes.len(), q.graph.edge_count(), q.min_displacement());
            emit(output, &v, text, Some(&|| quotient_dot(&curve_labels(&w), &q.classes, &q.graph)))
        }
    }
}

fn quotient_text(n: usize, classes: usize, edges: usize, disp: Option<(u64, bool)>) -> String {
    let d = match disp {
        None => "none (empty sample)".to_string(),
        Some((d, true)) => d.to_string(),
        Some((d, false)) => format!(">= {d}"),
    };
    format!("{n} window vertices, {classes} classes, {edges} quotient edges, minimum displacement {d}")
}

fn default_suites(i: InstanceName) -> Vec<Suite> {
    match i {
        InstanceName::Farey => vec![Suite::Simplicial, Suite::Lift, Suite::Ball2, Suite::Covering, Suite::UniqueLift],
        InstanceName::S5 => vec![
            Suite::Simplicial,
            Suite::Lift,
            Suite::Ball2,
            Suite::Covering,
            Suite::UniqueLift,
            Suite::Pentagons,
            Suite::Halftwist,
            Suite::Support,
        ],
    }
}

fn generic_suite<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>, s: Suite, lift: &[LiftTarget]) -> Option<Report> {
    Some(match s {
        Suite::Simplicial => check_simplicial(inst, w, q),
        Suite::Lift => verify_lipschitz_and_lifting(inst, w, q),
        Suite::Ball2 => verify_ball2_isometry(inst, w, q),
        Suite::Covering => verify_local_covering(inst, w, q),
        Suite::UniqueLift => verify_unique_lift_orbit(inst, w, q, lift),
        Suite::Pentagons => transfer_pentagons(inst, w, q),
        Suite::Support => check_support_sets(inst, w, q),
        Suite::Halftwist => return None,
    })
}

fn verify(args: &VerifyArgs) -> Result<()> {
    let mut suites = if args.suites.is_empty() { default_suites(args.quotient.instance) } else { args.suites.clone() };
    suites.sort();
    suites.dedup();
    if args.format == Format::Dot {
        return Err(input("verify writes json or text"));
    }
    if args.quotient.instance == InstanceName::Farey {
        if let Some(s) = suites.iter().find(|s| matches!(s, Suite::Halftwist | Suite::Support)) {
            return Err(input(format!("suite {s:?} needs the s5 instance")));
        }
    }
    let reports: Vec<Report> = match build(&args.quotient)? {
        Built::Farey(w, q) => {
            let lift = [LiftTarget::Vertices, LiftTarget::Edges, LiftTarget::Triangles];
            suites.iter().filter_map(|&s| generic_suite(&FareyInstance, &w, &q, s, &lift)).collect()
        }
        Built::S5(w, inst, q) => {
            let lift = [LiftTarget::Vertices, LiftTarget::Edges, LiftTarget::Pentagons];
            suites
                .iter()
                .map(|&s| generic_suite(&inst, &w, &q, s, &lift).unwrap_or_else(|| detect_half_twists_quotient(&inst, &w, &q)))
                .collect()
        }
    };
    let v = serde_json::to_value(&reports).expect("reports serialize");
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
        write_out(&Some(dir.join("reports.json")), pretty(&v))?;
    }
    let out = match args.format {
        Format::Json => pretty(&v),
        _ => reports.iter().map(report_line).collect::<Vec<_>>().join("\n"),
    };
    write_out(&None, out)?;
    let failed: Vec<&str> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.suite.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("suites {}", failed.join(", "))))
    }
}

fn report_line(r: &Report) -> String {
    let status = serde_json::to_value(r.status).expect("status serializes");
    let mut s = format!(
        "{}: {} (eligible {}, truncated {}, witnesses {})",
        r.suite,
        status.as_str().unwrap_or(""),
        r.eligible,
        r.truncated,
        r.witnesses.len()
    );
    if let (Some(d), Some(t)) = (r.min_displacement, r.threshold) {
        s.push_str(&format!(" displacement {d} vs threshold {t}"));
    }
    s
}
