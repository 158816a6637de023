//! `planewidth` command-line tool.

mod svg;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use planewidth::bounds::{CircularHint, BoundsConfig};
use planewidth::graph::io::{detect_format, read_graph, write_graph, GraphFormat};
use planewidth::graph::{chromatic_number, generate, GraphSpec};
use planewidth::partition::{extract_coloring, tiling_coloring, Scheme};
use planewidth::realization::io::{format_f64, read_angles, read_realization, write_coloring, write_realization};
use planewidth::realization::{
    from_circular, from_coloring, known_complete_arrangement, lattice_complete_arrangement, low_dim_realization,
    LowDimMode,
};
use planewidth::{evaluate, optimize, pw_interval, Coloring, Error, Graph, NormSpec, OptimizeConfig, Realization};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "planewidth", version, about = "Plane-width bounds and realizations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph from a named family.
    Gen(GenArgs),
    /// Report a certified plane-width interval.
    Bounds(BoundsArgs),
    /// Build a realization by one of the constructions.
    Realize(RealizeArgs),
    /// Check a realization against a graph; exit 0 iff it is valid.
    Verify(VerifyArgs),
    /// Extract a proper coloring from a narrow realization.
    Color(ColorArgs),
    /// Search numerically for a narrow realization.
    Optimize(OptimizeArgs),
    /// Draw a realization as SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    Path,
    OddWheel,
    Circulant,
    CircleStar,
    Petersen,
    Grotzsch,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Family parameters, comma or space separated.
    #[arg(long, num_args = 0.., value_delimiter = ',', allow_negative_numbers = true)]
    params: Vec<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Graph file (edge list or DIMACS), `-` for stdin.
    graph: PathBuf,
    #[arg(long, default_value_t = 10.0)]
    chi_budget: f64,
    /// Optimizer restarts; 0 disables the optimizer.
    #[arg(long, default_value_t = 50)]
    opt_restarts: usize,
    /// Circular coloring angles, used together with --chi-c.
    #[arg(long, requires = "chi_c")]
    angles: Option<PathBuf>,
    /// Circular chromatic number as a decimal or `p/q`.
    #[arg(long, requires = "angles")]
    chi_c: Option<String>,
    /// Extra candidate realization for the upper bound.
    #[arg(long)]
    witness: Vec<PathBuf>,
    /// Also write the upper-bound witness here.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print JSON instead of key-value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Coloring,
    Table,
    Lattice,
    Circular,
    Optimize,
    Line,
    LinfGrid,
}

#[derive(Args, Debug)]
struct RealizeArgs {
    graph: PathBuf,
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long)]
    angles: Option<PathBuf>,
    #[arg(long)]
    chi_c: Option<String>,
    #[arg(long, default_value_t = 10.0)]
    chi_budget: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    realization: PathBuf,
    #[arg(long, default_value_t = planewidth::DEFAULT_TOL)]
    tol: f64,
    /// Evaluate under this ℓ_p norm (`inf` for the maximum norm) instead of the file's.
    #[arg(long)]
    norm: Option<String>,
    /// Print JSON instead of key-value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ColorArgs {
    graph: PathBuf,
    #[arg(long = "from")]
    realization: PathBuf,
    /// 3, 4, 7 or tiling.
    #[arg(long)]
    scheme: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OptimizeArgs {
    graph: PathBuf,
    /// Defaults to $PW_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 50)]
    restarts: usize,
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
    #[arg(long, default_value = "2")]
    norm: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print JSON instead of key-value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PlotArgs {
    realization: PathBuf,
    graph: Option<PathBuf>,
    #[arg(short, long)]
    output: PathBuf,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parameter(_) | Error::Parse(_) | Error::Io(_) => 1,
            Error::Certificate(_) | Error::Infeasible(_) | Error::Precondition(_) => 2,
            Error::Consistency(_) => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Bounds(a) => bounds(a),
        Command::Realize(a) => realize(a),
        Command::Verify(a) => verify(a),
        Command::Color(a) => color(a),
        Command::Optimize(a) => run_optimize(a),
        Command::Plot(a) => plot(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        _ => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    Ok(read_graph(&text, detect_format(&text))?)
}

fn load_realization(path: &Path) -> Result<Realization, Failure> {
    Ok(read_realization(&read_input(path)?)?)
}

fn parse_norm(s: &str, dim: u8) -> Result<NormSpec, Failure> {
    let p = match s {
        "inf" | "infinity" | "max" => f64::INFINITY,
        _ => s.parse::<f64>().map_err(|_| usage(format!("norm must be a number >= 1 or `inf`, got {s:?}")))?,
    };
    Ok(NormSpec::new(p, dim)?)
}

/// Decimal or `p/q`.
fn parse_ratio(s: &str) -> Result<f64, Failure> {
    let bad = || usage(format!("expected a number or p/q, got {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            Ok(p / q)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

fn budget(seconds: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(seconds).map_err(|_| usage(format!("invalid time budget {seconds}")))
}

fn default_seed() -> Result<u64, Failure> {
    match std::env::var("PW_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("PW_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

fn gen(a: GenArgs) -> CmdResult {
    let params: Vec<&str> = a.params.iter().flat_map(|p| p.split_whitespace()).collect();
    let want = |k: usize| -> Result<(), Failure> {
        if params.len() == k {
            Ok(())
        } else {
            Err(usage(format!("family {:?} takes {k} parameter(s), got {}", a.family, params.len())))
        }
    };
    let int = |i: usize| -> Result<usize, Failure> {
        params[i].parse().map_err(|_| usage(format!("parameter {:?} is not a nonnegative integer", params[i])))
    };
    let spec = match a.family {
        Family::Complete => {
            want(1)?;
            GraphSpec::Complete(int(0)?)
        }
        Family::Cycle => {
            want(1)?;
            GraphSpec::Cycle(int(0)?)
        }
        Family::Path => {
            want(1)?;
            GraphSpec::Path(int(0)?)
        }
        Family::OddWheel => {
            want(1)?;
            GraphSpec::OddWheel(int(0)?)
        }
        Family::Circulant => {
            want(2)?;
            GraphSpec::Circulant { p: int(0)?, q: int(1)? }
        }
        Family::CircleStar => {
            want(2)?;
            let eps = params[1].parse().map_err(|_| usage(format!("eps {:?} is not a number", params[1])))?;
            GraphSpec::CircleStar { n: int(0)?, eps }
        }
        Family::Petersen => {
            want(0)?;
            GraphSpec::Petersen
        }
        Family::Grotzsch => {
            want(0)?;
            GraphSpec::Grotzsch
        }
    };
    let g = generate(&spec)?;
    write_output(a.output.as_deref(), &write_graph(&g, a.format.into()))?;
    Ok(0)
}

fn circular_hint(angles: &Option<PathBuf>, chi_c: &Option<String>) -> Result<Option<CircularHint>, Failure> {
    match (angles, chi_c) {
        (Some(path), Some(q)) => {
            Ok(Some(CircularHint { angles: read_angles(&read_input(path)?)?, chi_c: parse_ratio(q)? }))
        }
        (None, None) => Ok(None),
        _ => Err(usage("--angles and --chi-c go together")),
    }
}

fn bounds(a: BoundsArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let optimizer = (a.opt_restarts > 0)
        .then(|| -> Result<_, Failure> {
            Ok(OptimizeConfig { restarts: a.opt_restarts, seed: default_seed()?, ..OptimizeConfig::default() })
        })
        .transpose()?;
    let witnesses = a.witness.iter().map(|p| load_realization(p)).collect::<Result<Vec<_>, _>>()?;
    let cfg = BoundsConfig {
        chi_budget: budget(a.chi_budget)?,
        optimizer,
        circular: circular_hint(&a.angles, &a.chi_c)?,
        witnesses,
    };
    let report = pw_interval(&g, &cfg)?;
    if let Some(path) = &a.output {
        write_output(Some(path), &write_realization(&report.upper_witness))?;
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("report serializes"));
        return Ok(0);
    }
    let tags = |v: &[planewidth::Mechanism]| v.iter().map(|m| m.tag()).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    out += &format!("lower {}\n", format_f64(report.lower));
    out += &format!("lower_strict {}\n", report.lower_strict);
    out += &format!("lower_provenance {}\n", tags(&report.lower_provenance));
    out += &format!("upper {}\n", format_f64(report.upper));
    out += &format!("upper_provenance {}\n", tags(&report.upper_provenance));
    out += &format!("clique_number {}\n", report.clique_number);
    out += &format!("chromatic_lower {}\n", report.chromatic.lower);
    out += &format!("chromatic_upper {}\n", report.chromatic.upper);
    out += &format!("chromatic_exact {}\n", report.chromatic.exact);
    for note in &report.notes {
        out += &format!("note {note}\n");
    }
    write_output(None, &out)?;
    Ok(0)
}

fn exact_coloring(g: &Graph, seconds: f64) -> Result<Coloring, Failure> {
    let chi = chromatic_number(g, budget(seconds)?);
    if !chi.exact {
        eprintln!("warning: chromatic number not settled within budget, using a {}-coloring", chi.upper);
    }
    Ok(Coloring::new(chi.coloring))
}

fn realize(a: RealizeArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    if a.method != Method::Circular && (a.angles.is_some() || a.chi_c.is_some()) {
        return Err(usage("--angles and --chi-c only apply to --method circular"));
    }
    let r = match a.method {
        Method::Coloring => from_coloring(&g, &exact_coloring(&g, a.chi_budget)?)?,
        Method::Table => known_complete_arrangement(g.n())?,
        Method::Lattice => lattice_complete_arrangement(g.n())?,
        Method::Circular => {
            let hint = circular_hint(&a.angles, &a.chi_c)?
                .ok_or_else(|| usage("--method circular needs --angles and --chi-c"))?;
            from_circular(&g, &hint.angles, hint.chi_c)?
        }
        Method::Optimize => {
            let cfg = OptimizeConfig { seed: default_seed()?, ..OptimizeConfig::default() };
            optimize(&g, &cfg)?.realization
        }
        Method::Line => low_dim_realization(&g, &exact_coloring(&g, a.chi_budget)?, LowDimMode::Line)?,
        Method::LinfGrid => low_dim_realization(&g, &exact_coloring(&g, a.chi_budget)?, LowDimMode::LinfGrid)?,
    };
    write_output(a.output.as_deref(), &write_realization(&r))?;
    Ok(0)
}

fn verify(a: VerifyArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let mut r = load_realization(&a.realization)?;
    if let Some(norm) = &a.norm {
        r.norm = parse_norm(norm, r.norm.dim)?;
    }
    if !(a.tol >= 0.0) {
        return Err(usage(format!("tolerance must be nonnegative, got {}", a.tol)));
    }
    let e = evaluate(&g, &r, a.tol)?;
    let min_edge = e.min_edge_distance.is_finite().then_some(e.min_edge_distance);
    if a.json {
        let v = json!({
            "valid": e.valid,
            "width": e.width,
            "min_edge_distance": min_edge,
            "violating_edge": e.violating_edge.map(|(u, v)| [u, v]),
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("evaluation serializes"));
    } else {
        let mut out = format!("valid {}\nwidth {}\n", e.valid, format_f64(e.width));
        out += &format!("min_edge_distance {}\n", min_edge.map_or("none".into(), format_f64));
        out += &format!("violating_edge {}\n", e.violating_edge.map_or("none".into(), |(u, v)| format!("{u} {v}")));
        write_output(None, &out)?;
    }
    Ok(if e.valid { 0 } else { 2 })
}

fn color(a: ColorArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let r = load_realization(&a.realization)?;
    let c = match a.scheme.as_str() {
        "tiling" => tiling_coloring(&g, &r)?,
        s => extract_coloring(&g, &r, s.parse::<Scheme>()?)?,
    };
    c.check_proper(&g)?;
    write_output(a.output.as_deref(), &write_coloring(&c))?;
    eprintln!("colors {}", c.k);
    Ok(0)
}

fn run_optimize(a: OptimizeArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let cfg = OptimizeConfig {
        seed: match a.seed {
            Some(s) => s,
            None => default_seed()?,
        },
        restarts: a.restarts,
        max_iters: a.max_iters,
        norm: parse_norm(&a.norm, 2)?,
        ..OptimizeConfig::default()
    };
    let result = optimize(&g, &cfg)?;
    let text = write_realization(&result.realization);
    let summary = if a.json {
        serde_json::to_string(&json!({
            "width": result.width,
            "restart": result.restart_index,
            "iterations": result.iterations,
        }))
        .expect("summary serializes")
            + "\n"
    } else {
        format!(
            "width {}\nrestart {}\niterations {}\n",
            format_f64(result.width),
            result.restart_index,
            result.iterations
        )
    };
    match &a.output {
        Some(path) if path.as_os_str() != "-" => {
            write_output(Some(path), &text)?;
            write_output(None, &summary)?;
        }
        // realization goes to stdout, summary to stderr
        _ => {
            write_output(None, &text)?;
            eprint!("{summary}");
        }
    }
    Ok(0)
}

fn plot(a: PlotArgs) -> CmdResult {
    let r = load_realization(&a.realization)?;
    let g = a.graph.as_deref().map(load_graph).transpose()?;
    if let Some(g) = &g {
        if g.n() != r.n() {
            return Err(usage(format!("graph has {} vertices, realization has {} points", g.n(), r.n())));
        }
    }
    write_output(Some(&a.output), &svg::render(&r, g.as_ref()))?;
    Ok(0)
}
