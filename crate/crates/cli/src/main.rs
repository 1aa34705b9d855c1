//! Command line front end. Every subcommand prints a JSON report on stdout
//! (or into --out) and signals through the exit code: 0 for success, 1 for
//! errors (as {"error": ...}), 2 for a clean run whose verdict is negative,
//! such as a failed verification or a search that exhausted its budget.

mod io;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diametral::graph::{build_graph, GraphKind, LabeledGraph};
use diametral::norm::Norm;
use diametral::point::{AnyConfig, Point, PointConfiguration};
use diametral::polytope::convex_hull;
use diametral::search::{
    max_k_antipodal_subset, max_k_diametral_subset, SearchProblem, SearchProperty,
};
use diametral::verify::{self, TilingInstance, VerificationReport};
use diametral::{repro, FloatConfig, RatConfig, Rational, DEFAULT_REL_TOL};

use io::NormSpec;

#[derive(Parser)]
#[command(
    name = "diametral",
    version,
    about = "Construct, verify, and search k-diametral, k-antipodal, and k-equidistant point configurations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyProperty {
    /// Every k points contain a pair at the diameter.
    Diametral,
    /// Every k points contain a pair on distinct parallel supporting
    /// hyperplanes of the hull.
    Antipodal,
    /// Every k points contain a pair at distance one.
    Equidistant,
    /// Antipodality agrees with diametrality under the difference-body
    /// gauge, edge set for edge set.
    GaugeEquivalence,
    /// The configuration attains (k-1)*2^d points and is an affine cube
    /// vertex set with multiplicity k-1.
    CubeExtremal,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKindArg {
    Diameter,
    UnitDistance,
}

impl GraphKindArg {
    fn kind(self) -> GraphKind {
        match self {
            GraphKindArg::Diameter => GraphKind::Diameter,
            GraphKindArg::UnitDistance => GraphKind::UnitDistance,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchPropertyArg {
    Diametral,
    Antipodal,
}

/// Flags shared by the subcommands that read a configuration file.
#[derive(Args)]
struct NumericArgs {
    /// Norm: euclidean, linf, l1, or a path to a norm JSON file.
    #[arg(long)]
    norm: Option<String>,
    /// Numeric pipeline; defaults to the scalar kind of the input file.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Relative tolerance for float-mode distance equality.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a property of a configuration file and print the certificate.
    Verify {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "diametral")]
        property: VerifyProperty,
        #[command(flatten)]
        numeric: NumericArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a shipped construction by name, or list all of them.
    Construct {
        /// Name of the construction to emit.
        #[arg(long, conflicts_with = "list")]
        name: Option<String>,
        /// List the shipped constructions and what they certify.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the diameter or unit-distance graph of a configuration.
    Graph {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: GraphKindArg,
        #[command(flatten)]
        numeric: NumericArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive maximum k-diametral or k-antipodal subset of a family.
    /// Exits 0 only when the search completed exhaustively.
    Search {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        property: SearchPropertyArg,
        #[command(flatten)]
        numeric: NumericArgs,
        /// Node budget for the branch-and-bound tree.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Wall-clock budget in milliseconds.
        #[arg(long)]
        time_budget_ms: Option<u64>,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify that the half-size homothets at the given centers tile their
    /// hull (or --body) with multiplicity k-1. Exact coordinates only.
    Tiling {
        centers: PathBuf,
        #[arg(long)]
        k: usize,
        /// Configuration file whose convex hull is the tiled body; defaults
        /// to the hull of the centers.
        #[arg(long)]
        body: Option<PathBuf>,
        #[arg(long, default_value_t = repro::TILING_SEED)]
        seed: u64,
        #[arg(long, default_value_t = repro::TILING_SAMPLES)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a configuration (and optionally one of its graphs) as SVG.
    Plot {
        input: PathBuf,
        /// Draw the edges of this graph kind over the points.
        #[arg(long, value_enum)]
        kind: Option<GraphKindArg>,
        #[command(flatten)]
        numeric: NumericArgs,
        /// Write the SVG here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full replayable claim suite and print the pass/fail matrix.
    /// Exits 0 only when every criterion passes.
    Reproduce {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            println!("{}", serde_json::json!({ "error": msg }));
            ExitCode::FAILURE
        }
    }
}

const VERDICT_FALSE: u8 = 2;

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {}", path.display(), e))
}

fn write_output(payload: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
        None => {
            println!("{}", payload.trim_end_matches('\n'));
            Ok(())
        }
    }
}

fn load_configuration(path: &Path) -> Result<AnyConfig, String> {
    let cfg = io::parse_configuration(&read_file(path)?)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    if cfg.is_empty() {
        return Err(format!("{}: configuration has no points", path.display()));
    }
    Ok(cfg)
}

fn to_float_config(c: &RatConfig) -> FloatConfig {
    let pts = c
        .points()
        .iter()
        .map(|p| Point(p.0.iter().map(diametral::Scalar::to_f64).collect()))
        .collect();
    PointConfiguration::new(c.dim(), pts).expect("dimensions preserved by conversion")
}

fn norm_spec(arg: Option<&str>) -> Result<NormSpec, String> {
    match arg {
        None => Ok(NormSpec::Euclidean),
        Some(name) => match NormSpec::from_name(name) {
            Some(spec) => Ok(spec),
            None => io::parse_norm_spec(&read_file(Path::new(name))?)
                .map_err(|e| format!("{}: {}", name, e)),
        },
    }
}

/// A configuration committed to one numeric mode, with the norm and
/// tolerance to match.
enum Pipeline {
    Exact(RatConfig, Norm<Rational>),
    Float(FloatConfig, Norm<f64>, f64),
}

fn pipeline(cfg: AnyConfig, numeric: &NumericArgs) -> Result<Pipeline, String> {
    let spec = norm_spec(numeric.norm.as_deref())?;
    let mode = numeric.mode.unwrap_or(match &cfg {
        AnyConfig::Exact(_) => ModeArg::Exact,
        AnyConfig::Float(_) => ModeArg::Float,
    });
    match mode {
        ModeArg::Exact => {
            if numeric.tol.is_some() {
                return Err("--tol applies to float mode only; exact mode compares exactly".into());
            }
            let cfg = match cfg {
                AnyConfig::Exact(c) => c,
                AnyConfig::Float(c) => c.to_exact(),
            };
            Ok(Pipeline::Exact(cfg, io::exact_norm(&spec)?))
        }
        ModeArg::Float => {
            let tol = numeric.tol.unwrap_or(DEFAULT_REL_TOL);
            if !(0.0..1.0).contains(&tol) {
                return Err(format!("--tol must be in [0, 1), got {}", tol));
            }
            let cfg = match cfg {
                AnyConfig::Exact(c) => to_float_config(&c),
                AnyConfig::Float(c) => c,
            };
            Ok(Pipeline::Float(cfg, io::float_norm(&spec)?, tol))
        }
    }
}

fn report_exit(report: &VerificationReport, out: Option<&Path>) -> Result<ExitCode, String> {
    write_output(&report.to_json().to_string(), out)?;
    Ok(if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERDICT_FALSE)
    })
}

fn dispatch(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Verify {
            input,
            k,
            property,
            numeric,
            out,
        } => {
            let cfg = load_configuration(&input)?;
            let report = run_verify(cfg, k, property, &numeric)?;
            report_exit(&report, out.as_deref())
        }
        Cmd::Construct { name, list, out } => run_construct(name.as_deref(), list, out.as_deref()),
        Cmd::Graph {
            input,
            kind,
            numeric,
            out,
        } => {
            let cfg = load_configuration(&input)?;
            let g = build_any_graph(&cfg, kind.kind(), &numeric)?;
            write_output(&g.to_json().to_string(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Search {
            input,
            k,
            property,
            numeric,
            max_nodes,
            time_budget_ms,
            seed,
            out,
        } => run_search(
            &input,
            k,
            property,
            &numeric,
            max_nodes,
            time_budget_ms,
            seed,
            out.as_deref(),
        ),
        Cmd::Tiling {
            centers,
            k,
            body,
            seed,
            samples,
            out,
        } => run_tiling(&centers, k, body.as_deref(), seed, samples, out.as_deref()),
        Cmd::Plot {
            input,
            kind,
            numeric,
            out,
        } => {
            let cfg = load_configuration(&input)?;
            let graph = match kind {
                Some(kind) => Some(build_any_graph(&cfg, kind.kind(), &numeric)?),
                None => None,
            };
            let svg = svg::emit_svg(&cfg, graph.as_ref())?;
            write_output(&svg, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reproduce { out } => {
            let outcomes = repro::run_all();
            let all_pass = outcomes.iter().all(|o| o.pass);
            let report = serde_json::json!({
                "criteria": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
                "all_pass": all_pass,
            });
            write_output(&report.to_string(), out.as_deref())?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERDICT_FALSE)
            })
        }
    }
}

fn run_verify(
    cfg: AnyConfig,
    k: usize,
    property: VerifyProperty,
    numeric: &NumericArgs,
) -> Result<VerificationReport, String> {
    let fail = |e: diametral::Error| e.to_string();
    match property {
        VerifyProperty::Diametral => match pipeline(cfg, numeric)? {
            Pipeline::Exact(c, norm) => verify::is_k_diametral(&c, &norm, k, 0.0).map_err(fail),
            Pipeline::Float(c, norm, tol) => {
                verify::is_k_diametral(&c, &norm, k, tol).map_err(fail)
            }
        },
        VerifyProperty::Equidistant => match pipeline(cfg, numeric)? {
            Pipeline::Exact(c, norm) => verify::is_k_equidistant(&c, &norm, k, 0.0).map_err(fail),
            Pipeline::Float(c, norm, tol) => {
                verify::is_k_equidistant(&c, &norm, k, tol).map_err(fail)
            }
        },
        VerifyProperty::Antipodal
        | VerifyProperty::GaugeEquivalence
        | VerifyProperty::CubeExtremal => {
            if numeric.norm.is_some() {
                return Err("this property is norm-free; drop --norm".into());
            }
            if numeric.tol.is_some() || numeric.mode == Some(ModeArg::Float) {
                return Err("this property is decided exactly; drop --mode/--tol".into());
            }
            let c = match cfg {
                AnyConfig::Exact(c) => c,
                AnyConfig::Float(c) => c.to_exact(),
            };
            match property {
                VerifyProperty::Antipodal => verify::is_k_antipodal(&c, k).map_err(fail),
                VerifyProperty::GaugeEquivalence => {
                    verify::check_antipodal_gauge_equivalence(&c, k).map_err(fail)
                }
                _ => verify::verify_cube_extremal(&c, k).map_err(fail),
            }
        }
    }
}

fn build_any_graph(
    cfg: &AnyConfig,
    kind: GraphKind,
    numeric: &NumericArgs,
) -> Result<LabeledGraph, String> {
    match pipeline(cfg.clone(), numeric)? {
        Pipeline::Exact(c, norm) => build_graph(&c, &norm, kind, 0.0).map_err(|e| e.to_string()),
        Pipeline::Float(c, norm, tol) => {
            build_graph(&c, &norm, kind, tol).map_err(|e| e.to_string())
        }
    }
}

fn run_construct(name: Option<&str>, list: bool, out: Option<&Path>) -> Result<ExitCode, String> {
    let table = diametral::construct::shipped_constructions();
    if list {
        let rows: Vec<serde_json::Value> = table
            .iter()
            .map(|row| {
                serde_json::json!({
                    "name": row.name,
                    "property": row.expectation.property,
                    "expectation": row.expectation.to_json(),
                })
            })
            .collect();
        write_output(&serde_json::Value::Array(rows).to_string(), out)?;
        return Ok(ExitCode::SUCCESS);
    }
    let Some(name) = name else {
        return Err("pass --name <construction> or --list".into());
    };
    let Some(row) = table.iter().find(|row| row.name == name) else {
        let known: Vec<&str> = table.iter().map(|r| r.name).collect();
        return Err(format!(
            "unknown construction {:?}; shipped names: {}",
            name,
            known.join(", ")
        ));
    };
    let config_json: serde_json::Value = serde_json::from_str(&io::emit_configuration(&row.config))
        .expect("emitted configuration is valid JSON");
    let report = serde_json::json!({
        "name": row.name,
        "property": row.expectation.property,
        "expectation": row.expectation.to_json(),
        "configuration": config_json,
    });
    write_output(&report.to_string(), out)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn run_search(
    input: &Path,
    k: usize,
    property: SearchPropertyArg,
    numeric: &NumericArgs,
    max_nodes: Option<u64>,
    time_budget_ms: Option<u64>,
    seed: u64,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    let cfg = load_configuration(input)?;
    let prop = match property {
        SearchPropertyArg::Diametral => SearchProperty::Diametral,
        SearchPropertyArg::Antipodal => SearchProperty::Antipodal,
    };
    fn solve<S: diametral::Scalar>(
        mut problem: SearchProblem<S>,
        max_nodes: Option<u64>,
        time_budget_ms: Option<u64>,
        seed: u64,
    ) -> Result<(diametral::search::SearchResult, PointConfiguration<S>), String> {
        if let Some(n) = max_nodes {
            problem.limits.max_nodes = n;
        }
        problem.limits.time_budget_ms = time_budget_ms;
        problem.seed = seed;
        let res = match problem.property {
            SearchProperty::Diametral => max_k_diametral_subset(&problem),
            SearchProperty::Antipodal => max_k_antipodal_subset(&problem),
        }
        .map_err(|e| e.to_string())?;
        let witness = problem
            .family
            .subset(&res.best_subset)
            .map_err(|e| e.to_string())?;
        Ok((res, witness))
    }
    let (res, witness) = match pipeline(cfg, numeric)? {
        Pipeline::Exact(c, norm) => {
            let (res, w) = solve(
                SearchProblem::new(c, norm, k, prop),
                max_nodes,
                time_budget_ms,
                seed,
            )?;
            (res, AnyConfig::Exact(w))
        }
        Pipeline::Float(c, norm, _) => {
            let (res, w) = solve(
                SearchProblem::new(c, norm, k, prop),
                max_nodes,
                time_budget_ms,
                seed,
            )?;
            (res, AnyConfig::Float(w))
        }
    };
    let mut report = res.to_json();
    report["witness_configuration"] = serde_json::from_str(&io::emit_configuration(&witness))
        .expect("emitted configuration is valid JSON");
    write_output(&report.to_string(), out)?;
    Ok(if res.exhaustive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERDICT_FALSE)
    })
}

fn run_tiling(
    centers_path: &Path,
    k: usize,
    body_path: Option<&Path>,
    seed: u64,
    samples: usize,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    fn exact_points(path: &Path) -> Result<RatConfig, String> {
        match load_configuration(path)? {
            AnyConfig::Exact(c) => Ok(c),
            AnyConfig::Float(_) => Err(format!(
                "{}: tiling verification is exact; provide rational coordinates",
                path.display()
            )),
        }
    }
    let centers = exact_points(centers_path)?;
    let body_points = match body_path {
        Some(p) => exact_points(p)?,
        None => centers.clone(),
    };
    let body = convex_hull(body_points.points()).map_err(|e| e.to_string())?;
    let report = verify::verify_multiple_tiling(&TilingInstance {
        body,
        centers: centers.points().to_vec(),
        k,
        sample_count: samples,
        seed,
    })
    .map_err(|e| e.to_string())?;
    report_exit(&report, out)
}
