mod output;
mod reproduce;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use foamlab_core::foam::{builtin_foam, EvalMode, FoamPresentation};
use foamlab_core::gf2::BaseChange;
use foamlab_core::statespace::{build_generator_family, state_space};
use foamlab_core::web::{builtin_web, Web};

use output::{emit, CliError, OutputArgs};

#[derive(Parser)]
#[command(
    name = "foamlab",
    version,
    about = "Exact engine for unoriented SL(3) conical foams: Tait colorings, Kempe classes, foam evaluation over GF(2), state spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, Tait colorings and Kempe classification of a web
    WebInfo(WebArgs),
    /// Full Kempe partition: classes, sizes, degree multisets
    Kempe(WebArgs),
    /// Evaluate a closed foam presentation
    FoamEval(FoamEvalArgs),
    /// All 27 theta-foam evaluations for dot counts up to two
    ThetaTable(OutputArgs),
    /// Universal-construction state space of a web under a base change
    StateSpace(StateSpaceArgs),
    /// Reproduce the dodecahedron results end to end with pass/fail lines
    ReproduceDodecahedron(OutputArgs),
    /// Run every recorded reference check and report pass/fail per item
    Selftest(OutputArgs),
}

#[derive(Args)]
struct WebArgs {
    /// Builtin web name (circle, theta, k4, cube, dodecahedron, square)
    #[arg(long, conflicts_with = "input")]
    builtin: Option<String>,
    /// Path to a web JSON document
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FoamEvalArgs {
    /// Builtin foam name (see `foamlab foam-eval --builtin help`)
    #[arg(long, conflicts_with = "input")]
    builtin: Option<String>,
    /// Path to a foam JSON document
    #[arg(long)]
    input: Option<PathBuf>,
    /// Return the reduced rational function without the polynomial,
    /// symmetry and homogeneity assertions
    #[arg(long)]
    raw_eval: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct StateSpaceArgs {
    #[arg(long, conflicts_with = "input")]
    builtin: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Vertex anchoring the dotted cup family (default: first vertex)
    #[arg(long)]
    vertex: Option<String>,
    /// Base change: id, E (kills E1, E2), or 0 (kills all Ei)
    #[arg(long, default_value = "id")]
    phi: String,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("FOAMLAB_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let result = match cli.command {
        Command::WebInfo(args) => web_info(args),
        Command::Kempe(args) => kempe(args),
        Command::FoamEval(args) => foam_eval(args),
        Command::ThetaTable(out) => theta_table(out),
        Command::StateSpace(args) => state_space_cmd(args),
        Command::ReproduceDodecahedron(out) => reproduce::run(out),
        Command::Selftest(out) => selftest::run(out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_web(builtin: &Option<String>, input: &Option<PathBuf>) -> Result<Web, CliError> {
    match (builtin, input) {
        (Some(name), _) => builtin_web(name).map_err(CliError::precondition),
        (None, Some(path)) => {
            let text = output::read_file(path)?;
            Web::from_json(&text).map_err(CliError::schema)
        }
        (None, None) => Err(CliError::Precondition(
            "one of --builtin or --input is required".into(),
        )),
    }
}

fn load_foam(
    builtin: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<FoamPresentation, CliError> {
    match (builtin, input) {
        (Some(name), _) => builtin_foam(name).map_err(CliError::precondition),
        (None, Some(path)) => {
            let text = output::read_file(path)?;
            FoamPresentation::from_json(&text).map_err(CliError::schema)
        }
        (None, None) => Err(CliError::Precondition(
            "one of --builtin or --input is required".into(),
        )),
    }
}

fn parse_phi(s: &str) -> Result<BaseChange, CliError> {
    match s {
        "id" => Ok(BaseChange::Identity),
        "E" => Ok(BaseChange::PhiE),
        "0" => Ok(BaseChange::Phi0),
        other => Err(CliError::Precondition(format!(
            "unknown base change '{other}'; expected id, E or 0"
        ))),
    }
}

fn web_info(args: WebArgs) -> Result<(), CliError> {
    let web = load_web(&args.builtin, &args.input)?;
    let partition = web.kempe_partition();
    let sizes: Vec<usize> = partition.classes.iter().map(|c| c.len()).collect();
    let human = format!(
        "web: {}\nvertices: {}\nedges: {} ({} free circles)\ntait colorings: {}\nkempe classes: {} (sizes {:?})\nweakly homogeneous: {}\nsemi-homogeneous: {}\nhomogeneous: {}{}\nkempe-small: {}",
        web.name().unwrap_or("(unnamed)"),
        web.vertex_count(),
        web.edge_count(),
        web.free_circle_count(),
        partition.coloring_count(),
        partition.class_count(),
        sizes,
        partition.weakly_homogeneous,
        partition.semi_homogeneous,
        partition.homogeneous,
        partition
            .kempe_degree
            .map(|d| format!(" (degree {d})"))
            .unwrap_or_default(),
        partition.kempe_small,
    );
    let value = json!({
        "web": web.name(),
        "vertices": web.vertex_count(),
        "edges": web.edge_count(),
        "freeCircles": web.free_circle_count(),
        "taitColorings": partition.coloring_count(),
        "kempeClasses": partition.class_count(),
        "classSizes": sizes,
        "weaklyHomogeneous": partition.weakly_homogeneous,
        "semiHomogeneous": partition.semi_homogeneous,
        "homogeneous": partition.homogeneous,
        "kempeDegree": partition.kempe_degree,
        "kempeSmall": partition.kempe_small,
    });
    emit(&args.out, human, value)
}

fn kempe(args: WebArgs) -> Result<(), CliError> {
    let web = load_web(&args.builtin, &args.input)?;
    let partition = web.kempe_partition();
    let mut human = format!(
        "web: {}\nclasses: {}\n",
        web.name().unwrap_or("(unnamed)"),
        partition.class_count()
    );
    let mut classes_json = Vec::new();
    for (i, (class, degrees)) in partition
        .classes
        .iter()
        .zip(&partition.degrees_per_class)
        .enumerate()
    {
        let rep = &class[0];
        let rep_str: Vec<String> = rep
            .assignment()
            .iter()
            .map(|(e, c)| format!("{e}={c}"))
            .collect();
        human.push_str(&format!(
            "  class {i}: size {}, degrees {:?}, representative {}\n",
            class.len(),
            degrees,
            rep_str.join(" ")
        ));
        classes_json.push(json!({
            "size": class.len(),
            "degrees": degrees,
            "representative": rep,
        }));
    }
    human.push_str(&format!(
        "weakly homogeneous: {}\nsemi-homogeneous: {}\nhomogeneous: {}{}\nkempe-small: {}",
        partition.weakly_homogeneous,
        partition.semi_homogeneous,
        partition.homogeneous,
        partition
            .kempe_degree
            .map(|d| format!(" (degree {d})"))
            .unwrap_or_default(),
        partition.kempe_small
    ));
    let value = json!({
        "web": web.name(),
        "classes": classes_json,
        "weaklyHomogeneous": partition.weakly_homogeneous,
        "semiHomogeneous": partition.semi_homogeneous,
        "homogeneous": partition.homogeneous,
        "kempeDegree": partition.kempe_degree,
        "kempeSmall": partition.kempe_small,
    });
    emit(&args.out, human, value)
}

fn foam_eval(args: FoamEvalArgs) -> Result<(), CliError> {
    let foam = load_foam(&args.builtin, &args.input)?;
    let mode = if args.raw_eval {
        EvalMode::Raw
    } else {
        EvalMode::Homogeneous
    };
    let report = foam.evaluate(mode).map_err(CliError::from_foam)?;
    let value_str = match &report.value {
        Some(v) => v.to_string(),
        None => report.raw.to_string(),
    };
    let human = format!(
        "foam: {}\nadmissible colorings: {}\nhomogeneous: {}{}\nvalue: {}",
        foam.name.as_deref().unwrap_or("(unnamed)"),
        report.per_coloring.len(),
        report.homogeneous,
        report
            .degree
            .map(|d| format!("\ndegree: {d}"))
            .unwrap_or_default(),
        value_str
    );
    let value = json!({
        "foam": foam.name,
        "colorings": report.per_coloring.len(),
        "homogeneous": report.homogeneous,
        "degree": report.degree,
        "value": report.value.as_ref().map(|v| v.to_string()),
        "rawFraction": report.raw.to_string(),
    });
    emit(&args.out, human, value)
}

fn theta_table(out: OutputArgs) -> Result<(), CliError> {
    let mut human = String::from("  k  l  m  value\n");
    let mut rows = Vec::new();
    for k in 0..3u32 {
        for l in 0..3u32 {
            for m in 0..3u32 {
                let report = foamlab_core::foam::theta_foam(k, l, m)
                    .evaluate(EvalMode::Homogeneous)
                    .map_err(CliError::from_foam)?;
                let v = report.value.expect("theta foams are homogeneous");
                human.push_str(&format!("  {k}  {l}  {m}  {v}\n"));
                rows.push(json!({"k": k, "l": l, "m": m, "value": v.to_string()}));
            }
        }
    }
    human.pop();
    emit(&out, human, json!({"rows": rows}))
}

fn state_space_cmd(args: StateSpaceArgs) -> Result<(), CliError> {
    let web = load_web(&args.builtin, &args.input)?;
    let phi = parse_phi(&args.phi)?;
    let fam =
        build_generator_family(&web, args.vertex.as_deref()).map_err(CliError::from_statespace)?;
    let report = state_space(&fam, &phi).map_err(CliError::from_statespace)?;
    let factors = match &report.invariant_factors {
        Some(fs) => {
            let strs: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            strs.join(", ")
        }
        None => "(not computed over R)".to_string(),
    };
    let human = format!(
        "web: {}\nphi: {}\ngenerators: {}\nrank: {}\ngraded rank (raw): {}\ngraded rank (centered, shift {:+}): {}\npairing is identity: {}\ninvariant factors: {}\nbasis columns: {:?}",
        report.web_name.as_deref().unwrap_or("(unnamed)"),
        report.phi,
        fam.size(),
        report.rank,
        report.graded_rank_raw,
        report.degree_shift,
        report.graded_rank_centered,
        report.pairing_is_identity,
        factors,
        report.basis,
    );
    let value = report.to_json();
    emit(&args.out, human, value)
}
