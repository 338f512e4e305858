use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_lc::arrangement::bounded_regions_2d;
use matroid_lc::fixtures::{self, Fixture};
use matroid_lc::flats::reduced_char_poly;
use matroid_lc::graph_invariants::{chromatic_polynomial, reliability_data};
use matroid_lc::io::{parse_affine_arrangement, parse_central_arrangement, parse_graph, parse_matroid_json};
use matroid_lc::report::{check_fixtures, sampled_orderings, theorem_report};
use matroid_lc::sequence::LogConcavityVerdict;
use matroid_lc::{Error, Matroid, Result};

#[derive(Parser)]
#[command(name = "matroid-lc", version, about = "Exact matroid invariants and log-concavity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one matroid.
    Invariants(InvariantsArgs),
    /// Run the checks over a corpus of built-in fixtures.
    Check(CheckArgs),
    /// Chromatic polynomial of a graph.
    Chromatic(GraphArgs),
    /// All-terminal reliability of a connected graph.
    Reliability(GraphArgs),
    /// Characteristic polynomial and bounded regions of a line arrangement.
    Regions(RegionsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingMode {
    Given,
    Random,
}

#[derive(Args)]
struct OutputArgs {
    /// Compact single-line JSON instead of pretty-printed.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatroidInput {
    /// Uniform matroid `k,n`.
    #[arg(long, value_name = "K,N")]
    uniform: Option<String>,
    /// Cycle matroid of a graph (JSON or `u w` lines; `-` reads stdin).
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Column matroid of a rational matrix (JSON).
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Matroid given by its circuits (JSON).
    #[arg(long, value_name = "FILE")]
    circuits: Option<PathBuf>,
    /// Built-in fixture by name.
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: MatroidInput,
    #[arg(long, value_enum, default_value = "given")]
    ordering: OrderingMode,
    /// Number of random orderings with `--ordering random`.
    #[arg(long, default_value_t = 1)]
    orderings: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CheckArgs {
    /// Cycle and cocycle matroids of connected graphs with at most V vertices.
    #[arg(long, value_name = "V")]
    graphs_upto: Option<usize>,
    /// Uniform matroids on at most N elements.
    #[arg(long, value_name = "N")]
    uniform_upto: Option<usize>,
    /// Random rational matrices.
    #[arg(long, value_name = "COUNT")]
    matrices: Option<usize>,
    /// Named fixture; repeatable.
    #[arg(long, value_name = "NAME")]
    fixture: Vec<String>,
    /// Random orderings per matroid for the broken circuit complex.
    #[arg(long, default_value_t = 20)]
    orderings: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph as JSON or `u w` lines; `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
#[group(id = "arrangement", required = true, multiple = false, args = ["lines", "central"])]
struct RegionsArgs {
    /// Affine lines, each form as `[c, a, b]` for `c + a x + b y`.
    #[arg(long, value_name = "FILE")]
    lines: Option<PathBuf>,
    /// Central arrangement in three variables, deconed at `--infinity`.
    #[arg(long, value_name = "FILE")]
    central: Option<PathBuf>,
    /// Index of the hyperplane sent to infinity.
    #[arg(long, default_value_t = 0, requires = "central")]
    infinity: usize,
    #[command(flatten)]
    out: OutputArgs,
}

enum Outcome {
    Pass(Value),
    Violation(Value),
}

fn read_input(path: &Path) -> Result<String> {
    let mut s = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(s)
}

/// Parse JSON, filling in `"type"` when the file leaves it out.
fn read_typed_json(path: &Path, kind: &str) -> Result<Matroid> {
    let text = read_input(path)?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    if let Some(obj) = v.as_object_mut() {
        obj.entry("type").or_insert_with(|| json!(kind));
    }
    parse_matroid_json(&v.to_string())
}

fn load_matroid(input: &MatroidInput) -> Result<(String, Matroid)> {
    if let Some(spec) = &input.uniform {
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("--uniform expects k,n, got {spec:?}")))
        };
        let (k, n) = spec
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("--uniform expects k,n, got {spec:?}")))?;
        let (k, n) = (parse(k)?, parse(n)?);
        return Ok((format!("U({k},{n})"), Matroid::uniform(k, n)?));
    }
    if let Some(p) = &input.graph {
        return Ok((p.display().to_string(), Matroid::graphic(parse_graph(&read_input(p)?)?)?));
    }
    if let Some(p) = &input.matrix {
        return Ok((p.display().to_string(), read_typed_json(p, "matrix")?));
    }
    if let Some(p) = &input.circuits {
        return Ok((p.display().to_string(), read_typed_json(p, "circuits")?));
    }
    let name = input.fixture.as_deref().unwrap_or_default();
    let f = fixtures::by_name(name).ok_or_else(|| unknown_fixture(name))?;
    Ok((f.name, f.matroid))
}

fn unknown_fixture(name: &str) -> Error {
    Error::Parse(format!("unknown fixture {name:?}; known: {}, or U(k,n)", fixtures::NAMED.join(", ")))
}

fn invariants(args: &InvariantsArgs) -> Result<Outcome> {
    let (name, m) = load_matroid(&args.input)?;
    let k = match args.ordering {
        OrderingMode::Given => 0,
        OrderingMode::Random => args.orderings.max(1),
    };
    let r = theorem_report(&name, &m, &sampled_orderings(m.len(), k, args.seed, 0))?;
    let mut v = r.to_json();
    v["seed"] = json!(args.seed);
    Ok(if r.passed() { Outcome::Pass(v) } else { Outcome::Violation(v) })
}

fn check(args: &CheckArgs) -> Result<Outcome> {
    let mut corpus: Vec<Fixture> = Vec::new();
    if let Some(n) = args.uniform_upto {
        corpus.extend(fixtures::uniform_upto(n));
    }
    if let Some(v) = args.graphs_upto {
        corpus.extend(fixtures::cycle_matroids_upto(v));
        corpus.extend(fixtures::cocycle_matroids_upto(v));
    }
    if let Some(c) = args.matrices {
        corpus.extend(fixtures::matrix_samples(args.seed, c));
    }
    for name in &args.fixture {
        corpus.push(fixtures::by_name(name).ok_or_else(|| unknown_fixture(name))?);
    }
    if args.uniform_upto.is_none() && args.graphs_upto.is_none() && args.matrices.is_none() && args.fixture.is_empty() {
        corpus = fixtures::standard_corpus(args.seed);
    }
    let summary = check_fixtures(&corpus, args.orderings, args.seed)?;
    let v = summary.to_json();
    Ok(if summary.passed() { Outcome::Pass(v) } else { Outcome::Violation(v) })
}

fn chromatic(args: &GraphArgs) -> Result<Outcome> {
    let g = parse_graph(&read_input(&args.graph)?)?;
    let data = chromatic_polynomial(&g)?;
    let reduced = data.reduced_coefficients();
    let ok = data.poly.is_zero() || data.coefficients_ok();
    let v = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "components": data.components,
        "polynomial": data.poly.to_string(),
        "coefficients": data.poly.coeffs_desc().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "reduced_coefficients": reduced.to_strings(),
        "verdict": LogConcavityVerdict::of(&reduced.abs()),
        "sign_alternating": matroid_lc::sequence::is_sign_alternating(&reduced),
        "passed": ok,
    });
    Ok(if ok { Outcome::Pass(v) } else { Outcome::Violation(v) })
}

fn reliability(args: &GraphArgs) -> Result<Outcome> {
    let g = parse_graph(&read_input(&args.graph)?)?;
    let r = reliability_data(&g)?;
    Ok(Outcome::Pass(json!({
        "vertices": r.vertices,
        "edges": r.edges,
        "fseq": r.fseq.to_strings(),
        "hseq": r.hseq.to_strings(),
        "polynomial": r.polynomial.to_json(),
        "hseq_verdict": LogConcavityVerdict::of(&r.hseq),
    })))
}

fn regions(args: &RegionsArgs) -> Result<Outcome> {
    let (affine, central_chi) = match (&args.lines, &args.central) {
        (Some(p), _) => (parse_affine_arrangement(&read_input(p)?)?, None),
        (None, Some(p)) => {
            let c = parse_central_arrangement(&read_input(p)?)?;
            (c.decone(args.infinity)?, Some(reduced_char_poly(&c.matroid()?)?))
        }
        (None, None) => unreachable!("clap requires one of --lines, --central"),
    };
    let chi = affine.char_poly()?;
    let bounded = bounded_regions_2d(&affine)?;
    let at_one = chi.eval_i64(1);
    let mut v = json!({
        "lines": affine.len(),
        "char_poly": chi.to_json(),
        "char_poly_at_1": at_one.to_string(),
        "bounded_regions": bounded,
    });
    let mut consistent = at_one == num_bigint::BigInt::from(bounded);
    if let Some(cc) = central_chi {
        v["infinity"] = json!(args.infinity);
        v["reduced_char_poly_of_cone"] = json!(cc.to_json());
        consistent &= cc == chi;
    }
    if !consistent {
        return Err(Error::InvariantViolation(format!("region count and characteristic polynomial disagree: {v}")));
    }
    Ok(Outcome::Pass(v))
}

fn emit(v: &Value, compact: bool) {
    let text = if compact {
        serde_json::to_string(v)
    } else {
        serde_json::to_string_pretty(v)
    };
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = writeln!(out, "{}", text.expect("JSON values always serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, compact) = match &cli.command {
        Command::Invariants(a) => (invariants(a), a.out.json),
        Command::Check(a) => (check(a), a.out.json),
        Command::Chromatic(a) => (chromatic(a), a.out.json),
        Command::Reliability(a) => (reliability(a), a.out.json),
        Command::Regions(a) => (regions(a), a.out.json),
    };
    match result {
        Ok(Outcome::Pass(v)) => {
            emit(&v, compact);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Violation(v)) => {
            emit(&v, compact);
            eprintln!("violation found");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
