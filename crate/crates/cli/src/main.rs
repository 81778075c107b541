//! `spectralab`: batch verification, extremal search and invariant reports.
//!
//! Exit codes: 0 completed without violations, 1 violations found, 2 usage
//! or configuration error, 3 budget exhaustion or I/O failure.

mod config;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spectralab::conjectures::{self, parse_id, ConjectureId, Params};
use spectralab::graph::families::{generate, FamilySpec};
use spectralab::search::{
    extremal, hypercube_lambda, verify, Annealing, Constraint, GraphSource, Method, MoveSet, Objective,
    SearchProblem, VerifyOptions,
};
use spectralab::signed::{min_signature_radius, ramanujan_slack};
use spectralab::{Budget, Error, Graph};

/// `println!` that ignores a closed stdout (e.g. piped into `head`), so
/// files and exit codes are unaffected.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const SUBCOMMANDS: &[&str] = &["verify", "extremal", "invariants", "generate", "hypercube", "signed-min", "catalog"];

#[derive(Parser, Debug)]
#[command(name = "spectralab", version, about = "Spectral graph invariants, conjecture checks and extremal search")]
struct Cli {
    /// Flat key=value file; flags given on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check conjectures on every graph of a source.
    Verify(VerifyArgs),
    /// Find the graphs optimising a spectral quantity under constraints.
    Extremal(ExtremalArgs),
    /// Print spectral and combinatorial invariants.
    Invariants(GraphArgs),
    /// Write the graphs of a source as graph6.
    Generate(GenerateArgs),
    /// Largest eigenvalue of induced subgraphs of the hypercube.
    Hypercube(HypercubeArgs),
    /// Smallest spectral radius over all signatures.
    SignedMin(GraphArgs),
    /// List the conjecture registry.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug, Clone)]
struct SourceArgs {
    /// All graphs up to this order (built-in enumeration, at most 9).
    #[arg(long = "enum", value_name = "N")]
    enum_order: Option<usize>,
    /// Smallest order for --enum and --trees.
    #[arg(long, default_value_t = 1)]
    min_order: usize,
    /// Keep only connected graphs (--enum).
    #[arg(long)]
    connected: bool,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "PATH")]
    g6: Option<PathBuf>,
    /// All free trees up to this order (at most 20).
    #[arg(long, value_name = "N")]
    trees: Option<usize>,
    /// Family or family sweep, e.g. `doublekite(2..4,5)`.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

impl SourceArgs {
    fn source(&self) -> Result<GraphSource, Failure> {
        let given = [self.enum_order.is_some(), self.g6.is_some(), self.trees.is_some(), self.family.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(Failure::Usage(
                "give exactly one graph source: --enum, --g6, --trees or --family".into(),
            ));
        }
        let min_order = self.min_order.max(1);
        Ok(if let Some(n) = self.enum_order {
            GraphSource::BuiltinEnum {
                min_order,
                max_order: n,
                connected_only: self.connected,
            }
        } else if let Some(p) = &self.g6 {
            GraphSource::Graph6Stream { path: p.clone() }
        } else if let Some(n) = self.trees {
            GraphSource::TreeEnum {
                min_order,
                max_order: n,
            }
        } else {
            GraphSource::FamilySweep {
                template: self.family.clone().expect("checked above"),
            }
        })
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write the full report here instead of only printing a summary.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Comma-separated ids, or `all`.
    #[arg(long, default_value = "all")]
    conj: String,
    /// Predicate tolerance.
    #[arg(long, default_value_t = conjectures::DEFAULT_TOL)]
    tol: f64,
    /// Use l = n+ in C04_ELW.
    #[arg(long)]
    elw_n_plus: bool,
    /// Evaluate C20_AkbariH on singular graphs as well.
    #[arg(long)]
    force: bool,
    /// k for C07_ZhaiLinShu.
    #[arg(long, default_value_t = 2)]
    zls_k: usize,
    /// r for C14_Saturation.
    #[arg(long, default_value_t = 2)]
    saturation_r: usize,
    /// t and r of property P_{t,r} in C26_Guiduli_Ptr.
    #[arg(long, default_value_t = 1)]
    guiduli_t: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    guiduli_r: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    /// `max:QUANTITY` or `min:QUANTITY`; quantities: lambda, gap, perron_l1,
    /// energy, extreme_sum, irregularity, laplacian_radius,
    /// algebraic_connectivity.
    #[arg(long)]
    objective: String,
    /// Comma-separated: connected, planar, nonregular, tree, maxdeg=D,
    /// kfree=R, saturated=R, edges=M.
    #[arg(long, default_value = "")]
    constraint: String,
    #[command(flatten)]
    source: SourceArgs,
    /// Simulated annealing from this seed graph (family spec) instead of
    /// exhausting a source.
    #[arg(long, value_name = "SPEC")]
    anneal_from: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 2000)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = Moves::Swap)]
    moves: Moves,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Moves {
    Swap,
    Toggle,
    Mixed,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Family spec, e.g. `doublekite(8,5)`.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// A graph6 string.
    #[arg(long, value_name = "STRING")]
    graph6: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

impl GraphArgs {
    fn graph(&self) -> Result<Graph, Failure> {
        match (&self.family, &self.graph6) {
            (Some(f), None) => {
                let spec: FamilySpec = f.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
                generate(&spec).map_err(|e| Failure::Usage(e.to_string()))
            }
            (None, Some(s)) => Graph::from_graph6(s).map_err(|e| Failure::Usage(e.to_string())),
            _ => Err(Failure::Usage("give exactly one of --family or --graph6".into())),
        }
    }
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct HypercubeArgs {
    /// Dimension d (exact up to 4, heuristic for 5 and 6).
    #[arg(long)]
    dim: usize,
    /// Subset size m.
    #[arg(long)]
    size: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[command(flatten)]
    output: OutputArgs,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(_) | Error::MalformedInput(_) | Error::OrderOutOfRange { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Runtime(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn pool(workers: Option<usize>) -> Result<(), Failure> {
    if let Some(w) = workers {
        if w == 0 {
            return Err(Failure::Usage("--workers must be positive".into()));
        }
    }
    Ok(())
}

/// Writes a JSON value to `--out` (when given) and returns it pretty-printed.
fn emit_json(out: &OutputArgs, value: &Value) -> Result<String, Failure> {
    let text = serde_json::to_string_pretty(value).expect("json values serialise");
    if let Some(p) = &out.out {
        write_file(p, &text)?;
    }
    Ok(text)
}

fn parse_ids(list: &str, params: &mut Params) -> Result<Vec<ConjectureId>, Failure> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(ConjectureId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (id, powers) = parse_id(part).map_err(|e| {
            Failure::Usage(format!("{e}; run `spectralab catalog` for the list of ids"))
        })?;
        if let Some(i) = powers {
            params.powers_i = i;
        }
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    if ids.is_empty() {
        return Err(Failure::Usage("empty --conj list".into()));
    }
    Ok(ids)
}

fn counterexample_path(out: Option<&PathBuf>) -> PathBuf {
    match out {
        Some(p) => {
            let mut s = p.clone().into_os_string();
            s.push(".counterexamples.g6");
            s.into()
        }
        None => PathBuf::from("counterexamples.g6"),
    }
}

fn run_verify(a: &VerifyArgs) -> Result<ExitCode, Failure> {
    pool(a.output.workers)?;
    let mut params = Params {
        tol: a.tol,
        zls_k: a.zls_k,
        saturation_r: a.saturation_r,
        guiduli_t: a.guiduli_t,
        guiduli_r: a.guiduli_r,
        elw_ell_n_plus: a.elw_n_plus,
        force_applicability: a.force,
        budget: Budget::from_env(),
        ..Params::default()
    };
    let ids = parse_ids(&a.conj, &mut params)?;
    let source = a.source.source()?;
    let opts = VerifyOptions {
        workers: a.output.workers,
        ..VerifyOptions::default()
    };
    let report = verify(&source, &ids, &params, &opts)?;
    if let Some(p) = &a.output.out {
        let text = match a.output.format {
            Format::Json => report.to_json(),
            Format::Csv => report.to_csv(),
        };
        write_file(p, &text)?;
    }
    say!("{} ({} graphs, {} skipped inputs)", report.source, report.graph_count, report.skipped);
    say!("{:<26} {:>9} {:>9} {:>9} {:>14}", "id", "holds", "violated", "n/a", "min slack");
    for t in &report.conjectures {
        let slack = t.min_slack.map_or("-".to_string(), |s| format!("{s:.6e}"));
        say!("{:<26} {:>9} {:>9} {:>9} {:>14}", t.id.as_str(), t.holds, t.violated, t.na, slack);
    }
    let violations = report.total_violations();
    if violations > 0 {
        let path = counterexample_path(a.output.out.as_ref());
        let mut lines: Vec<&str> = report
            .conjectures
            .iter()
            .flat_map(|t| t.witnesses.iter().map(String::as_str))
            .collect();
        lines.sort_unstable();
        lines.dedup();
        write_file(&path, &(lines.join("\n") + "\n"))?;
        say!("{violations} violations; counterexamples written to {}", path.display());
        return Ok(ExitCode::from(1));
    }
    let exhausted: usize = report.conjectures.iter().map(|t| t.budget_exhausted).sum();
    if exhausted > 0 {
        eprintln!("{exhausted} checks ran out of node budget (raise {})", spectralab::budget::BUDGET_ENV);
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_extremal(a: &ExtremalArgs) -> Result<ExitCode, Failure> {
    pool(a.output.workers)?;
    let objective: Objective = a.objective.parse()?;
    let constraint: Constraint = a.constraint.parse()?;
    let method = match &a.anneal_from {
        Some(spec) => {
            let spec: FamilySpec = spec.parse()?;
            Method::LocalSearch {
                start: generate(&spec)?,
                schedule: Annealing {
                    moves: match a.moves {
                        Moves::Swap => MoveSet::Swap,
                        Moves::Toggle => MoveSet::Toggle,
                        Moves::Mixed => MoveSet::Mixed,
                    },
                    restarts: a.restarts,
                    steps: a.steps,
                    seed: a.seed,
                    ..Annealing::default()
                },
            }
        }
        None => Method::Exhaustive(a.source.source()?),
    };
    let problem = SearchProblem {
        objective,
        constraint,
        method,
        budget: Budget::from_env(),
        workers: a.output.workers,
    };
    let result = match extremal(&problem) {
        Err(Error::InfeasibleSeed) => return Err(Failure::Usage(Error::InfeasibleSeed.to_string())),
        r => r?,
    };
    if let Some(p) = &a.output.out {
        write_file(p, &result.to_json())?;
    }
    match result.best {
        Some(b) => {
            say!("{} = {b:.12}", result.objective);
            for g in &result.args {
                say!("  {g}");
            }
        }
        None => say!("no feasible graph"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_invariants(a: &GraphArgs) -> Result<ExitCode, Failure> {
    let g = a.graph()?;
    let budget = Budget::from_env();
    let summary = spectralab::spectra::summary(&g)?;
    let lambda_n = spectralab::spectra::eigenvalues(&g, spectralab::spectra::MatrixKind::Adjacency)?.smallest();
    let mut v = json!({
        "graph6": g.to_graph6(),
        "n": g.order(),
        "m": g.size(),
        "connected": g.is_connected(),
        "planar": g.is_planar(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "spectral": summary,
        "lambda_n": lambda_n,
    });
    let combinatorial = match spectralab::invariants::profile(&g, budget) {
        Ok(p) => serde_json::to_value(p).expect("profile serialises"),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    v["combinatorial"] = combinatorial;
    let text = emit_json(&a.output, &v)?;
    say!(
        "n={} m={} lambda1={:.10} gap={:.10}",
        g.order(),
        g.size(),
        summary.lambda,
        summary.spectral_gap
    );
    if a.output.out.is_none() {
        say!("{text}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_generate(a: &GenerateArgs) -> Result<ExitCode, Failure> {
    let mut stream = a.source.source()?.open()?;
    let mut text = String::new();
    for g in stream.by_ref() {
        text.push_str(&g.to_graph6());
        text.push('\n');
    }
    if stream.skipped() > 0 {
        eprintln!("skipped {} inputs", stream.skipped());
    }
    match &a.out {
        Some(p) => write_file(p, &text)?,
        None => say!("{}", text.trim_end()),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_hypercube(a: &HypercubeArgs) -> Result<ExitCode, Failure> {
    let r = hypercube_lambda(a.dim, a.size)?;
    let text = emit_json(&a.output, &serde_json::to_value(&r).expect("result serialises"))?;
    say!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn run_signed_min(a: &GraphArgs) -> Result<ExitCode, Failure> {
    let g = a.graph()?;
    let r = min_signature_radius(&g, Budget::from_env())?;
    let d = g.max_degree() as f64;
    let mut v = serde_json::to_value(&r).expect("result serialises");
    v["max_degree"] = json!(g.max_degree());
    v["ramanujan_slack"] = json!(ramanujan_slack(r.rho_min, d));
    v["lambda1_ramanujan_slack"] = json!(ramanujan_slack(r.lambda1_min, d));
    say!("{}", emit_json(&a.output, &v)?);
    Ok(ExitCode::SUCCESS)
}

fn run_catalog(a: &CatalogArgs) -> Result<ExitCode, Failure> {
    let entries = conjectures::list();
    match a.output.format {
        Format::Json => {
            let text = emit_json(&a.output, &serde_json::to_value(&entries).expect("catalog serialises"))?;
            if a.output.out.is_none() {
                say!("{text}");
            }
        }
        Format::Csv => {
            let mut text = String::from("id,topic,strict,statement\n");
            for e in &entries {
                text.push_str(&format!("{},{},{},\"{}\"\n", e.id, e.topic, e.strict, e.statement.replace('"', "\"\"")));
            }
            match &a.output.out {
                Some(p) => write_file(p, &text)?,
                None => say!("{}", text.trim_end()),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Extremal(a) => run_extremal(a),
        Command::Invariants(a) => run_invariants(a),
        Command::Generate(a) => run_generate(a),
        Command::Hypercube(a) => run_hypercube(a),
        Command::SignedMin(a) => run_signed_min(a),
        Command::Catalog(a) => run_catalog(a),
    }
}

fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn main() -> ExitCode {
    let mut args: Vec<String> = std::env::args().collect();
    if let Some(path) = config_path(&args) {
        match config::merge(args, &path, SUBCOMMANDS) {
            Ok(merged) => args = merged,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
