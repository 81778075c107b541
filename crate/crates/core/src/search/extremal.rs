//! Constrained extremal search: exhaustive over a source, or simulated
//! annealing over edge moves from a feasible seed.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::canon::{certificate, Certificate};
use crate::graph::Graph;
use crate::invariants::{clique_number, is_saturated};
use crate::spectra::{eigenvalues, principal_eigenvector, MatrixKind};

use super::source::GraphSource;

/// Values within this distance of the optimum count as ties.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// lambda_1 of the adjacency matrix.
    SpectralRadius,
    /// lambda_1 - lambda_2.
    SpectralGap,
    /// `|x|_1` of the unit Perron vector (connected graphs only).
    PerronL1,
    Energy,
    /// lambda_1 + lambda_n.
    ExtremeSum,
    /// lambda_1 minus the average degree.
    Irregularity,
    LaplacianRadius,
    /// Second smallest Laplacian eigenvalue.
    AlgebraicConnectivity,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::SpectralRadius,
        Quantity::SpectralGap,
        Quantity::PerronL1,
        Quantity::Energy,
        Quantity::ExtremeSum,
        Quantity::Irregularity,
        Quantity::LaplacianRadius,
        Quantity::AlgebraicConnectivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::SpectralRadius => "lambda",
            Quantity::SpectralGap => "gap",
            Quantity::PerronL1 => "perron_l1",
            Quantity::Energy => "energy",
            Quantity::ExtremeSum => "extreme_sum",
            Quantity::Irregularity => "irregularity",
            Quantity::LaplacianRadius => "laplacian_radius",
            Quantity::AlgebraicConnectivity => "algebraic_connectivity",
        }
    }

    pub fn evaluate(self, g: &Graph) -> Result<f64> {
        let adjacency = || eigenvalues(g, MatrixKind::Adjacency).map(|s| s.values);
        Ok(match self {
            Quantity::SpectralRadius => adjacency()?[0],
            Quantity::SpectralGap => {
                let v = adjacency()?;
                if v.len() < 2 {
                    return Err(Error::InvalidParameters("spectral gap needs two vertices".into()));
                }
                v[0] - v[1]
            }
            Quantity::PerronL1 => principal_eigenvector(g)?.l1_norm(),
            Quantity::Energy => adjacency()?.iter().map(|x| x.abs()).sum(),
            Quantity::ExtremeSum => {
                let v = adjacency()?;
                v[0] + v[v.len() - 1]
            }
            Quantity::Irregularity => adjacency()?[0] - g.average_degree(),
            Quantity::LaplacianRadius => eigenvalues(g, MatrixKind::Laplacian)?.values[0],
            Quantity::AlgebraicConnectivity => {
                let v = eigenvalues(g, MatrixKind::Laplacian)?.values;
                if v.len() < 2 {
                    return Err(Error::InvalidParameters("algebraic connectivity needs two vertices".into()));
                }
                v[v.len() - 2]
            }
        })
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Quantity> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown objective `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Max,
    Min,
}

impl Direction {
    /// `a` is strictly better than `b` by more than the tie tolerance.
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Direction::Max => a > b + TIE_TOL,
            Direction::Min => a < b - TIE_TOL,
        }
    }

    fn sign(self) -> f64 {
        match self {
            Direction::Max => 1.0,
            Direction::Min => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Objective {
    pub quantity: Quantity,
    pub direction: Direction,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            Direction::Max => "max",
            Direction::Min => "min",
        };
        write!(f, "{d}:{}", self.quantity.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    /// `max:lambda`, `min:perron_l1`, ...
    fn from_str(s: &str) -> Result<Objective> {
        let (d, q) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameters(format!("objective `{s}` must look like max:lambda")))?;
        let direction = match d.trim() {
            "max" => Direction::Max,
            "min" => Direction::Min,
            other => return Err(Error::InvalidParameters(format!("direction `{other}`"))),
        };
        Ok(Objective {
            quantity: q.parse()?,
            direction,
        })
    }
}

/// Conjunction of optional graph predicates.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Constraint {
    pub connected: bool,
    pub planar: bool,
    pub nonregular: bool,
    pub tree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    /// `Some(r)`: no clique on `r + 1` vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_free: Option<usize>,
    /// `Some(r)`: K_{r+1}-saturated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
}

impl Constraint {
    pub fn admits(&self, g: &Graph, budget: Budget) -> Result<bool> {
        if self.edges.is_some_and(|m| g.size() != m)
            || self.max_degree.is_some_and(|d| g.max_degree() != d)
            || (self.nonregular && g.is_regular())
            || (self.connected && !g.is_connected())
            || (self.tree && !g.is_tree())
        {
            return Ok(false);
        }
        if let Some(r) = self.clique_free {
            if clique_number(g, budget)? > r {
                return Ok(false);
            }
        }
        if let Some(r) = self.saturated {
            if !is_saturated(g, r, budget)? {
                return Ok(false);
            }
        }
        Ok(!self.planar || g.is_planar())
    }
}

impl FromStr for Constraint {
    type Err = Error;

    /// Comma-separated terms: `connected`, `planar`, `nonregular`, `tree`,
    /// `maxdeg=D`, `kfree=R`, `saturated=R`, `edges=M`.
    fn from_str(s: &str) -> Result<Constraint> {
        let mut c = Constraint::default();
        for term in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let num = |v: &str| -> Result<usize> {
                v.parse()
                    .map_err(|_| Error::InvalidParameters(format!("constraint term `{term}`")))
            };
            match term.split_once('=') {
                None => match term {
                    "connected" => c.connected = true,
                    "planar" => c.planar = true,
                    "nonregular" => c.nonregular = true,
                    "tree" => c.tree = true,
                    _ => return Err(Error::InvalidParameters(format!("constraint term `{term}`"))),
                },
                Some((k, v)) => match k {
                    "maxdeg" => c.max_degree = Some(num(v)?),
                    "kfree" => c.clique_free = Some(num(v)?),
                    "saturated" => c.saturated = Some(num(v)?),
                    "edges" => c.edges = Some(num(v)?),
                    _ => return Err(Error::InvalidParameters(format!("constraint term `{term}`"))),
                },
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveSet {
    /// Remove one edge and add one non-edge; keeps the edge count.
    Swap,
    /// Toggle one vertex pair.
    Toggle,
    /// Swap or toggle with equal probability.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Annealing {
    pub moves: MoveSet,
    pub restarts: usize,
    pub steps: usize,
    pub initial_temperature: f64,
    /// Temperature at step `k` is `initial_temperature * cooling^k`.
    pub cooling: f64,
    pub seed: u64,
}

impl Default for Annealing {
    fn default() -> Self {
        Annealing {
            moves: MoveSet::Swap,
            restarts: 32,
            steps: 2000,
            initial_temperature: 1.0,
            cooling: 0.997,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Method {
    Exhaustive(GraphSource),
    LocalSearch { start: Graph, schedule: Annealing },
}

#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub objective: Objective,
    pub constraint: Constraint,
    pub method: Method,
    pub budget: Budget,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ExhaustiveTrace {
    pub examined: usize,
    pub feasible: usize,
    /// Feasible graphs where the objective could not be evaluated.
    pub failed: usize,
    pub skipped_inputs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestartTrace {
    pub restart: usize,
    pub best: f64,
    pub accepted: usize,
    pub rejected_infeasible: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Trace {
    Exhaustive(ExhaustiveTrace),
    LocalSearch { schedule: Annealing, restarts: Vec<RestartTrace> },
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalResult {
    pub objective: Objective,
    pub constraint: Constraint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    /// Optimum, or `None` when nothing feasible was seen.
    pub best: Option<f64>,
    /// Canonical graph6 of every optimal isomorphism class, sorted.
    pub args: Vec<String>,
    pub trace: Trace,
    pub meta: super::verify::RunMeta,
}

impl ExtremalResult {
    pub fn arg_graphs(&self) -> Vec<Graph> {
        self.args
            .iter()
            .map(|s| Graph::from_graph6(s).expect("stored graph6 parses"))
            .collect()
    }

    /// JSON without the `meta` block.
    pub fn payload_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("result serialises");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("meta");
        }
        serde_json::to_string_pretty(&v).expect("result serialises")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serialises")
    }
}

/// Running optimum with every near-tie, deduplicated by certificate.
/// Entries more than TIE_TOL behind the final best are dropped at the end,
/// so the outcome does not depend on arrival order.
#[derive(Clone, Debug)]
struct Leaders {
    direction: Direction,
    best: Option<f64>,
    pool: Vec<(f64, Certificate)>,
}

impl Leaders {
    fn new(direction: Direction) -> Self {
        Leaders {
            direction,
            best: None,
            pool: Vec::new(),
        }
    }

    fn offer(&mut self, value: f64, make: impl FnOnce() -> Certificate) {
        let d = self.direction;
        if self.best.is_some_and(|b| d.better(b, value)) {
            return;
        }
        if self.best.is_none_or(|b| d.sign() * value > d.sign() * b) {
            let improved = self.best.is_some_and(|b| d.better(value, b));
            self.best = Some(value);
            if improved {
                self.pool.retain(|(v, _)| !d.better(value, *v));
            }
        }
        let c = make();
        match self.pool.iter_mut().find(|(_, x)| *x == c) {
            Some(slot) => {
                if d.sign() * value > d.sign() * slot.0 {
                    slot.0 = value;
                }
            }
            None => self.pool.push((value, c)),
        }
    }

    fn merge(mut self, other: Leaders) -> Leaders {
        for (v, c) in other.pool {
            self.offer(v, || c);
        }
        self
    }

    fn finish(self) -> (Option<f64>, Vec<String>) {
        let Some(best) = self.best else {
            return (None, Vec::new());
        };
        let d = self.direction;
        let mut keep: Vec<(f64, Certificate)> = self.pool.into_iter().filter(|(v, _)| !d.better(best, *v)).collect();
        keep.sort_by(|a, b| a.1.cmp(&b.1));
        (Some(best), keep.into_iter().map(|(_, c)| c.to_graph().to_graph6()).collect())
    }
}

fn with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<(T, usize)> {
    match workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidParameters(format!("worker pool: {e}")))?;
            let n = pool.current_num_threads();
            Ok((pool.install(f), n))
        }
        None => Ok((f(), rayon::current_num_threads())),
    }
}

/// Solves `problem`. Exhaustive mode reports every optimal isomorphism
/// class; local search reports the best classes found, reproducibly.
pub fn extremal(problem: &SearchProblem) -> Result<ExtremalResult> {
    let start = Instant::now();
    let (body, workers) = with_pool(problem.workers, || match &problem.method {
        Method::Exhaustive(source) => exhaustive(problem, source),
        Method::LocalSearch { start, schedule } => anneal(problem, start, schedule),
    })?;
    let (best, args, trace, source) = body?;
    Ok(ExtremalResult {
        objective: problem.objective,
        constraint: problem.constraint.clone(),
        source,
        best,
        args,
        trace,
        meta: super::verify::RunMeta {
            wall_time_s: start.elapsed().as_secs_f64(),
            workers,
        },
    })
}

type Body = (Option<f64>, Vec<String>, Trace, Option<String>);

fn exhaustive(problem: &SearchProblem, source: &GraphSource) -> Result<Body> {
    let mut stream = source.open()?;
    let mut trace = ExhaustiveTrace::default();
    let mut leaders = Leaders::new(problem.objective.direction);
    let q = problem.objective.quantity;
    loop {
        let chunk = stream.next_chunk(4096);
        if chunk.is_empty() {
            break;
        }
        trace.examined += chunk.len();
        let evaluated: Vec<Result<Option<Result<f64>>>> = chunk
            .par_iter()
            .map(|g| {
                if !problem.constraint.admits(g, problem.budget)? {
                    return Ok(None);
                }
                Ok(Some(q.evaluate(g)))
            })
            .collect();
        for (g, r) in chunk.iter().zip(evaluated) {
            match r? {
                None => {}
                Some(Err(_)) => {
                    trace.feasible += 1;
                    trace.failed += 1;
                }
                Some(Ok(v)) => {
                    trace.feasible += 1;
                    leaders.offer(v, || certificate(g).expect("enumerated graphs fit the bitset limit"));
                }
            }
        }
    }
    trace.skipped_inputs = stream.skipped();
    let (best, args) = leaders.finish();
    Ok((best, args, Trace::Exhaustive(trace), Some(source.to_string())))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

fn anneal(problem: &SearchProblem, start: &Graph, schedule: &Annealing) -> Result<Body> {
    start.require_bitset()?;
    if !problem.constraint.admits(start, problem.budget)? {
        return Err(Error::InfeasibleSeed);
    }
    let q = problem.objective.quantity;
    let d = problem.objective.direction;
    let start_value = q.evaluate(start).map_err(|_| Error::InfeasibleSeed)?;
    let all_pairs = pairs(start.order());
    if all_pairs.is_empty() {
        let mut l = Leaders::new(d);
        l.offer(start_value, || certificate(start).expect("bitset order"));
        let (best, args) = l.finish();
        let trace = Trace::LocalSearch {
            schedule: schedule.clone(),
            restarts: Vec::new(),
        };
        return Ok((best, args, trace, None));
    }
    let moves = if problem.constraint.edges.is_some() {
        MoveSet::Swap
    } else {
        schedule.moves
    };
    let runs: Vec<Result<(Leaders, RestartTrace)>> = (0..schedule.restarts)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(schedule.seed);
            rng.set_stream(restart as u64);
            let mut g = start.clone();
            let mut value = start_value;
            let mut leaders = Leaders::new(d);
            leaders.offer(value, || certificate(&g).expect("bitset order"));
            let mut temperature = schedule.initial_temperature;
            let (mut accepted, mut rejected) = (0, 0);
            for _ in 0..schedule.steps {
                let swap = match moves {
                    MoveSet::Swap => true,
                    MoveSet::Toggle => false,
                    MoveSet::Mixed => rng.gen_bool(0.5),
                };
                let candidate = if swap {
                    let edges: Vec<&(usize, usize)> = all_pairs.iter().filter(|&&(u, v)| g.has_edge(u, v)).collect();
                    let non: Vec<&(usize, usize)> = all_pairs.iter().filter(|&&(u, v)| !g.has_edge(u, v)).collect();
                    if edges.is_empty() || non.is_empty() {
                        temperature *= schedule.cooling;
                        continue;
                    }
                    let &(a, b) = edges[rng.gen_range(0..edges.len())];
                    let &(c, e) = non[rng.gen_range(0..non.len())];
                    g.without_edge(a, b).with_edge(c, e)
                } else {
                    let (a, b) = all_pairs[rng.gen_range(0..all_pairs.len())];
                    if g.has_edge(a, b) {
                        g.without_edge(a, b)
                    } else {
                        g.with_edge(a, b)
                    }
                };
                temperature *= schedule.cooling;
                if !problem.constraint.admits(&candidate, problem.budget)? {
                    rejected += 1;
                    continue;
                }
                let Ok(v) = q.evaluate(&candidate) else {
                    rejected += 1;
                    continue;
                };
                let gain = d.sign() * (v - value);
                let u: f64 = rng.gen();
                if gain >= 0.0 || (temperature > 0.0 && u < (gain / temperature).exp()) {
                    g = candidate;
                    value = v;
                    accepted += 1;
                    leaders.offer(value, || certificate(&g).expect("bitset order"));
                }
            }
            let best = leaders.best.expect("seed offered");
            Ok((
                leaders,
                RestartTrace {
                    restart,
                    best,
                    accepted,
                    rejected_infeasible: rejected,
                },
            ))
        })
        .collect();
    let mut total = Leaders::new(d);
    let mut traces = Vec::new();
    for r in runs {
        let (l, t) = r?;
        total = total.merge(l);
        traces.push(t);
    }
    let (best, args) = total.finish();
    let trace = Trace::LocalSearch {
        schedule: schedule.clone(),
        restarts: traces,
    };
    Ok((best, args, trace, None))
}
