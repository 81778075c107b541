//! r-uniform hypergraphs, their shadows, and the spectral radius
//! `r! max { sum_e prod_{i in e} x_i : ||x||_r = 1 }`.

pub mod embedding;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use embedding::{
    fan_embedding, from_triangulation, planar_max_embedding, rotation_from_coordinates,
    triangulation_candidates, Face, RotationSystem,
    TriangulationCandidate,
};

/// Largest supported edge size.
pub const MAX_RANK: usize = 4;
/// Radius estimates closer than this are treated as converged.
pub const RADIUS_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 100_000;
/// Number of deterministic starting vectors per shadow component.
pub const STARTS: usize = 5;

/// Edges are sorted vertex lists, stored sorted and without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<UniformHypergraph> {
        if !(2..=MAX_RANK).contains(&r) {
            return Err(Error::InvalidParameters(format!(
                "edge size {r} outside 2..={MAX_RANK}"
            )));
        }
        let mut set = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.len() != r || e.iter().any(|&v| v >= n) {
                return Err(Error::MalformedInput(format!(
                    "edge {e:?} is not an {r}-subset of 0..{n}"
                )));
            }
            if !set.insert(e.clone()) {
                return Err(Error::MalformedInput(format!("duplicate edge {e:?}")));
            }
        }
        Ok(UniformHypergraph {
            n,
            r,
            edges: set.into_iter().collect(),
        })
    }

    /// The 2-uniform hypergraph of a graph.
    pub fn from_graph(g: &Graph) -> UniformHypergraph {
        UniformHypergraph {
            n: g.order(),
            r: 2,
            edges: g.edges().into_iter().map(|(u, v)| vec![u, v]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Graph on the same vertices with `uv` whenever some edge contains both.
    pub fn shadow(&self) -> Graph {
        let mut g = Graph::empty(self.n.max(1));
        for e in &self.edges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    /// `r! * sum_e prod_{i in e} x_i`.
    pub fn objective(&self, x: &[f64]) -> f64 {
        let s: f64 = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| x[v]).product::<f64>())
            .sum();
        factorial(self.r) * s
    }
}

fn factorial(r: usize) -> f64 {
    (1..=r).product::<usize>() as f64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypergraphRadiusResult {
    pub radius: f64,
    /// Maximiser: nonnegative with unit ℓ^r norm, supported on one shadow component.
    pub vector: Vec<f64>,
    /// Iterations summed over all components and starts.
    pub iterations: usize,
    /// Width of the final Collatz–Wielandt bracket on the winning component.
    pub residual: f64,
    /// Radius reached from each start on the winning component.
    pub start_radii: Vec<f64>,
}

struct ComponentRun {
    radius: f64,
    x: Vec<f64>,
    iterations: usize,
    bracket: f64,
}

/// Shifted power iteration on one component with local vertex ids.
fn iterate(n: usize, r: usize, edges: &[Vec<usize>], start: Vec<f64>) -> Result<ComponentRun> {
    let rf = r as f64;
    let scale = factorial(r - 1);
    let normalise = |x: &mut [f64]| {
        let norm = x.iter().map(|v| v.powf(rf)).sum::<f64>().powf(1.0 / rf);
        for v in x.iter_mut() {
            *v /= norm;
        }
    };
    let mut x = start;
    normalise(&mut x);
    let mut prev = f64::NAN;
    let mut t = vec![0.0; n];
    for it in 1..=MAX_ITERATIONS {
        t.iter_mut().for_each(|v| *v = 0.0);
        for e in edges {
            for (i, &v) in e.iter().enumerate() {
                let p: f64 = e
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &u)| x[u])
                    .product();
                t[v] += scale * p;
            }
        }
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for v in 0..n {
            let q = t[v] / x[v].powf(rf - 1.0);
            lo = lo.min(q);
            hi = hi.max(q);
        }
        let radius = (0..n).map(|v| t[v] * x[v]).sum::<f64>();
        if hi - lo < RADIUS_TOL || (radius - prev).abs() < RADIUS_TOL * 1e-2 {
            return Ok(ComponentRun {
                radius,
                x,
                iterations: it,
                bracket: hi - lo,
            });
        }
        prev = radius;
        // shift by x^{r-1} so the iteration cannot cycle on bipartite-like components
        let mut next: Vec<f64> = (0..n)
            .map(|v| (t[v] + x[v].powf(rf - 1.0)).powf(1.0 / (rf - 1.0)))
            .collect();
        normalise(&mut next);
        x = next;
    }
    Err(Error::NonConvergence(format!(
        "hypergraph power iteration after {MAX_ITERATIONS} iterations"
    )))
}

/// Deterministic positive starting vectors: uniform, then smooth perturbations.
fn starts(n: usize) -> Vec<Vec<f64>> {
    (0..STARTS)
        .map(|k| {
            (0..n)
                .map(|i| 1.0 + 0.5 * ((k * (i + 1)) as f64 * 1.7).sin())
                .collect()
        })
        .collect()
}

/// Spectral radius by components of the shadow. Each component is iterated
/// from [`STARTS`] positive vectors until the Collatz–Wielandt bracket
/// `min_i T(x)_i / x_i^{r-1} <= rho <= max_i ...` closes to [`RADIUS_TOL`],
/// or successive estimates stop moving; the largest component radius wins.
pub fn spectral_radius(h: &UniformHypergraph) -> Result<HypergraphRadiusResult> {
    if h.edges.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    let shadow = h.shadow();
    let mut best: Option<HypergraphRadiusResult> = None;
    let mut total_iterations = 0;
    for comp in shadow.components() {
        if comp.len() < 2 {
            continue;
        }
        let mut local = vec![usize::MAX; h.n];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<Vec<usize>> = h
            .edges
            .iter()
            .filter(|e| local[e[0]] != usize::MAX)
            .map(|e| e.iter().map(|&v| local[v]).collect())
            .collect();
        let mut runs = Vec::new();
        for s in starts(comp.len()) {
            let run = iterate(comp.len(), h.r, &edges, s)?;
            total_iterations += run.iterations;
            runs.push(run);
        }
        let start_radii: Vec<f64> = runs.iter().map(|r| r.radius).collect();
        let top = runs
            .into_iter()
            .reduce(|a, b| if b.radius > a.radius { b } else { a })
            .unwrap();
        if best.as_ref().is_none_or(|b| top.radius > b.radius) {
            let mut vector = vec![0.0; h.n];
            for (i, &v) in comp.iter().enumerate() {
                vector[v] = top.x[i];
            }
            best = Some(HypergraphRadiusResult {
                radius: h.objective(&vector),
                vector,
                iterations: 0,
                residual: top.bracket,
                start_radii,
            });
        }
    }
    let mut out = best.expect("a hypergraph with an edge has a component of order >= 2");
    out.iterations = total_iterations;
    Ok(out)
}
