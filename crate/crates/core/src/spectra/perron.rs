//! Perron vector of a connected graph.

use serde::Serialize;

use super::eigen::Lu;
use super::{eigenvalues, MatrixKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residual bound `|Ax - lambda x|_inf` accepted for the principal eigenvector.
pub const RESIDUAL_TOL: f64 = 1e-10;

const POWER_MAX_ITERS: usize = 200_000;

/// Unit positive eigenvector for the largest adjacency eigenvalue.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrincipalEigenvector {
    pub entries: Vec<f64>,
    pub lambda: f64,
}

impl PrincipalEigenvector {
    pub fn l1_norm(&self) -> f64 {
        self.entries.iter().sum()
    }
}

fn apply(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.order())
        .map(|v| g.neighbors(v).map(|u| x[u]).sum())
        .collect()
}

fn normalise(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let sign = if x.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    for v in x.iter_mut() {
        *v *= sign / norm;
    }
}

fn residual(g: &Graph, x: &[f64]) -> (f64, f64) {
    let ax = apply(g, x);
    let lambda: f64 = ax.iter().zip(x).map(|(a, b)| a * b).sum();
    let r = ax
        .iter()
        .zip(x)
        .map(|(a, b)| (a - lambda * b).abs())
        .fold(0.0, f64::max);
    (lambda, r)
}

/// Inverse iteration shifted just above `lambda_1`, started from the
/// degree vector; falls back to power iteration on `A + I`.
pub fn principal_eigenvector(g: &Graph) -> Result<PrincipalEigenvector> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    if n == 1 {
        return Ok(PrincipalEigenvector {
            entries: vec![1.0],
            lambda: 0.0,
        });
    }
    let lambda1 = eigenvalues(g, MatrixKind::Adjacency)?.largest();
    let start: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    if let Some(v) = inverse_iteration(g, lambda1, &start) {
        return Ok(v);
    }
    power_iteration(g, start)
}

fn inverse_iteration(g: &Graph, lambda1: f64, start: &[f64]) -> Option<PrincipalEigenvector> {
    let n = g.order();
    let shift = lambda1 + 1e-8 * lambda1.max(1.0);
    let mut a = g.adjacency_matrix();
    for v in 0..n {
        a[v * n + v] -= shift;
    }
    let lu = Lu::factor(a, n)?;
    let mut x = start.to_vec();
    normalise(&mut x);
    for _ in 0..6 {
        x = lu.solve(&x);
        if x.iter().any(|v| !v.is_finite()) {
            return None;
        }
        normalise(&mut x);
        let (lambda, r) = residual(g, &x);
        if r <= RESIDUAL_TOL && x.iter().all(|&v| v > 0.0) {
            return Some(PrincipalEigenvector { entries: x, lambda });
        }
    }
    None
}

fn power_iteration(g: &Graph, mut x: Vec<f64>) -> Result<PrincipalEigenvector> {
    normalise(&mut x);
    for _ in 0..POWER_MAX_ITERS {
        let ax = apply(g, &x);
        let mut y: Vec<f64> = ax.iter().zip(&x).map(|(a, b)| a + b).collect();
        normalise(&mut y);
        x = y;
        let (lambda, r) = residual(g, &x);
        if r <= RESIDUAL_TOL {
            return Ok(PrincipalEigenvector { entries: x, lambda });
        }
    }
    Err(Error::NonConvergence(
        "power iteration for the principal eigenvector".into(),
    ))
}
