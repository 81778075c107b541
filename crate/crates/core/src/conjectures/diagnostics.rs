//! Numbers reported alongside the registry for statements that are
//! asymptotic or have no finite inequality. No verdicts here.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::cycles::{count_copies, cycle_spectrum, is_hamiltonian, Pattern};
use crate::graph::families::{generate, FamilySpec};
use crate::graph::Graph;
use crate::signed::{index_ramanujan_slack, min_signature_radius};
use crate::spectra::{self, MatrixKind};

/// Triangle count against the spectral Mantel threshold `sqrt(floor(n^2/4))`.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleThreshold {
    pub lambda: f64,
    pub threshold: f64,
    pub above_threshold: bool,
    pub triangles: u64,
}

pub fn triangle_threshold(g: &Graph) -> Result<TriangleThreshold> {
    let n = g.order();
    let lambda = spectra::spectral_radius(g)?;
    let threshold = ((n * n / 4) as f64).sqrt();
    Ok(TriangleThreshold {
        lambda,
        threshold,
        above_threshold: lambda > threshold,
        triangles: count_copies(g, Pattern::Triangle)?,
    })
}

/// Comparison with `S+_{n,k}` and presence of `C_{2k+2}`.
#[derive(Clone, Debug, Serialize)]
pub struct EvenCycleThreshold {
    pub lambda: f64,
    pub reference: f64,
    pub above_reference: bool,
    pub has_even_cycle: bool,
}

pub fn even_cycle_threshold(g: &Graph, k: usize, budget: Budget) -> Result<EvenCycleThreshold> {
    let n = g.order();
    let lambda = spectra::spectral_radius(g)?;
    let reference = spectra::spectral_radius(&generate(&FamilySpec::CompleteSplitPlus { n, k })?)?;
    let len = 2 * k + 2;
    Ok(EvenCycleThreshold {
        lambda,
        reference,
        above_reference: lambda > reference,
        has_even_cycle: cycle_spectrum(g, len, budget)?.contains(&len),
    })
}

/// `d / lambda'` for a d-regular graph, `lambda' = max(|lambda_2|, |lambda_n|)`,
/// together with Hamiltonicity.
#[derive(Clone, Debug, Serialize)]
pub struct PseudoRandomRatio {
    pub degree: usize,
    pub second_abs: f64,
    pub ratio: f64,
    pub hamiltonian: bool,
}

pub fn pseudo_random_ratio(g: &Graph, budget: Budget) -> Result<Option<PseudoRandomRatio>> {
    if !g.is_regular() || g.order() < 2 {
        return Ok(None);
    }
    let v = spectra::eigenvalues(g, MatrixKind::Adjacency)?.values;
    let second_abs = v[1].abs().max(v[v.len() - 1].abs());
    let degree = g.max_degree();
    Ok(Some(PseudoRandomRatio {
        degree,
        second_abs,
        ratio: degree as f64 / second_abs,
        hamiltonian: is_hamiltonian(g, budget)?,
    }))
}

/// `lambda - average degree` and `Delta - delta` for minimum-radius questions.
#[derive(Clone, Debug, Serialize)]
pub struct IrregularityProfile {
    pub lambda_minus_average: f64,
    pub degree_spread: usize,
}

pub fn irregularity(g: &Graph) -> Result<IrregularityProfile> {
    Ok(IrregularityProfile {
        lambda_minus_average: spectra::spectral_radius(g)? - g.average_degree(),
        degree_spread: g.max_degree() - g.min_degree(),
    })
}

/// Best signature against `2 sqrt(lambda(G) - 1)`; positive slack answers
/// the question affirmatively for this graph.
#[derive(Clone, Debug, Serialize)]
pub struct SignedIndexBound {
    pub rho_min: f64,
    pub bound: f64,
    pub slack: f64,
}

pub fn signed_index_bound(g: &Graph, budget: Budget) -> Result<SignedIndexBound> {
    let best = min_signature_radius(g, budget)?;
    let slack = index_ramanujan_slack(g, best.rho_min)?;
    Ok(SignedIndexBound {
        rho_min: best.rho_min,
        bound: best.rho_min + slack,
        slack,
    })
}
