//! Exact NP-hard invariants: clique, independence and chromatic numbers,
//! toughness, and clique saturation.

pub mod clique;
pub mod coloring;
pub mod toughness;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use clique::{
    clique_number, independence_number, is_saturated, maximal_independent_sets, maximum_clique,
    maximum_independent_set,
};
pub use coloring::{chromatic_number, optimal_colouring};
pub use toughness::{toughness, toughness_with_witness, Toughness, ToughnessWitness};

/// Combinatorial invariants of one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CombinatorialProfile {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub delta_min: usize,
    pub delta_max: usize,
    pub d_bar: f64,
    /// `None` when the graph is disconnected.
    pub toughness: Option<Toughness>,
}

pub fn profile(g: &Graph, budget: Budget) -> Result<CombinatorialProfile> {
    let toughness = match toughness::toughness(g, budget) {
        Ok(t) => Some(t),
        Err(Error::NotConnected) => None,
        Err(e) => return Err(e),
    };
    Ok(CombinatorialProfile {
        omega: clique_number(g, budget)?,
        alpha: independence_number(g, budget)?,
        chi: chromatic_number(g, budget)?,
        delta_min: g.min_degree(),
        delta_max: g.max_degree(),
        d_bar: g.average_degree(),
        toughness,
    })
}
