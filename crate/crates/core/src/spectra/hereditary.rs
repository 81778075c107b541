//! Hereditary edge-density property P_{t,r} and the matching spectral bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order for which every vertex subset is inspected.
pub const MAX_HEREDITARY_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HereditaryDensity {
    /// Every induced subgraph `H` with `|V(H)| >= t` has `e(H) <= t|V(H)| + r`.
    pub holds_p_tr: bool,
    /// `sqrt(t n) + sqrt(t(t+1) + 2r) + (t-1)/2`.
    pub guiduli_bound: f64,
    /// Minimum of `t|S| + r - e(G[S])` over the inspected subsets.
    pub min_slack: f64,
    pub worst_subset: VertexSet,
}

/// Checks P_{t,r} over all vertex subsets of size at least `t`, walking the
/// subsets in Gray-code order so each step updates the induced edge count.
/// Induced subgraphs suffice because deleting edges only lowers `e(H)`.
pub fn hereditary_density_bound(g: &Graph, t: usize, r: f64) -> Result<HereditaryDensity> {
    let n = g.order();
    if n > MAX_HEREDITARY_ORDER {
        return Err(Error::BudgetExceeded {
            context: "hereditary_density_bound",
            budget: 1 << MAX_HEREDITARY_ORDER,
        });
    }
    let tf = t as f64;
    let radicand = tf * (tf + 1.0) + 2.0 * r;
    if t == 0 || radicand < 0.0 {
        return Err(Error::InvalidParameters(format!(
            "need t >= 1 and r >= -t(t+1)/2, got t = {t}, r = {r}"
        )));
    }
    let guiduli_bound = (tf * n as f64).sqrt() + radicand.sqrt() + (tf - 1.0) / 2.0;
    let rows = g.rows64();
    let mut set = 0u64;
    let mut edges = 0i64;
    let mut min_slack = f64::INFINITY;
    let mut worst = 0u64;
    for i in 1u64..(1 << n) {
        let v = i.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if set & bit == 0 {
            edges += (rows[v] & set).count_ones() as i64;
            set |= bit;
        } else {
            set &= !bit;
            edges -= (rows[v] & set).count_ones() as i64;
        }
        let size = set.count_ones() as usize;
        if size >= t {
            let slack = tf * size as f64 + r - edges as f64;
            if slack < min_slack || (slack == min_slack && set < worst) {
                min_slack = slack;
                worst = set;
            }
        }
    }
    Ok(HereditaryDensity {
        holds_p_tr: min_slack >= -1e-12,
        guiduli_bound,
        min_slack,
        worst_subset: VertexSet(worst),
    })
}
