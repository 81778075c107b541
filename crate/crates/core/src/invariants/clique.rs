//! Maximum cliques, independent sets and saturation on `u64` vertex masks.

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};

struct MaxClique<'a> {
    rows: &'a [u64],
    best: u64,
    best_len: u32,
    /// Stop as soon as a clique of this size is found.
    target: u32,
    meter: Meter,
}

/// Greedy sequential colouring of `p`; vertices listed by nondecreasing colour.
fn colour_sort(rows: &[u64], p: u64, order: &mut Vec<usize>, colours: &mut Vec<u32>) {
    order.clear();
    colours.clear();
    let mut uncoloured = p;
    let mut k = 0;
    while uncoloured != 0 {
        k += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !rows[v] & !(1u64 << v);
            uncoloured &= !(1u64 << v);
            order.push(v);
            colours.push(k);
        }
    }
}

impl MaxClique<'_> {
    fn expand(&mut self, clique: u64, mut p: u64) -> Result<()> {
        self.meter.tick()?;
        let mut order = Vec::with_capacity(p.count_ones() as usize);
        let mut colours = Vec::with_capacity(order.capacity());
        colour_sort(self.rows, p, &mut order, &mut colours);
        let size = clique.count_ones();
        for i in (0..order.len()).rev() {
            if size + colours[i] <= self.best_len || self.best_len >= self.target {
                return Ok(());
            }
            let v = order[i];
            let next = p & self.rows[v];
            let grown = clique | (1u64 << v);
            if next == 0 {
                if size + 1 > self.best_len {
                    self.best_len = size + 1;
                    self.best = grown;
                }
            } else {
                self.expand(grown, next)?;
            }
            p &= !(1u64 << v);
        }
        Ok(())
    }
}

fn search(rows: &[u64], within: u64, target: u32, budget: Budget) -> Result<u64> {
    if within == 0 {
        return Ok(0);
    }
    let mut s = MaxClique {
        rows,
        best: 1u64 << within.trailing_zeros(),
        best_len: 1,
        target,
        meter: budget.meter("clique search"),
    };
    s.expand(0, within)?;
    Ok(s.best)
}

/// A maximum clique of `g`.
pub fn maximum_clique(g: &Graph, budget: Budget) -> Result<VertexSet> {
    g.require_bitset()?;
    search(g.rows64(), VertexSet::full(g.order()).0, u32::MAX, budget).map(VertexSet)
}

/// Clique number ω.
pub fn clique_number(g: &Graph, budget: Budget) -> Result<usize> {
    maximum_clique(g, budget).map(|s| s.len())
}

/// A maximum independent set of `g`.
pub fn maximum_independent_set(g: &Graph, budget: Budget) -> Result<VertexSet> {
    maximum_clique(&g.complement(), budget)
}

/// Independence number α.
pub fn independence_number(g: &Graph, budget: Budget) -> Result<usize> {
    maximum_independent_set(g, budget).map(|s| s.len())
}

/// Whether `G[within]` contains a clique on `k` vertices.
pub(crate) fn has_clique(rows: &[u64], within: u64, k: usize, budget: Budget) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    if (within.count_ones() as usize) < k {
        return Ok(false);
    }
    Ok(search(rows, within, k as u32, budget)?.count_ones() as usize >= k)
}

/// K_{r+1}-saturated: no clique on `r + 1` vertices, but adding any missing
/// edge creates one.
pub fn is_saturated(g: &Graph, r: usize, budget: Budget) -> Result<bool> {
    g.require_bitset()?;
    if r < 2 {
        return Err(Error::InvalidParameters(format!(
            "saturation needs clique size r >= 2, got {r}"
        )));
    }
    let n = g.order();
    let rows = g.rows64();
    let all = VertexSet::full(n).0;
    if has_clique(rows, all, r + 1, budget)? {
        return Ok(false);
    }
    for u in 0..n {
        let above = u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
        for v in BitIter(all & !rows[u] & above) {
            // the new edge uv lies in a K_{r+1} iff N(u) ∩ N(v) holds a K_{r-1}
            if !has_clique(rows, rows[u] & rows[v], r - 1, budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All maximal independent sets, each listed once, in the order found by
/// Bron–Kerbosch with pivoting on the complement.
pub fn maximal_independent_sets(g: &Graph, budget: Budget) -> Result<Vec<VertexSet>> {
    g.require_bitset()?;
    let n = g.order();
    let all = VertexSet::full(n).0;
    let comp: Vec<u64> = g.rows64().iter().enumerate().map(|(v, r)| all & !r & !(1u64 << v)).collect();
    let mut out = Vec::new();
    let mut meter = budget.meter("maximal independent sets");
    bron_kerbosch(&comp, 0, all, 0, &mut out, &mut meter)?;
    Ok(out)
}

fn bron_kerbosch(rows: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    if p == 0 {
        if x == 0 {
            out.push(VertexSet(r));
        }
        return Ok(());
    }
    let pivot = BitIter(p | x)
        .max_by_key(|&u| ((rows[u] & p).count_ones(), std::cmp::Reverse(u)))
        .unwrap();
    for v in BitIter(p & !rows[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(rows, r | bit, p & rows[v], x & rows[v], out, meter)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}
