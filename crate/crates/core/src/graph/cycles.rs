//! Cycle lengths, Hamiltonicity and small-pattern subgraph counts.

use std::collections::BTreeSet;

use super::{BitIter, Graph};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};

/// Orders up to this use the subset dynamic programme for cycle lengths.
const SUBSET_DP_MAX: usize = 20;

/// Set of `l` in `3..=max_len` such that `g` contains a cycle of length `l`.
///
/// Uses a Hamiltonian-path subset table for `n <= 20` and a budgeted
/// depth-first search over simple cycles otherwise.
pub fn cycle_spectrum(g: &Graph, max_len: usize, budget: Budget) -> Result<BTreeSet<usize>> {
    let n = g.order();
    let max_len = max_len.min(n);
    if max_len < 3 || g.size() < 3 {
        return Ok(BTreeSet::new());
    }
    if n <= SUBSET_DP_MAX {
        Ok(subset_dp(g.rows64(), max_len))
    } else {
        let mut meter = budget.meter("cycle_spectrum");
        dfs_cycles(g, max_len, &mut meter)
    }
}

fn subset_dp(rows: &[u64], max_len: usize) -> BTreeSet<usize> {
    let n = rows.len();
    // ends[s]: endpoints v of Hamiltonian paths in G[s] that start at min(s)
    let mut ends = vec![0u32; 1usize << n];
    let mut found = 0u64;
    let want: u64 = (3..=max_len).fold(0, |acc, l| acc | (1 << l));
    for s in 1usize..(1 << n) {
        let size = s.count_ones() as usize;
        if size > max_len {
            continue;
        }
        let low = s.trailing_zeros() as usize;
        if size == 1 {
            ends[s] = 1 << low;
            continue;
        }
        let mut e = 0u32;
        for v in BitIter((s & !(1 << low)) as u64) {
            if rows[v] as u32 & ends[s & !(1 << v)] != 0 {
                e |= 1 << v;
            }
        }
        ends[s] = e;
        if size >= 3 && e & rows[low] as u32 != 0 {
            found |= 1 << size;
            if found == want {
                break;
            }
        }
    }
    BitIter(found).collect()
}

fn dfs_cycles(g: &Graph, max_len: usize, meter: &mut Meter) -> Result<BTreeSet<usize>> {
    let n = g.order();
    let mut found = BTreeSet::new();
    let mut on_path = vec![false; n];
    let all = max_len - 2;

    // cycles are rooted at their smallest vertex
    fn extend(
        g: &Graph,
        start: usize,
        v: usize,
        len: usize,
        max_len: usize,
        on_path: &mut [bool],
        found: &mut BTreeSet<usize>,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.tick()?;
        for w in g.neighbors(v) {
            if w == start && len >= 3 {
                found.insert(len);
            }
            if w > start && !on_path[w] && len < max_len {
                on_path[w] = true;
                extend(g, start, w, len + 1, max_len, on_path, found, meter)?;
                on_path[w] = false;
            }
        }
        Ok(())
    }

    for start in 0..n {
        on_path[start] = true;
        extend(g, start, start, 1, max_len, &mut on_path, &mut found, meter)?;
        on_path[start] = false;
        if found.len() == all {
            break;
        }
    }
    Ok(found)
}

/// Whether `g` has a cycle through all vertices. Orders below 3 are never Hamiltonian.
pub fn is_hamiltonian(g: &Graph, budget: Budget) -> Result<bool> {
    g.require_bitset()?;
    let n = g.order();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(false);
    }
    let rows = g.rows64();
    let mut meter = budget.meter("is_hamiltonian");
    let full = super::VertexSet::full(n).0;
    ham_extend(rows, full, 0, 1, &mut meter)
}

fn ham_extend(rows: &[u64], full: u64, end: u64, visited: u64, meter: &mut Meter) -> Result<bool> {
    meter.tick()?;
    let e = end as usize;
    if visited == full {
        return Ok(rows[e] & 1 != 0);
    }
    let open = full & !visited;
    // every unvisited vertex needs two usable neighbours, and the unvisited
    // part must hang together through the path ends
    let usable = open | 1 | (1 << e);
    for v in BitIter(open) {
        if (rows[v] & usable).count_ones() < 2 {
            return Ok(false);
        }
    }
    let mut seen = 1u64 << e;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= rows[v] & (open | 1);
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    if seen & open != open || seen & 1 == 0 {
        return Ok(false);
    }
    for w in BitIter(rows[e] & open) {
        if ham_extend(rows, full, w as u64, visited | (1 << w), meter)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Subgraph patterns that [`count_copies`] recognises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Triangle,
    C4,
    /// Complete graph on `r` vertices, `1 <= r <= 6`.
    Clique(usize),
}

fn common(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

/// Number of (not necessarily induced) subgraphs of `g` isomorphic to `pattern`.
pub fn count_copies(g: &Graph, pattern: Pattern) -> Result<u64> {
    let n = g.order();
    match pattern {
        Pattern::Triangle => count_copies(g, Pattern::Clique(3)),
        Pattern::C4 => {
            let mut twice = 0u64;
            for u in 0..n {
                for v in (u + 1)..n {
                    let c = common(g.row_words(u), g.row_words(v));
                    twice += c * c.saturating_sub(1) / 2;
                }
            }
            Ok(twice / 2)
        }
        Pattern::Clique(r) => {
            if !(1..=6).contains(&r) {
                return Err(Error::InvalidParameters(format!(
                    "clique pattern size {r} outside 1..=6"
                )));
            }
            match r {
                1 => Ok(n as u64),
                2 => Ok(g.size() as u64),
                _ => {
                    let words = g.row_words(0).len();
                    let mut total = 0u64;
                    for v in 0..n {
                        // candidates: neighbours of v with larger index
                        let mut cand = g.row_words(v).to_vec();
                        mask_above(&mut cand, v);
                        total += count_cliques_in(g, &cand, r - 1, words);
                    }
                    Ok(total)
                }
            }
        }
    }
}

fn mask_above(set: &mut [u64], v: usize) {
    for (w, word) in set.iter_mut().enumerate() {
        let lo = w * 64;
        if lo + 64 <= v + 1 {
            *word = 0;
        } else if lo <= v {
            let keep = v + 1 - lo;
            *word &= if keep == 64 { 0 } else { !0u64 << keep };
        }
    }
}

fn count_cliques_in(g: &Graph, cand: &[u64], need: usize, words: usize) -> u64 {
    if need == 1 {
        return cand.iter().map(|w| w.count_ones() as u64).sum();
    }
    let mut total = 0;
    for (wi, &word) in cand.iter().enumerate() {
        for b in BitIter(word) {
            let v = wi * 64 + b;
            let mut next: Vec<u64> = cand
                .iter()
                .zip(g.row_words(v))
                .map(|(c, r)| c & r)
                .collect();
            mask_above(&mut next, v);
            if next.iter().any(|&w| w != 0) {
                total += count_cliques_in(g, &next, need - 1, words);
            }
        }
    }
    total
}
