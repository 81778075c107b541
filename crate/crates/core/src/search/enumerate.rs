//! Isomorphism-class enumeration for small orders.
//!
//! Level n is built from level n-1 by attaching a new vertex of minimum
//! degree in every admissible way; deleting a minimum-degree vertex of any
//! graph leaves a graph of the previous level, so every class is reached.
//! Duplicates are removed by canonical form.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_rows, Certificate};
use crate::graph::Graph;

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 9;

/// Canonical certificates of every graph on `n` vertices, sorted.
fn level(prev: &[Certificate], n: usize) -> Vec<Certificate> {
    let old = n - 1;
    let mut seen: HashSet<Certificate> = HashSet::new();
    let mut rows = vec![0u64; n];
    for parent in prev {
        let degs: Vec<u32> = parent.rows.iter().map(|r| r.count_ones()).collect();
        let min_deg = degs.iter().copied().min().unwrap_or(0);
        for s in 0u64..(1u64 << old) {
            let k = s.count_ones();
            // the new vertex must have minimum degree in the child
            if k > min_deg + 1 {
                continue;
            }
            if (0..old).any(|u| degs[u] + (((s >> u) & 1) as u32) < k) {
                continue;
            }
            for u in 0..old {
                rows[u] = parent.rows[u] | (((s >> u) & 1) << old);
            }
            rows[old] = s;
            let c = canonical_rows(&rows).certificate;
            seen.insert(c);
        }
    }
    let mut out: Vec<Certificate> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Canonical representatives of every graph on `n` vertices, in certificate
/// order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(certificates(n)?.iter().map(|c| c.to_graph()).collect())
}

/// Canonical representatives of the connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(|g| g.is_connected()).collect())
}

pub(crate) fn certificates(n: usize) -> Result<Vec<Certificate>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            limit: MAX_ENUM_ORDER,
        });
    }
    let mut cur = vec![Certificate { rows: vec![0] }];
    for k in 2..=n {
        cur = level(&cur, k);
    }
    Ok(cur)
}

/// Every level from 1 through `n`, sharing the intermediate work.
pub(crate) fn certificate_levels(n: usize) -> Result<Vec<Vec<Certificate>>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            limit: MAX_ENUM_ORDER,
        });
    }
    let mut levels = vec![vec![Certificate { rows: vec![0] }]];
    for k in 2..=n {
        let next = level(levels.last().expect("non-empty"), k);
        levels.push(next);
    }
    Ok(levels)
}
