//! Canonical labelling for graphs of order at most 64.
//!
//! Search tree over individualisation and equitable refinement of an ordered
//! partition (initially split by degree). The canonical form is the
//! lexicographically smallest adjacency row sequence over the leaves. Twins
//! (vertices with equal neighbourhoods apart from each other) are tried once
//! per node since swapping them is an automorphism fixing everything else.

use super::{BitIter, Graph};
use crate::error::Result;

/// Adjacency rows of a graph under its canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    pub rows: Vec<u64>,
}

impl Certificate {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows64(&self.rows).expect("certificate rows form a simple graph")
    }
}

/// Canonical form plus the labelling that produces it.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub certificate: Certificate,
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    twin_rep: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    scratch: Vec<(u32, u64)>,
}

fn refine(rows: &[u64], cells: &mut Vec<u64>, scratch: &mut Vec<(u32, u64)>) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell.count_ones() < 2 {
                    c += 1;
                    continue;
                }
                scratch.clear();
                for v in BitIter(cell) {
                    let k = (rows[v] & splitter).count_ones();
                    match scratch.iter_mut().find(|(cnt, _)| *cnt == k) {
                        Some(slot) => slot.1 |= 1u64 << v,
                        None => scratch.push((k, 1u64 << v)),
                    }
                }
                if scratch.len() == 1 {
                    c += 1;
                    continue;
                }
                scratch.sort_unstable_by_key(|&(k, _)| k);
                cells[c] = scratch[0].1;
                for (off, &(_, mask)) in scratch.iter().enumerate().skip(1) {
                    cells.insert(c + off, mask);
                }
                c += scratch.len();
                changed = true;
            }
            w += 1;
        }
        if !changed {
            break;
        }
    }
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64]) {
        let n = self.rows.len();
        let mut lab = vec![0usize; n];
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        for (i, &v) in order.iter().enumerate() {
            lab[v] = i;
        }
        let mut cert = Vec::with_capacity(n);
        for &v in &order {
            let mut row = 0u64;
            for u in BitIter(self.rows[v]) {
                row |= 1u64 << lab[u];
            }
            cert.push(row);
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => cert < *b,
        };
        if better {
            self.best = Some((cert, lab));
        }
    }

    fn descend(&mut self, cells: Vec<u64>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[t];
        let mut tried_reps: Vec<usize> = Vec::new();
        for v in BitIter(cell) {
            let rep = self.twin_rep[v];
            if tried_reps.contains(&rep) {
                continue;
            }
            tried_reps.push(rep);
            let mut child = cells.clone();
            child[t] = cell & !(1u64 << v);
            child.insert(t, 1u64 << v);
            let mut scratch = std::mem::take(&mut self.scratch);
            refine(self.rows, &mut child, &mut scratch);
            self.scratch = scratch;
            self.descend(child);
        }
    }
}

fn twin_representatives(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if rep[v] != v {
            continue;
        }
        for u in (v + 1)..n {
            if rep[u] == u && rows[u] & !(1u64 << v) == rows[v] & !(1u64 << u) {
                rep[u] = v;
            }
        }
    }
    rep
}

/// Canonical labelling of `g`; isomorphic graphs get equal certificates.
pub fn canonical(g: &Graph) -> Result<Canonical> {
    g.require_bitset()?;
    Ok(canonical_rows(g.rows64()))
}

pub(crate) fn canonical_rows(rows: &[u64]) -> Canonical {
    let n = rows.len();
    let mut search = Search {
        rows,
        twin_rep: twin_representatives(rows),
        best: None,
        scratch: Vec::with_capacity(n),
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cells = vec![full];
    let mut scratch = Vec::with_capacity(n);
    refine(rows, &mut cells, &mut scratch);
    search.descend(cells);
    let (rows, labeling) = search.best.expect("search tree has at least one leaf");
    Canonical {
        certificate: Certificate { rows },
        labeling,
    }
}

/// Certificate only.
pub fn certificate(g: &Graph) -> Result<Certificate> {
    canonical(g).map(|c| c.certificate)
}

/// `g` relabelled canonically.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    certificate(g).map(|c| c.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(certificate(g)? == certificate(h)?)
}
