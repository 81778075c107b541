//! Simple undirected graphs stored as adjacency bit rows.
//!
//! Rows are packed 64 vertices per word, so graphs of order at most 64 have
//! a single `u64` per vertex and the bitset-based algorithms elsewhere in the
//! crate operate on [`VertexSet`] masks directly.

pub mod canon;
pub mod cycles;
pub mod families;
pub mod graph6;
pub mod planarity;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 512;
/// Largest order for algorithms that represent vertex subsets as `u64` masks.
pub const MAX_BITSET_ORDER: usize = 64;

/// A subset of the vertices of a host graph of order at most 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_BITSET_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Members as a sorted vector.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Serialised as the sorted list of member vertices.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Immutable simple undirected graph on vertices `0..n`, `1 <= n <= 512`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` is zero or exceeds [`MAX_ORDER`].
    pub fn empty(n: usize) -> Graph {
        assert!(
            (1..=MAX_ORDER).contains(&n),
            "graph order {n} outside 1..={MAX_ORDER}"
        );
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange { n, limit: MAX_ORDER });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("self-loop at {u}")));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    /// Graph of order at most 64 from neighbourhood masks. Rows must be symmetric and loop-free.
    pub fn from_rows64(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        if !(1..=MAX_BITSET_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange {
                n,
                limit: MAX_BITSET_ORDER,
            });
        }
        let mask = VertexSet::full(n).0;
        for (v, &r) in rows.iter().enumerate() {
            if r & !mask != 0 || (r >> v) & 1 == 1 {
                return Err(Error::MalformedInput(format!("bad row for vertex {v}")));
            }
            for u in BitIter(r) {
                if (rows[u] >> v) & 1 == 0 {
                    return Err(Error::MalformedInput("asymmetric rows".into()));
                }
            }
        }
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(Graph {
            n,
            words: 1,
            rows: rows.to_vec(),
            m,
        })
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
            self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
            self.m += 1;
        }
    }

    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.rows[u * self.words + v / 64] &= !(1u64 << (v % 64));
            self.rows[v * self.words + u / 64] &= !(1u64 << (u % 64));
            self.m -= 1;
        }
    }

    /// Copy of this graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge_mut(u, v);
        g
    }

    /// Copy of this graph with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge_mut(u, v);
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Neighbourhood mask of `v`; only valid for graphs of order at most 64.
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= MAX_BITSET_ORDER);
        self.rows[v]
    }

    /// All neighbourhood masks of a graph of order at most 64.
    pub fn rows64(&self) -> &[u64] {
        debug_assert!(self.n <= MAX_BITSET_ORDER);
        &self.rows
    }

    /// Neighbourhood of `v` as packed words, valid at any order.
    #[inline]
    pub(crate) fn row_words(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn require_bitset(&self) -> Result<()> {
        if self.n > MAX_BITSET_ORDER {
            Err(Error::OrderOutOfRange {
                n: self.n,
                limit: MAX_BITSET_ORDER,
            })
        } else {
            Ok(())
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v * self.words..(v + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        2.0 * self.m as f64 / self.n as f64
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in self.neighbors(u) {
                a[u * n + v] = 1.0;
            }
        }
        a
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    /// Join: disjoint union plus every edge between the two parts.
    /// Vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge_mut(u, self.n + v);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge_mut(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_mut(self.n + u, self.n + v);
        }
        g
    }

    /// Replaces vertex `v` by an independent set of `sizes[v]` copies, laid out
    /// in consecutive blocks; copies of adjacent vertices are adjacent.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "blow-up needs {} sizes, got {}",
                self.n,
                sizes.len()
            )));
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidParameters("blow-up sizes must be >= 1".into()));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                n: total,
                limit: MAX_ORDER,
            });
        }
        let mut start = Vec::with_capacity(self.n);
        let mut acc = 0;
        for &s in sizes {
            start.push(acc);
            acc += s;
        }
        let mut g = Graph::empty(total);
        for (u, v) in self.edges() {
            for a in 0..sizes[u] {
                for b in 0..sizes[v] {
                    g.add_edge_mut(start[u] + a, start[v] + b);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `s`, relabelled in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.require_bitset()?;
        let keep = s.to_vec();
        if keep.is_empty() || keep.iter().any(|&v| v >= self.n) {
            return Err(Error::InvalidParameters(
                "induced subgraph needs a non-empty subset of the host vertices".into(),
            ));
        }
        Ok(self.induced_by(&keep))
    }

    /// Subgraph induced by the listed vertices, vertex `keep[i]` becoming `i`.
    pub fn induced_by(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(i, j);
                }
            }
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_by(&keep)
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_mut(perm[u], perm[v]);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= MAX_BITSET_ORDER {
            let rows = &self.rows;
            let mut reach = 1u64;
            let mut frontier = 1u64;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= rows[v];
                }
                frontier = next & !reach;
                reach |= next;
            }
            reach == VertexSet::full(self.n).0
        } else {
            self.components().len() == 1
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// A proper 2-colouring (`false`/`true` per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n, self.m, self.to_graph6())
    }
}
