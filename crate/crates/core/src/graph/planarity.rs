//! Left-right planarity test (decision only, no embedding).
//!
//! DFS orientation computes lowpoints and nesting depths; a second DFS
//! visits children in nesting order and maintains a stack of conflict
//! pairs of return-edge intervals, failing when an interval cannot be
//! placed on either side.

use super::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr {
    n: usize,
    adj: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    oriented: Vec<bool>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    out: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    refs: Vec<usize>,
}

impl Lr {
    fn new(g: &Graph) -> Lr {
        let n = g.order();
        Lr {
            n,
            adj: (0..n).map(|v| g.neighbors(v).collect()).collect(),
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            oriented: vec![false; n * n],
            lowpt: vec![0; n * n],
            lowpt2: vec![0; n * n],
            nesting: vec![0; n * n],
            out: vec![Vec::new(); n],
            stack: Vec::new(),
            stack_bottom: vec![0; n * n],
            lowpt_edge: vec![NONE; n * n],
            refs: vec![NONE; n * n],
        }
    }

    #[inline]
    fn edge(&self, v: usize, w: usize) -> usize {
        v * self.n + w
    }

    #[inline]
    fn head(&self, e: usize) -> usize {
        e % self.n
    }

    #[inline]
    fn tail(&self, e: usize) -> usize {
        e / self.n
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.oriented[self.edge(v, w)] || self.oriented[self.edge(w, v)] {
                continue;
            }
            let vw = self.edge(v, w);
            self.oriented[vw] = true;
            self.out[v].push(w);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                self.nesting[vw] += 1;
            }
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            self.lowpt[p.right.low]
        } else if p.right.is_empty() {
            self.lowpt[p.left.low]
        } else {
            self.lowpt[p.left.low].min(self.lowpt[p.right.low])
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let children = self.out[v].clone();
        for (idx, &w) in children.iter().enumerate() {
            let ei = self.edge(v, w);
            self.stack_bottom[ei] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    if e != NONE {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.refs[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail(e);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head(p.left.high) == u {
                p.left.high = self.refs[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head(p.right.high) == u {
                p.right.high = self.refs[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
    }
}

/// Whether `g` has a planar embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    let mut lr = Lr::new(g);
    let mut roots = Vec::new();
    for v in 0..n {
        if lr.height[v] == NONE {
            lr.height[v] = 0;
            roots.push(v);
            lr.orient(v);
        }
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut lr.out[v]);
        out.sort_by_key(|&w| lr.nesting[lr.edge(v, w)]);
        lr.out[v] = out;
    }
    roots.into_iter().all(|r| lr.test(r))
}

impl Graph {
    pub fn is_planar(&self) -> bool {
        is_planar(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::certificate;
    use crate::graph::families::{generate, FamilySpec};
    use std::collections::HashMap;

    fn fam(s: FamilySpec) -> Graph {
        generate(&s).unwrap()
    }

    fn edges(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, es).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&fam(FamilySpec::Complete(5))));
        assert!(!is_planar(&fam(FamilySpec::CompleteBipartite(3, 3))));
        assert!(!is_planar(&fam(FamilySpec::Petersen)));
        assert!(is_planar(&fam(FamilySpec::Complete(4))));
        assert!(is_planar(&fam(FamilySpec::CompleteBipartite(2, 7))));
    }

    #[test]
    fn maximal_planar_examples() {
        for n in 4..30 {
            let g = fam(FamilySpec::PlanarMax(n));
            assert_eq!(g.size(), 3 * n - 6);
            assert!(is_planar(&g), "K2 v P{}", n - 2);
            // one more edge breaks the Euler bound
            let extra = g.with_edge(2, n - 1);
            if extra.size() > g.size() {
                assert!(!is_planar(&extra));
            }
        }
        assert!(is_planar(&fam(FamilySpec::Hypercube(3))));
        assert!(!is_planar(&fam(FamilySpec::Hypercube(4))));
        assert!(is_planar(&fam(FamilySpec::Wheel(12))));
        assert!(!is_planar(&fam(FamilySpec::Heawood)));
    }

    #[test]
    fn subdivided_obstructions() {
        // K3,3 with one edge subdivided, plus pendant noise
        let g = edges(
            9,
            &[
                (0, 3), (0, 4), (0, 6), (6, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                (7, 8), (8, 0),
            ],
        );
        assert!(!is_planar(&g));
        // sparse, no K5 or K3,3 as a plain subgraph
        let g = edges(
            8,
            &[(1, 5), (1, 6), (1, 7), (2, 6), (2, 3), (3, 5), (3, 7), (4, 5), (4, 6), (4, 7)],
        );
        assert!(!is_planar(&g));
        // disconnected: triangle plus K5
        let mut es = vec![(5, 6), (6, 7), (7, 5)];
        for u in 0..5 {
            for v in (u + 1)..5 {
                es.push((u, v));
            }
        }
        assert!(!is_planar(&edges(8, &es)));
        let grid = edges(
            9,
            &[
                (0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8), (0, 3), (3, 6), (1, 4), (4, 7),
                (2, 5), (5, 8),
            ],
        );
        assert!(is_planar(&grid));
    }

    /// Planarity by searching for a K5 or K3,3 minor over edge deletions and
    /// contractions, memoised on canonical form.
    struct MinorOracle {
        memo: HashMap<Vec<u64>, bool>,
    }

    impl MinorOracle {
        fn contains_obstruction(g: &Graph) -> bool {
            let n = g.order();
            let rows = g.rows64();
            for s in 0u64..(1 << n) {
                match s.count_ones() {
                    5 => {
                        if crate::graph::BitIter(s).all(|v| (rows[v] & s).count_ones() == 4) {
                            return true;
                        }
                    }
                    6 => {
                        for a in 0u64..(1 << n) {
                            if a & s == a && a.count_ones() == 3 && a.trailing_zeros() == s.trailing_zeros() {
                                let b = s & !a;
                                if crate::graph::BitIter(a).all(|v| rows[v] & b == b) {
                                    return true;
                                }
                            }
                        }
                    }
                    _ => {}
                }
            }
            false
        }

        fn contract(g: &Graph, u: usize, v: usize) -> Graph {
            let n = g.order();
            let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
            let idx = |x: usize| keep.iter().position(|&y| y == x).unwrap();
            let mut h = Graph::empty(n - 1);
            for (a, b) in g.edges() {
                let a2 = if a == v { u } else { a };
                let b2 = if b == v { u } else { b };
                if a2 != b2 {
                    h.add_edge_mut(idx(a2), idx(b2));
                }
            }
            h
        }

        fn planar(&mut self, g: &Graph) -> bool {
            if g.order() < 5 || g.size() < 9 {
                return true;
            }
            let key = certificate(g).unwrap().rows;
            if let Some(&p) = self.memo.get(&key) {
                return p;
            }
            let mut result = !Self::contains_obstruction(g);
            if result {
                for (u, v) in g.edges() {
                    if !self.planar(&g.without_edge(u, v)) || !self.planar(&Self::contract(g, u, v)) {
                        result = false;
                        break;
                    }
                }
            }
            self.memo.insert(key, result);
            result
        }
    }

    #[test]
    fn agrees_with_minor_oracle_on_small_connected_graphs() {
        let mut oracle = MinorOracle {
            memo: HashMap::new(),
        };
        let mut checked = 0;
        for n in 1..=7usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let mut seen = std::collections::HashSet::new();
            for mask in 0u64..(1 << pairs.len()) {
                let es: Vec<(usize, usize)> = crate::graph::BitIter(mask).map(|i| pairs[i]).collect();
                let g = edges(n, &es);
                if !g.is_connected() {
                    continue;
                }
                let c = certificate(&g).unwrap();
                if !seen.insert(c) {
                    continue;
                }
                checked += 1;
                assert_eq!(is_planar(&g), oracle.planar(&g), "{g:?}");
            }
        }
        // connected graphs on 1..=7 vertices
        assert_eq!(checked, 1 + 1 + 2 + 6 + 21 + 112 + 853);
    }
}
