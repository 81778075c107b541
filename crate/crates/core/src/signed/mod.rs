//! Signed graphs, switching, signed spectra, and minimisation of the spectral
//! radius over all signatures of a graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectra::{symmetric_eigenvalues, MatrixKind, Spectrum, DEFAULT_TOL};

/// Largest cyclomatic number `m - n + 1` accepted by [`min_signature_radius`].
pub const MAX_COTREE_EDGES: usize = 24;

/// A graph with a sign on every edge. `signature[i]` is the sign of the
/// `i`-th edge of `base.edges()` (lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    base: Graph,
    edges: Vec<(usize, usize)>,
    signature: Vec<i8>,
}

impl SignedGraph {
    pub fn new(base: Graph, signature: Vec<i8>) -> Result<SignedGraph> {
        let edges = base.edges();
        if signature.len() != edges.len() {
            return Err(Error::InvalidParameters(format!(
                "{} signs for {} edges",
                signature.len(),
                edges.len()
            )));
        }
        if signature.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameters("signs must be +1 or -1".into()));
        }
        Ok(SignedGraph {
            base,
            edges,
            signature,
        })
    }

    pub fn all_positive(base: Graph) -> SignedGraph {
        let m = base.size();
        SignedGraph::new(base, vec![1; m]).expect("one sign per edge")
    }

    /// Signature negative exactly on the listed edges (either orientation).
    pub fn with_negative_edges(base: Graph, negative: &[(usize, usize)]) -> Result<SignedGraph> {
        let mut sg = SignedGraph::all_positive(base);
        for &(u, v) in negative {
            let key = (u.min(v), u.max(v));
            let i = sg
                .edges
                .binary_search(&key)
                .map_err(|_| Error::InvalidParameters(format!("{key:?} is not an edge")))?;
            sg.signature[i] = -1;
        }
        Ok(sg)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.signature)
            .filter(|(_, &s)| s < 0)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Dense signed adjacency matrix, row-major.
    pub fn matrix(&self) -> Vec<f64> {
        let n = self.base.order();
        let mut a = vec![0.0; n * n];
        for (&(u, v), &s) in self.edges.iter().zip(&self.signature) {
            a[u * n + v] = s as f64;
            a[v * n + u] = s as f64;
        }
        a
    }

    /// Flips the sign of every edge with exactly one end in `u`.
    pub fn switch(&self, u: VertexSet) -> SignedGraph {
        let mut out = self.clone();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if u.contains(a) != u.contains(b) {
                out.signature[i] = -out.signature[i];
            }
        }
        out
    }

    /// graph6 of the base, `|`, then one character per edge, `1` for negative.
    pub fn to_line(&self) -> String {
        let bits: String = self
            .signature
            .iter()
            .map(|&s| if s < 0 { '1' } else { '0' })
            .collect();
        format!("{}|{bits}", self.base.to_graph6())
    }

    pub fn from_line(line: &str) -> Result<SignedGraph> {
        let (g6, bits) = line
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::MalformedInput("missing `|` in signed graph line".into()))?;
        let base = Graph::from_graph6(g6)?;
        let signature = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(1),
                '1' => Ok(-1),
                _ => Err(Error::MalformedInput(format!("bad sign character `{c}`"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        SignedGraph::new(base, signature).map_err(|e| Error::MalformedInput(e.to_string()))
    }
}

impl Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_line())
    }
}

/// Eigenvalues of the signed adjacency matrix, non-increasing.
pub fn signed_spectrum(sg: &SignedGraph) -> Result<Spectrum> {
    let values = symmetric_eigenvalues(&sg.matrix(), sg.base.order())?;
    Ok(Spectrum {
        values,
        kind: MatrixKind::SignedAdjacency,
        tol: DEFAULT_TOL,
    })
}

/// `max(|lambda_1|, |lambda_n|)`.
pub fn signed_spectral_radius(sg: &SignedGraph) -> Result<f64> {
    let s = signed_spectrum(sg)?;
    Ok(s.largest().abs().max(s.smallest().abs()))
}

/// Minimisers over all signatures of a graph, one per switching class.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureMinimum {
    /// Smallest spectral radius `max(|lambda_1|, |lambda_n|)`.
    pub rho_min: f64,
    pub rho_witness: SignedGraph,
    /// Smallest largest eigenvalue.
    pub lambda1_min: f64,
    pub lambda1_witness: SignedGraph,
    /// Number of switching classes examined, `2^(m-n+1)`.
    pub classes: u64,
}

/// Edge indices of a BFS spanning tree from vertex 0 and of its complement.
fn tree_split(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let edges = g.edges();
    let n = g.order();
    let mut seen = vec![false; n];
    let mut in_tree = vec![false; edges.len()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                let i = edges.binary_search(&(u.min(v), u.max(v))).unwrap();
                in_tree[i] = true;
                queue.push_back(v);
            }
        }
    }
    let (tree, cotree): (Vec<usize>, Vec<usize>) = (0..edges.len()).partition(|&i| in_tree[i]);
    (tree, cotree)
}

/// Enumerates one signature per switching class (spanning tree positive,
/// every sign pattern on the co-tree edges) and returns the minimum spectral
/// radius and the minimum largest eigenvalue. Ties go to the smallest pattern,
/// reading co-tree edge `j` as bit `j`, so the result does not depend on the
/// thread count.
pub fn min_signature_radius(g: &Graph, budget: Budget) -> Result<SignatureMinimum> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (_, cotree) = tree_split(g);
    let c = cotree.len();
    let classes = 1u64 << c.min(63);
    if c > MAX_COTREE_EDGES || classes > budget.nodes {
        return Err(Error::BudgetExceeded {
            context: "signature enumeration",
            budget: budget.nodes,
        });
    }
    let m = g.size();
    let signature_of = |pattern: u64| -> Vec<i8> {
        let mut sig = vec![1i8; m];
        for (j, &i) in cotree.iter().enumerate() {
            if (pattern >> j) & 1 == 1 {
                sig[i] = -1;
            }
        }
        sig
    };
    type Best = ((f64, u64), (f64, u64));
    let pick = |a: (f64, u64), b: (f64, u64)| {
        if b.0.total_cmp(&a.0).then(b.1.cmp(&a.1)).is_lt() {
            b
        } else {
            a
        }
    };
    let best: Best = (0..classes)
        .into_par_iter()
        .map(|p| -> Result<Best> {
            let sg = SignedGraph::new(g.clone(), signature_of(p))?;
            let s = signed_spectrum(&sg)?;
            let rho = s.largest().abs().max(s.smallest().abs());
            Ok(((rho, p), (s.largest(), p)))
        })
        .try_reduce(
            || ((f64::INFINITY, u64::MAX), (f64::INFINITY, u64::MAX)),
            |a, b| Ok((pick(a.0, b.0), pick(a.1, b.1))),
        )?;
    let ((rho_min, rp), (lambda1_min, lp)) = best;
    Ok(SignatureMinimum {
        rho_min,
        rho_witness: SignedGraph::new(g.clone(), signature_of(rp))?,
        lambda1_min,
        lambda1_witness: SignedGraph::new(g.clone(), signature_of(lp))?,
        classes,
    })
}

/// `2 sqrt(d - 1) - rho` for the minimising signature: the Bilu–Linial slack
/// when `d` is the common degree, Gregory's when `d = Delta`.
pub fn ramanujan_slack(rho: f64, d: f64) -> f64 {
    2.0 * (d - 1.0).max(0.0).sqrt() - rho
}

/// `2 sqrt(lambda_1(G) - 1) - rho_min`, a diagnostic comparing the best
/// signature against the unsigned spectral radius rather than the degree.
pub fn index_ramanujan_slack(g: &Graph, rho_min: f64) -> Result<f64> {
    let lambda = crate::spectra::spectral_radius(g)?;
    Ok(ramanujan_slack(rho_min, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{generate, FamilySpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        loop {
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(p) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
            if g.is_connected() {
                return g;
            }
        }
    }

    fn random_signature(rng: &mut ChaCha8Rng, g: &Graph) -> SignedGraph {
        let sig = (0..g.size()).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        SignedGraph::new(g.clone(), sig).unwrap()
    }

    #[test]
    fn switching_basics() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let sg = SignedGraph::all_positive(c4.clone());
        assert_eq!(sg.switch(VertexSet::EMPTY), sg);
        assert_eq!(sg.switch(VertexSet::full(4)), sg);
        let one = sg.switch(VertexSet::singleton(0));
        assert_eq!(one.negative_edges(), vec![(0, 1), (0, 3)]);
        assert_eq!(one.signature().iter().map(|&s| s as i32).product::<i32>(), 1);
        let a = signed_spectrum(&sg).unwrap().values;
        let b = signed_spectrum(&one).unwrap().values;
        assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-12));
        let u = VertexSet(0b101);
        assert_eq!(one.switch(u).switch(u), one);
    }

    #[test]
    fn unbalanced_square() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let sg = SignedGraph::with_negative_edges(c4.clone(), &[(3, 0)]).unwrap();
        let s = signed_spectrum(&sg).unwrap();
        let r = 2f64.sqrt();
        for (x, want) in s.values.iter().zip([r, r, -r, -r]) {
            assert!((x - want).abs() < 1e-12);
        }
        let best = min_signature_radius(&c4, Budget::default()).unwrap();
        assert_eq!(best.classes, 2);
        assert!((best.rho_min - r).abs() < 1e-12);
        assert_eq!(best.rho_witness.negative_edges().len(), 1);
    }

    #[test]
    fn trees_have_one_class() {
        let t = generate(&FamilySpec::DoubleComet { k: 2, l: 4 }).unwrap();
        let best = min_signature_radius(&t, Budget::default()).unwrap();
        assert_eq!(best.classes, 1);
        let lambda = crate::spectra::spectral_radius(&t).unwrap();
        assert!((best.rho_min - lambda).abs() < 1e-12);
    }

    #[test]
    fn petersen_meets_the_bilu_linial_bound() {
        let p = generate(&FamilySpec::Petersen).unwrap();
        let best = min_signature_radius(&p, Budget::default()).unwrap();
        assert_eq!(best.classes, 64);
        assert!(ramanujan_slack(best.rho_min, 3.0) >= -1e-9);
        assert!(best.lambda1_min <= best.rho_min + 1e-12);
        let check = signed_spectral_radius(&best.rho_witness).unwrap();
        assert_eq!(check, best.rho_min);
    }

    #[test]
    fn signed_radius_is_at_most_unsigned() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let n = rng.gen_range(2..=8);
            let g = random_connected(&mut rng, n, 0.5);
            let lambda = crate::spectra::spectral_radius(&g).unwrap();
            let sg = random_signature(&mut rng, &g);
            assert!(signed_spectral_radius(&sg).unwrap() <= lambda + 1e-9);
        }
    }

    #[test]
    fn switching_preserves_the_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..200 {
            let n = rng.gen_range(2..=12);
            let g = random_connected(&mut rng, n, 0.4);
            let sg = random_signature(&mut rng, &g);
            let u = VertexSet(rng.gen::<u64>() & VertexSet::full(n).0);
            let a = signed_spectrum(&sg).unwrap().values;
            let b = signed_spectrum(&sg.switch(u)).unwrap().values;
            assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-10));
        }
    }

    #[test]
    fn cotree_classes_cover_every_signature() {
        // distinct spectra over all 2^m signatures = distinct spectra over classes
        let key = |v: &[f64]| v.iter().map(|x| (x * 1e6).round() as i64).collect::<Vec<_>>();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..30 {
            let n = rng.gen_range(3..=6);
            let g = random_connected(&mut rng, n, 0.6);
            let m = g.size();
            if m > 12 {
                continue;
            }
            let mut all = std::collections::BTreeSet::new();
            for p in 0..(1u64 << m) {
                let sig = (0..m).map(|i| if (p >> i) & 1 == 1 { -1 } else { 1 }).collect();
                let sg = SignedGraph::new(g.clone(), sig).unwrap();
                all.insert(key(&signed_spectrum(&sg).unwrap().values));
            }
            let (_, cotree) = tree_split(&g);
            let mut classes = std::collections::BTreeSet::new();
            for p in 0..(1u64 << cotree.len()) {
                let mut sig = vec![1; m];
                for (j, &i) in cotree.iter().enumerate() {
                    if (p >> j) & 1 == 1 {
                        sig[i] = -1;
                    }
                }
                let sg = SignedGraph::new(g.clone(), sig).unwrap();
                classes.insert(key(&signed_spectrum(&sg).unwrap().values));
            }
            assert_eq!(all, classes);
        }
    }

    #[test]
    fn line_round_trip() {
        let p = generate(&FamilySpec::Petersen).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let sg = random_signature(&mut rng, &p);
        let line = sg.to_line();
        assert_eq!(line.split('|').nth(1).unwrap().len(), 15);
        assert_eq!(SignedGraph::from_line(&line).unwrap(), sg);
        assert!(SignedGraph::from_line("ICpdbY?")
            .is_err());
        assert!(SignedGraph::from_line("Bw|01").is_err());
        assert!(SignedGraph::from_line("Bw|0x1").is_err());
    }

    #[test]
    fn refuses_large_or_disconnected() {
        let k9 = generate(&FamilySpec::Complete(9)).unwrap();
        assert!(matches!(
            min_signature_radius(&k9, Budget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
        let e = generate(&FamilySpec::Empty(3)).unwrap();
        assert_eq!(min_signature_radius(&e, Budget::default()).unwrap_err(), Error::NotConnected);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(min_signature_radius(&c5, Budget::new(1)).is_err());
    }
}
