//! Largest adjacency eigenvalue of induced subgraphs `Q_d[U]` with `|U| = m`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::families::{generate, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::spectra::spectral_radius;

/// Dimensions searched exhaustively.
pub const EXACT_MAX_DIM: usize = 4;
/// Largest dimension accepted by the heuristic.
pub const HEURISTIC_MAX_DIM: usize = 6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypercubeSubset {
    pub d: usize,
    pub m: usize,
    pub lambda: f64,
    pub witness: VertexSet,
    /// Edges of Q_d leaving U.
    pub boundary: usize,
    /// True when the maximum is certified by exhaustion.
    pub exact: bool,
}

fn radius_of(q: &Graph, u: VertexSet) -> f64 {
    if u.len() < 2 {
        return 0.0;
    }
    spectral_radius(&q.induced(u).expect("bitset order")).expect("small dense matrix")
}

fn boundary(q: &Graph, u: VertexSet) -> usize {
    u.iter().map(|v| (q.row64(v) & !u.0).count_ones() as usize).sum()
}

/// Exact for `d <= 4`: translations act transitively, so U may be assumed to
/// contain vertex 0. For `d = 5, 6` a seeded swap local search starting from
/// initial binary segments and random sets.
pub fn hypercube_lambda(d: usize, m: usize) -> Result<HypercubeSubset> {
    if d == 0 || d > HEURISTIC_MAX_DIM {
        return Err(Error::InvalidParameters(format!("dimension {d} outside 1..={HEURISTIC_MAX_DIM}")));
    }
    let n = 1usize << d;
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!("subset size {m} outside 1..={n}")));
    }
    let q = generate(&FamilySpec::Hypercube(d))?;
    let (lambda, witness, exact) = if d <= EXACT_MAX_DIM {
        let mut best = (f64::NEG_INFINITY, VertexSet::EMPTY);
        // subsets of 1..n of size m-1, plus vertex 0, in lexicographic order
        let mut combo: Vec<usize> = (1..m).collect();
        loop {
            let mut u = VertexSet::singleton(0);
            for &v in &combo {
                u.insert(v);
            }
            let r = radius_of(&q, u);
            if r > best.0 + 1e-12 {
                best = (r, u);
            }
            if !next_combination(&mut combo, n - 1) {
                break;
            }
        }
        (best.0, best.1, true)
    } else {
        let (l, w) = local_search(&q, m);
        (l, w, false)
    };
    Ok(HypercubeSubset {
        d,
        m,
        lambda,
        witness,
        boundary: boundary(&q, witness),
        exact,
    })
}

/// Next combination of `k` values from `1..=top` in lexicographic order.
fn next_combination(c: &mut [usize], top: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < top - (k - 1 - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn local_search(q: &Graph, m: usize) -> (f64, VertexSet) {
    let n = q.order();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut starts = vec![VertexSet((0..m).fold(0u64, |s, v| s | 1 << v))];
    for _ in 0..16 {
        let mut u = VertexSet::EMPTY;
        while u.len() < m {
            u.insert(rng.gen_range(0..n));
        }
        starts.push(u);
    }
    let mut best = (f64::NEG_INFINITY, VertexSet::EMPTY);
    for mut u in starts {
        let mut value = radius_of(q, u);
        // steepest-ascent swaps until no swap improves
        loop {
            let mut step = None;
            for out in u.iter() {
                for inn in (0..n).filter(|&v| !u.contains(v)) {
                    let mut w = u;
                    w.remove(out);
                    w.insert(inn);
                    let r = radius_of(q, w);
                    if r > step.map_or(value, |(s, _)| s) + 1e-12 {
                        step = Some((r, w));
                    }
                }
            }
            match step {
                Some((r, w)) => {
                    value = r;
                    u = w;
                }
                None => break,
            }
        }
        if value > best.0 + 1e-12 {
            best = (value, u);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All m-subsets, no symmetry reduction.
    fn brute(d: usize, m: usize) -> f64 {
        let q = generate(&FamilySpec::Hypercube(d)).unwrap();
        let n = 1u64 << d;
        (0u64..(1 << n))
            .filter(|s| s.count_ones() as usize == m)
            .map(|s| radius_of(&q, VertexSet(s)))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn small_cases() {
        let r = hypercube_lambda(4, 8).unwrap();
        assert!((r.lambda - 3.0).abs() < 1e-9 && r.exact);
        let sub = generate(&FamilySpec::Hypercube(4)).unwrap().induced(r.witness).unwrap();
        assert!(sub.is_regular() && sub.max_degree() == 3);
        for d in 1..=5 {
            assert!((hypercube_lambda(d, 2).unwrap().lambda - 1.0).abs() < 1e-9);
        }
        assert!((hypercube_lambda(3, 4).unwrap().lambda - 2.0).abs() < 1e-9);
        assert_eq!(hypercube_lambda(3, 1).unwrap().lambda, 0.0);
        assert!(hypercube_lambda(7, 3).is_err());
        assert!(hypercube_lambda(3, 9).is_err());
    }

    #[test]
    fn matches_unreduced_enumeration() {
        for d in 1..=3 {
            for m in 1..=(1 << d) {
                let r = hypercube_lambda(d, m).unwrap();
                assert!((r.lambda - brute(d, m)).abs() < 1e-9, "d={d} m={m}");
            }
        }
    }

    #[test]
    fn boundary_bound_and_heuristic() {
        for d in 1..=4 {
            for m in 1..=(1 << d) {
                let r = hypercube_lambda(d, m).unwrap();
                assert!(r.boundary as f64 >= (d as f64 - r.lambda) * m as f64 - 1e-9);
                assert_eq!(r.witness.len(), m);
            }
        }
        let r = hypercube_lambda(5, 16).unwrap();
        assert!(!r.exact && (r.lambda - 4.0).abs() < 1e-9);
        assert!(r.boundary as f64 >= (5.0 - r.lambda) * 16.0 - 1e-9);
    }
}
