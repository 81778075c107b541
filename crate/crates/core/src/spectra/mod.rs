//! Adjacency, Laplacian and signless Laplacian spectra and the invariants
//! derived from them.

pub mod eigen;
pub mod exact;
pub mod hereditary;
pub mod perron;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use eigen::symmetric_eigenvalues;
pub use hereditary::{hereditary_density_bound, HereditaryDensity};
pub use perron::{principal_eigenvector, PrincipalEigenvector};

/// Default absolute tolerance for comparing eigenvalues.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    /// Adjacency with entries `sigma(uv)`; see the `signed` module.
    SignedAdjacency,
}

/// Eigenvalues sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub kind: MatrixKind,
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `i`-th largest eigenvalue, 1-based.
    pub fn nth(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("spectrum of a nonempty graph")
    }
}

/// Dense row-major matrix of the requested kind.
pub fn matrix(g: &Graph, kind: MatrixKind) -> Vec<f64> {
    let n = g.order();
    let mut a = g.adjacency_matrix();
    match kind {
        // without a signature every edge counts as positive
        MatrixKind::Adjacency | MatrixKind::SignedAdjacency => {}
        MatrixKind::Laplacian => {
            for x in a.iter_mut() {
                *x = -*x;
            }
            for v in 0..n {
                a[v * n + v] = g.degree(v) as f64;
            }
        }
        MatrixKind::SignlessLaplacian => {
            for v in 0..n {
                a[v * n + v] = g.degree(v) as f64;
            }
        }
    }
    a
}

pub fn eigenvalues(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    let values = symmetric_eigenvalues(&matrix(g, kind), g.order())?;
    Ok(Spectrum {
        values,
        kind,
        tol: DEFAULT_TOL,
    })
}

/// Largest adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g, MatrixKind::Adjacency)?.largest())
}

/// Adjacency-spectrum invariants.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub lambda: f64,
    /// `lambda_1 - lambda_2`; zero for a single vertex.
    pub spectral_gap: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
    pub energy: f64,
    pub hl_index: f64,
}

/// Sign of each adjacency eigenvalue (`values` sorted non-increasing),
/// with the zero count taken from the exact rank of `g`: the `n_zero`
/// eigenvalues of smallest magnitude are the zeros.
pub fn eigenvalue_signs(g: &Graph, values: &[f64]) -> Vec<i8> {
    let n_zero = exact::adjacency_nullity(g);
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].abs().total_cmp(&values[b].abs()).then(a.cmp(&b)));
    let mut signs: Vec<i8> = values.iter().map(|&x| if x > 0.0 { 1 } else { -1 }).collect();
    for &i in &idx[..n_zero] {
        debug_assert!(values[i].abs() < 1e-6, "rank disagrees with spectrum");
        signs[i] = 0;
    }
    signs
}

pub fn summary(g: &Graph) -> Result<SpectralSummary> {
    let spec = eigenvalues(g, MatrixKind::Adjacency)?;
    Ok(summary_from_spectrum(g, &spec.values))
}

/// [`summary`] for an adjacency spectrum already computed for `g`.
pub fn summary_from_spectrum(g: &Graph, values: &[f64]) -> SpectralSummary {
    let n = values.len();
    let signs = eigenvalue_signs(g, values);
    let mut s = SpectralSummary {
        lambda: values[0],
        spectral_gap: if n > 1 { values[0] - values[1] } else { 0.0 },
        s_plus: 0.0,
        s_minus: 0.0,
        n_plus: 0,
        n_zero: 0,
        n_minus: 0,
        energy: 0.0,
        hl_index: 0.0,
    };
    for (&x, &sign) in values.iter().zip(&signs) {
        match sign {
            1 => {
                s.n_plus += 1;
                s.s_plus += x * x;
                s.energy += x;
            }
            -1 => {
                s.n_minus += 1;
                s.s_minus += x * x;
                s.energy -= x;
            }
            _ => s.n_zero += 1,
        }
    }
    let (h, l) = ((n + 1) / 2, (n + 2) / 2);
    let at = |i: usize| if signs[i - 1] == 0 { 0.0 } else { values[i - 1].abs() };
    s.hl_index = at(h).max(at(l));
    s
}

/// Sum of the `k` largest Laplacian eigenvalues.
pub fn laplacian_partial_sum(g: &Graph, k: usize) -> Result<f64> {
    let n = g.order();
    if !(1..=n).contains(&k) {
        return Err(Error::InvalidParameters(format!("k = {k} outside 1..={n}")));
    }
    let spec = eigenvalues(g, MatrixKind::Laplacian)?;
    Ok(spec.values[..k].iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{generate, FamilySpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fam(s: FamilySpec) -> Graph {
        generate(&s).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..12 {
            let s = eigenvalues(&fam(FamilySpec::Complete(n)), MatrixKind::Adjacency).unwrap();
            assert!(close(s.largest(), (n - 1) as f64, 1e-12));
            assert!(s.values[1..].iter().all(|&x| close(x, -1.0, 1e-12)));
        }
    }

    #[test]
    fn c7_closed_form() {
        let s = eigenvalues(&fam(FamilySpec::Cycle(7)), MatrixKind::Adjacency).unwrap();
        let mut want: Vec<f64> = (0..7)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 7.0).cos())
            .collect();
        want.sort_by(|a, b| b.total_cmp(a));
        for (x, w) in s.values.iter().zip(&want) {
            assert!(close(*x, *w, 1e-12));
        }
        assert!(close(s.nth(2), 1.24698, 1e-5));
        assert!(close(s.nth(4), -0.44504, 1e-5));
        assert!(close(s.nth(6), -1.80194, 1e-5));
    }

    #[test]
    fn complete_bipartite_spectrum() {
        let (a, b) = (5usize, 2usize);
        let s = eigenvalues(&fam(FamilySpec::CompleteBipartite(a, b)), MatrixKind::Adjacency).unwrap();
        let r = ((a * b) as f64).sqrt();
        assert!(close(s.largest(), r, 1e-12));
        assert!(close(s.smallest(), -r, 1e-12));
        assert!(s.values[1..6].iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn summaries_of_named_graphs() {
        let p = summary(&fam(FamilySpec::Petersen)).unwrap();
        assert!(close(p.s_plus, 14.0, 1e-9) && close(p.s_minus, 16.0, 1e-9));
        assert!(close(p.energy, 16.0, 1e-9));
        assert_eq!((p.n_plus, p.n_zero, p.n_minus), (6, 0, 4));
        let star = summary(&fam(FamilySpec::Star(5))).unwrap();
        assert!(close(star.s_plus, 4.0, 1e-9) && close(star.s_minus, 4.0, 1e-9));
        assert!(close(star.energy, 4.0, 1e-9) && close(star.lambda, 2.0, 1e-12));
        assert_eq!((star.n_plus, star.n_zero, star.n_minus), (1, 3, 1));
        let h = summary(&fam(FamilySpec::Heawood)).unwrap();
        assert!(close(h.hl_index, 2f64.sqrt(), 1e-9));
        let k1 = summary(&Graph::empty(1)).unwrap();
        assert_eq!((k1.n_zero, k1.spectral_gap, k1.hl_index), (1, 0.0, 0.0));
    }

    #[test]
    fn laplacian_partial_sums() {
        let k4 = fam(FamilySpec::Complete(4));
        assert!(close(laplacian_partial_sum(&k4, 2).unwrap(), 8.0, 1e-10));
        for n in 2..10 {
            let kn = fam(FamilySpec::Complete(n));
            let s = laplacian_partial_sum(&kn, n - 1).unwrap();
            assert!(close(s, (n * (n - 1)) as f64, 1e-9));
        }
        let g = fam(FamilySpec::Petersen);
        assert!(close(laplacian_partial_sum(&g, 10).unwrap(), 30.0, 1e-9));
        assert!(laplacian_partial_sum(&g, 0).is_err());
        assert!(laplacian_partial_sum(&g, 11).is_err());
    }

    #[test]
    fn laplacian_has_zero_and_signless_is_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let n = rng.gen_range(1..25);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
            let l = eigenvalues(&g, MatrixKind::Laplacian).unwrap();
            assert!(l.smallest().abs() < 1e-9);
            let q = eigenvalues(&g, MatrixKind::SignlessLaplacian).unwrap();
            assert!(q.smallest() > -1e-9);
            let sum: f64 = q.values.iter().sum();
            assert!(close(sum, 2.0 * g.size() as f64, 1e-8));
        }
    }

    /// Exact characteristic polynomial and root isolation for small graphs.
    mod charpoly {
        use super::super::*;

        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }

        /// Integer coefficients, low to high.
        type Poly = Vec<i128>;

        fn trim(mut p: Poly) -> Poly {
            while p.len() > 1 && *p.last().unwrap() == 0 {
                p.pop();
            }
            p
        }

        fn is_zero(p: &Poly) -> bool {
            p.len() == 1 && p[0] == 0
        }

        /// Divides out the content and makes the leading coefficient positive.
        fn primitive(p: Poly) -> Poly {
            let c = p.iter().fold(0, |acc, &x| gcd(acc, x));
            if c == 0 {
                return vec![0];
            }
            let s = if *p.last().unwrap() < 0 { -c } else { c };
            p.into_iter().map(|x| x / s).collect()
        }

        fn derivative(p: &Poly) -> Poly {
            if p.len() == 1 {
                return vec![0];
            }
            (1..p.len()).map(|i| p[i] * i as i128).collect()
        }

        fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
            let mut r = a.clone();
            let db = b.len() - 1;
            let lb = b[db];
            while r.len() > db && !is_zero(&r) {
                let k = r.len() - 1 - db;
                let lr = *r.last().unwrap();
                for x in r.iter_mut() {
                    *x *= lb;
                }
                for j in 0..=db {
                    r[k + j] -= lr * b[j];
                }
                r = primitive(trim(r));
            }
            r
        }

        fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
            let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
            while !is_zero(&b) {
                let r = pseudo_rem(&a, &b);
                a = b;
                b = if is_zero(&r) { r } else { primitive(r) };
            }
            a
        }

        /// Exact quotient by a monic divisor.
        fn div_monic(a: &Poly, b: &Poly) -> Poly {
            let db = b.len() - 1;
            assert_eq!(b[db], 1, "divisor must be monic");
            if a.len() <= db {
                return vec![0];
            }
            let mut r = a.clone();
            let mut q = vec![0; r.len() - db];
            for i in (0..q.len()).rev() {
                let c = r[i + db];
                q[i] = c;
                for j in 0..=db {
                    r[i + j] -= c * b[j];
                }
            }
            assert!(r.iter().all(|&x| x == 0), "inexact polynomial division");
            trim(q)
        }

        /// det(xI - A) by Faddeev-LeVerrier.
        pub fn char_poly(g: &Graph) -> Vec<i128> {
            let n = g.order();
            let a: Vec<i128> = (0..n * n)
                .map(|k| g.has_edge(k / n, k % n) as i128)
                .collect();
            let matmul = |x: &[i128], y: &[i128]| {
                let mut z = vec![0i128; n * n];
                for i in 0..n {
                    for k in 0..n {
                        if x[i * n + k] != 0 {
                            for j in 0..n {
                                z[i * n + j] += x[i * n + k] * y[k * n + j];
                            }
                        }
                    }
                }
                z
            };
            let mut c = vec![0i128; n + 1];
            c[n] = 1;
            let mut m = vec![0i128; n * n];
            for k in 1..=n {
                let mut am = matmul(&a, &m);
                for i in 0..n {
                    am[i * n + i] += c[n - k + 1];
                }
                m = am;
                let am = matmul(&a, &m);
                let tr: i128 = (0..n).map(|i| am[i * n + i]).sum();
                assert_eq!(tr % k as i128, 0);
                c[n - k] = -tr / k as i128;
            }
            c
        }

        fn eval(p: &Poly, x: f64) -> f64 {
            p.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
        }

        /// All roots with multiplicity via Yun square-free factorisation, each
        /// square-free factor solved by grid sign changes plus bisection.
        pub fn roots(c: &[i128]) -> Vec<f64> {
            let p: Poly = c.to_vec();
            let mut out = Vec::new();
            let mut a = poly_gcd(&p, &derivative(&p));
            let mut b = div_monic(&p, &a);
            let mut mult = 1;
            while b.len() > 1 {
                let d = poly_gcd(&a, &b);
                let factor = div_monic(&b, &d);
                if factor.len() > 1 {
                    let bound = (c.len() + 1) as f64;
                    let steps = 20_000;
                    let h = 2.0 * bound / steps as f64;
                    let mut found = 0;
                    let mut x0 = -bound;
                    let mut f0 = eval(&factor, x0);
                    for s in 1..=steps {
                        let x1 = -bound + s as f64 * h;
                        let f1 = eval(&factor, x1);
                        if f1 == 0.0 || f0 * f1 < 0.0 {
                            let (mut lo, mut hi) = (x0, x1);
                            if f1 != 0.0 {
                                for _ in 0..200 {
                                    let mid = 0.5 * (lo + hi);
                                    if eval(&factor, mid) * f0 <= 0.0 {
                                        hi = mid;
                                    } else {
                                        lo = mid;
                                    }
                                }
                            } else {
                                lo = x1;
                                hi = x1;
                            }
                            for _ in 0..mult {
                                out.push(0.5 * (lo + hi));
                            }
                            found += 1;
                        }
                        x0 = x1;
                        f0 = if f1 == 0.0 { eval(&factor, x1 + h * 0.5) } else { f1 };
                    }
                    assert_eq!(found, factor.len() - 1, "root isolation missed a root");
                }
                a = div_monic(&a, &d);
                b = d;
                mult += 1;
            }
            out.sort_by(|x, y| y.total_cmp(x));
            out
        }
    }

    #[test]
    fn agrees_with_characteristic_polynomial_roots() {
        // every labelled graph on up to 5 vertices, plus random 6-vertex ones
        let mut graphs = Vec::new();
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let es: Vec<_> = (0..pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect();
                graphs.push(Graph::from_edges(n, &es).unwrap());
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..300 {
            let mut g = Graph::empty(6);
            for u in 0..6 {
                for v in (u + 1)..6 {
                    if rng.gen_bool(0.5) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
            graphs.push(g);
        }
        for g in &graphs {
            let want = charpoly::roots(&charpoly::char_poly(g));
            let got = eigenvalues(g, MatrixKind::Adjacency).unwrap().values;
            assert_eq!(want.len(), got.len());
            for (w, x) in want.iter().zip(&got) {
                assert!(close(*w, *x, 1e-8), "{g:?}: {want:?} vs {got:?}");
            }
        }
    }

    #[test]
    fn char_poly_of_k3() {
        // x^3 - 3x - 2
        assert_eq!(
            charpoly::char_poly(&fam(FamilySpec::Complete(3))),
            vec![-2, -3, 0, 1]
        );
    }
}
