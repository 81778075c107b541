//! Exact adjacency rank by elimination modulo two large primes.
//!
//! The rank over GF(p) never exceeds the rank over the rationals and agrees
//! with it unless `p` divides every maximal nonzero minor, so the larger of
//! two independent prime ranks is taken.

use crate::graph::Graph;

const PRIMES: [u64; 2] = [(1 << 61) - 1, 1_000_000_007];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Rank of an integer matrix (entries given as `i64`) over GF(p).
pub(crate) fn rank_mod(entries: &[i64], n: usize, p: u64) -> usize {
    let mut a: Vec<u64> = entries
        .iter()
        .map(|&x| x.rem_euclid(p as i64) as u64)
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..n {
                a.swap(piv * n + j, rank * n + j);
            }
        }
        let inv = pow_mod(a[rank * n + col], p - 2, p);
        for r in (rank + 1)..n {
            let f = a[r * n + col];
            if f == 0 {
                continue;
            }
            let f = mul_mod(f, inv, p);
            for j in col..n {
                let sub = mul_mod(f, a[rank * n + j], p);
                a[r * n + j] = (a[r * n + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix over the rationals.
pub(crate) fn integer_rank(entries: &[i64], n: usize) -> usize {
    PRIMES
        .iter()
        .map(|&p| rank_mod(entries, n, p))
        .max()
        .unwrap_or(0)
}

/// Rank of the adjacency matrix over the rationals.
pub fn adjacency_rank(g: &Graph) -> usize {
    let n = g.order();
    let mut a = vec![0i64; n * n];
    for u in 0..n {
        for v in g.neighbors(u) {
            a[u * n + v] = 1;
        }
    }
    integer_rank(&a, n)
}

/// Multiplicity of the eigenvalue zero of the adjacency matrix.
pub fn adjacency_nullity(g: &Graph) -> usize {
    g.order() - adjacency_rank(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{generate, FamilySpec};

    #[test]
    fn known_nullities() {
        let cases = [
            (FamilySpec::Complete(6), 0),
            (FamilySpec::Star(5), 3),
            (FamilySpec::CompleteBipartite(3, 4), 5),
            (FamilySpec::Cycle(4), 2),
            (FamilySpec::Cycle(8), 2),
            (FamilySpec::Cycle(7), 0),
            (FamilySpec::Path(5), 1),
            (FamilySpec::Petersen, 0),
            (FamilySpec::Empty(3), 3),
        ];
        for (spec, nullity) in cases {
            let g = generate(&spec).unwrap();
            assert_eq!(adjacency_nullity(&g), nullity, "{spec}");
        }
    }

    #[test]
    fn mod_p_rank_sees_small_prime_collapse() {
        // [[2,0],[0,1]] has rank 1 over GF(2) but 2 over the rationals
        assert_eq!(rank_mod(&[2, 0, 0, 1], 2, 2), 1);
        assert_eq!(integer_rank(&[2, 0, 0, 1], 2), 2);
        assert_eq!(integer_rank(&[1, -1, -1, 1], 2), 1);
    }
}
