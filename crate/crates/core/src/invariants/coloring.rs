//! Exact chromatic number by DSATUR branch and bound.

use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::graph::{BitIter, Graph};

use super::clique::maximum_clique;

struct Dsatur<'a> {
    rows: &'a [u64],
    n: usize,
    colour: Vec<u8>,
    best: usize,
    best_colouring: Vec<u8>,
    lower: usize,
    meter: Meter,
}

const UNCOLOURED: u8 = u8::MAX;

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> u64 {
        BitIter(self.rows[v])
            .filter(|&u| self.colour[u] != UNCOLOURED)
            .fold(0u64, |m, u| m | (1u64 << self.colour[u]))
    }

    fn pick(&self) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64, u32, u32)> = None;
        for v in 0..self.n {
            if self.colour[v] != UNCOLOURED {
                continue;
            }
            let sat = self.saturation(v);
            let s = sat.count_ones();
            let d = BitIter(self.rows[v])
                .filter(|&u| self.colour[u] == UNCOLOURED)
                .count() as u32;
            if best.is_none_or(|(_, _, bs, bd)| (s, d) > (bs, bd)) {
                best = Some((v, sat, s, d));
            }
        }
        best.map(|(v, sat, _, _)| (v, sat))
    }

    fn search(&mut self, used: usize) -> Result<()> {
        self.meter.tick()?;
        if self.best <= self.lower {
            return Ok(());
        }
        let Some((v, sat)) = self.pick() else {
            if used < self.best {
                self.best = used;
                self.best_colouring = self.colour.clone();
            }
            return Ok(());
        };
        for c in 0..used {
            if sat >> c & 1 == 0 {
                self.colour[v] = c as u8;
                self.search(used)?;
                self.colour[v] = UNCOLOURED;
                if self.best <= self.lower {
                    return Ok(());
                }
            }
        }
        if used + 1 < self.best {
            self.colour[v] = used as u8;
            self.search(used + 1)?;
            self.colour[v] = UNCOLOURED;
        }
        Ok(())
    }
}

/// An optimal proper colouring, colours `0..χ`.
pub fn optimal_colouring(g: &Graph, budget: Budget) -> Result<Vec<usize>> {
    g.require_bitset()?;
    let n = g.order();
    let clique = maximum_clique(g, budget)?;
    let mut s = Dsatur {
        rows: g.rows64(),
        n,
        colour: vec![UNCOLOURED; n],
        best: n + 1,
        best_colouring: Vec::new(),
        lower: clique.len(),
        meter: budget.meter("chromatic number"),
    };
    // seed the clique with distinct colours; every optimal colouring can be
    // permuted to agree there
    for (c, v) in clique.iter().enumerate() {
        s.colour[v] = c as u8;
    }
    s.search(clique.len())?;
    Ok(s.best_colouring.iter().map(|&c| c as usize).collect())
}

/// Chromatic number χ.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<usize> {
    optimal_colouring(g, budget).map(|c| c.iter().max().map_or(0, |m| m + 1))
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

    /// Smallest k admitting a proper k-colouring, by trying all assignments.
    fn brute_chi(g: &Graph) -> usize {
        let n = g.order();
        for k in 1..=n {
            let mut col = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| col[u] != col[v]) {
                    return k;
                }
                let mut i = 0;
                while i < n && col[i] == k - 1 {
                    col[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                col[i] += 1;
            }
        }
        unreachable!()
    }

    #[test]
    fn named_values() {
        let b = Budget::default();
        assert_eq!(chromatic_number(&fam(FamilySpec::Cycle(7)), b).unwrap(), 3);
        assert_eq!(chromatic_number(&fam(FamilySpec::Cycle(8)), b).unwrap(), 2);
        assert_eq!(chromatic_number(&fam(FamilySpec::Petersen), b).unwrap(), 3);
        assert_eq!(chromatic_number(&fam(FamilySpec::Turan { n: 10, k: 3 }), b).unwrap(), 3);
        assert_eq!(chromatic_number(&fam(FamilySpec::Wheel(6)), b).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::empty(3), b).unwrap(), 1);
        // Grötzsch graph: triangle-free with chromatic number 4
        let mut es = vec![];
        for i in 0..5 {
            es.push((i, (i + 1) % 5));
            es.push((i + 5, (i + 1) % 5));
            es.push((i + 5, (i + 4) % 5));
            es.push((i + 5, 10));
        }
        let grotzsch = Graph::from_edges(11, &es).unwrap();
        assert_eq!(chromatic_number(&grotzsch, b).unwrap(), 4);
    }

    #[test]
    fn colourings_are_proper_and_optimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..120 {
            let n = rng.gen_range(1..8);
            let p = rng.gen_range(0.2..0.8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(p) {
                        g.add_edge_mut(u, v);
                    }
                }
            }
            let col = optimal_colouring(&g, Budget::default()).unwrap();
            assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
            assert_eq!(chromatic_number(&g, Budget::default()).unwrap(), brute_chi(&g));
        }
    }
}
