//! Named graph families and the `family(p, ...)` text grammar.
//!
//! Every generator uses a fixed labelling, listed on the variant, so that
//! vertex sets and witnesses in reports are reproducible.

use std::fmt;
use std::str::FromStr;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// A named family member with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `complete(n)`: K_n.
    Complete(usize),
    /// `empty(n)`: n isolated vertices.
    Empty(usize),
    /// `path(n)`: P_n, vertices in path order.
    Path(usize),
    /// `cycle(n)`: C_n, vertices in cyclic order.
    Cycle(usize),
    /// `star(n)`: K_{1,n-1}, centre 0.
    Star(usize),
    /// `bipartite(p,q)`: K_{p,q}, first part `0..p`.
    CompleteBipartite(usize, usize),
    /// `multipartite(n1,...,nk)`: parts laid out as consecutive blocks.
    CompleteMultipartite(Vec<usize>),
    /// `turan(n,k)`: balanced complete k-partite graph, larger parts first.
    Turan { n: usize, k: usize },
    /// `split(n,k)`: S_{n,k}; clique `0..k`, independent set `k..n`.
    CompleteSplit { n: usize, k: usize },
    /// `splitplus(n,k)`: S_{n,k} plus the edge `{k, k+1}`.
    CompleteSplitPlus { n: usize, k: usize },
    /// `doublekite(r,s)`: DK(r,s). First clique `0..r` attached at `r-1`,
    /// internal path `r..r+s`, second clique `r+s..2r+s` attached at `r+s`.
    DoubleKite { r: usize, s: usize },
    /// `doublecomet(k,l)`: C(k,l). Path `0..l`, k leaves on vertex 0 then k
    /// leaves on vertex `l-1`.
    DoubleComet { k: usize, l: usize },
    /// `kite(r,s)`: P_r·K_s. Clique `0..s`; the path continues from `s-1`
    /// through `s..r+s-1`.
    Kite { r: usize, s: usize },
    /// `hypercube(d)`: Q_d on bit strings, adjacent when differing in one bit.
    Hypercube(usize),
    /// `petersen`: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
    Petersen,
    /// `heawood`: Fano points `0..7`, lines `7..14`, line `i` = {i, i+1, i+3} mod 7.
    Heawood,
    /// `fan(n)`: K_1 ∨ P_{n-1}, hub 0.
    Fan(usize),
    /// `planarmax(n)`: K_2 ∨ P_{n-2}; the K_2 is `{0, 1}`, the path `2..n`.
    PlanarMax(usize),
    /// `wheel(n)`: hub 0 joined to the cycle `1..n`.
    Wheel(usize),
    /// `gkrs(k,r,s,a1,...,as)`: G_{k,r,s}. Clique `0..k`, the r vertices
    /// `k..k+r` joined to the whole clique, then s vertices where the i-th is
    /// joined to the first `a_i` clique vertices (`k > a_1 >= ... >= a_s >= 0`).
    Gkrs {
        k: usize,
        r: usize,
        neighborhood_sizes: Vec<usize>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

impl FamilySpec {
    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Complete(n) | Empty(n) | Path(n) | Cycle(n) | Star(n) | Fan(n) | PlanarMax(n)
            | Wheel(n) => *n,
            CompleteBipartite(p, q) => p + q,
            CompleteMultipartite(parts) => parts.iter().sum(),
            Turan { n, .. } | CompleteSplit { n, .. } | CompleteSplitPlus { n, .. } => *n,
            DoubleKite { r, s } => 2 * r + s,
            DoubleComet { k, l } => 2 * k + l,
            Kite { r, s } => (r + s).saturating_sub(1),
            Hypercube(d) => 1usize.checked_shl(*d as u32).unwrap_or(usize::MAX),
            Petersen => 10,
            Heawood => 14,
            Gkrs {
                k,
                r,
                neighborhood_sizes,
            } => k + r + neighborhood_sizes.len(),
        }
    }

    /// Checks the definitional constraints of the family.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let ok = match self {
            Complete(n) | Empty(n) | Path(n) => *n >= 1,
            Cycle(n) => *n >= 3,
            Star(n) | Fan(n) => *n >= 2,
            PlanarMax(n) => *n >= 3,
            Wheel(n) => *n >= 4,
            CompleteBipartite(p, q) => *p >= 1 && *q >= 1,
            CompleteMultipartite(parts) => !parts.is_empty() && parts.iter().all(|&p| p >= 1),
            Turan { n, k } => *n >= 1 && (1..=*n).contains(k),
            CompleteSplit { n, k } => *n >= 1 && k <= n,
            CompleteSplitPlus { n, k } => *n >= 2 && k + 2 <= *n,
            DoubleKite { r, .. } => *r >= 1,
            DoubleComet { k, l } => *k >= 1 && *l >= 2,
            Kite { r, s } => *r >= 1 && *s >= 1,
            Hypercube(d) => *d <= 9,
            Petersen | Heawood => true,
            Gkrs {
                k,
                r,
                neighborhood_sizes,
            } => {
                *k >= 1
                    && *r >= 1
                    && neighborhood_sizes.iter().all(|a| a < k)
                    && neighborhood_sizes.windows(2).all(|w| w[0] >= w[1])
            }
        };
        if !ok {
            return Err(invalid(format!("{self} violates the family constraints")));
        }
        let n = self.order();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, limit: MAX_ORDER });
        }
        Ok(())
    }

    /// Closed-form edge count, used to cross-check the generators.
    pub fn expected_size(&self) -> usize {
        use FamilySpec::*;
        let c2 = |x: usize| x * x.saturating_sub(1) / 2;
        match self {
            Complete(n) => c2(*n),
            Empty(_) => 0,
            Path(n) => n - 1,
            Cycle(n) => *n,
            Star(n) => n - 1,
            CompleteBipartite(p, q) => p * q,
            CompleteMultipartite(parts) => {
                let n: usize = parts.iter().sum();
                c2(n) - parts.iter().map(|&p| c2(p)).sum::<usize>()
            }
            Turan { n, k } => {
                let parts = turan_parts(*n, *k);
                c2(*n) - parts.iter().map(|&p| c2(p)).sum::<usize>()
            }
            CompleteSplit { n, k } => c2(*k) + k * (n - k),
            CompleteSplitPlus { n, k } => c2(*k) + k * (n - k) + 1,
            DoubleKite { r, s } => 2 * c2(*r) + s + 1,
            DoubleComet { k, l } => 2 * k + l - 1,
            Kite { r, s } => c2(*s) + r - 1,
            Hypercube(d) => d * (1usize << d) / 2,
            Petersen => 15,
            Heawood => 21,
            Fan(n) => 2 * n - 3,
            PlanarMax(n) => 3 * n - 6,
            Wheel(n) => 2 * (n - 1),
            Gkrs {
                k,
                r,
                neighborhood_sizes,
            } => c2(*k) + k * r + neighborhood_sizes.iter().sum::<usize>(),
        }
    }
}

/// Part sizes of T_{n,k}, larger parts first.
pub fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

fn multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if block[u] != block[v] {
                g.add_edge_mut(u, v);
            }
        }
    }
    g
}

fn add_clique(g: &mut Graph, vertices: impl Iterator<Item = usize> + Clone) {
    for u in vertices.clone() {
        for v in vertices.clone() {
            if u < v {
                g.add_edge_mut(u, v);
            }
        }
    }
}

fn add_path(g: &mut Graph, vertices: &[usize]) {
    for w in vertices.windows(2) {
        g.add_edge_mut(w[0], w[1]);
    }
}

/// Builds the graph of a family member.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    spec.validate()?;
    let n = spec.order();
    let mut g = Graph::empty(n);
    match spec {
        Complete(n) => add_clique(&mut g, 0..*n),
        Empty(_) => {}
        Path(n) => add_path(&mut g, &(0..*n).collect::<Vec<_>>()),
        Cycle(n) => {
            add_path(&mut g, &(0..*n).collect::<Vec<_>>());
            g.add_edge_mut(n - 1, 0);
        }
        Star(n) => (1..*n).for_each(|v| g.add_edge_mut(0, v)),
        CompleteBipartite(p, q) => g = multipartite(&[*p, *q]),
        CompleteMultipartite(parts) => g = multipartite(parts),
        Turan { n, k } => g = multipartite(&turan_parts(*n, *k)),
        CompleteSplit { n, k } | CompleteSplitPlus { n, k } => {
            add_clique(&mut g, 0..*k);
            for u in 0..*k {
                for v in *k..*n {
                    g.add_edge_mut(u, v);
                }
            }
            if matches!(spec, CompleteSplitPlus { .. }) {
                g.add_edge_mut(*k, k + 1);
            }
        }
        DoubleKite { r, s } => {
            add_clique(&mut g, 0..*r);
            add_clique(&mut g, (r + s)..(2 * r + s));
            let path: Vec<usize> = ((r - 1)..=(r + s)).collect();
            add_path(&mut g, &path);
        }
        DoubleComet { k, l } => {
            add_path(&mut g, &(0..*l).collect::<Vec<_>>());
            for i in 0..*k {
                g.add_edge_mut(0, l + i);
                g.add_edge_mut(l - 1, l + k + i);
            }
        }
        Kite { r, s } => {
            add_clique(&mut g, 0..*s);
            let path: Vec<usize> = ((s - 1)..(r + s - 1)).collect();
            add_path(&mut g, &path);
        }
        Hypercube(d) => {
            for u in 0..n {
                for b in 0..*d {
                    let v = u ^ (1 << b);
                    if u < v {
                        g.add_edge_mut(u, v);
                    }
                }
            }
        }
        Petersen => {
            for i in 0..5 {
                g.add_edge_mut(i, (i + 1) % 5);
                g.add_edge_mut(5 + i, 5 + (i + 2) % 5);
                g.add_edge_mut(i, 5 + i);
            }
        }
        Heawood => {
            for line in 0..7 {
                for off in [0, 1, 3] {
                    g.add_edge_mut((line + off) % 7, 7 + line);
                }
            }
        }
        Fan(n) => {
            add_path(&mut g, &(1..*n).collect::<Vec<_>>());
            (1..*n).for_each(|v| g.add_edge_mut(0, v));
        }
        PlanarMax(n) => {
            g.add_edge_mut(0, 1);
            add_path(&mut g, &(2..*n).collect::<Vec<_>>());
            for v in 2..*n {
                g.add_edge_mut(0, v);
                g.add_edge_mut(1, v);
            }
        }
        Wheel(n) => {
            add_path(&mut g, &(1..*n).collect::<Vec<_>>());
            g.add_edge_mut(n - 1, 1);
            (1..*n).for_each(|v| g.add_edge_mut(0, v));
        }
        Gkrs {
            k,
            r,
            neighborhood_sizes,
        } => {
            add_clique(&mut g, 0..*k);
            for u in 0..*k {
                for v in *k..(k + r) {
                    g.add_edge_mut(u, v);
                }
            }
            for (i, &a) in neighborhood_sizes.iter().enumerate() {
                for u in 0..a {
                    g.add_edge_mut(u, k + r + i);
                }
            }
        }
    }
    debug_assert_eq!(g.size(), spec.expected_size(), "{spec}");
    Ok(g)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Complete(n) => write!(f, "complete({n})"),
            Empty(n) => write!(f, "empty({n})"),
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Star(n) => write!(f, "star({n})"),
            CompleteBipartite(p, q) => write!(f, "bipartite({p},{q})"),
            CompleteMultipartite(parts) => write!(f, "multipartite({})", join(parts)),
            Turan { n, k } => write!(f, "turan({n},{k})"),
            CompleteSplit { n, k } => write!(f, "split({n},{k})"),
            CompleteSplitPlus { n, k } => write!(f, "splitplus({n},{k})"),
            DoubleKite { r, s } => write!(f, "doublekite({r},{s})"),
            DoubleComet { k, l } => write!(f, "doublecomet({k},{l})"),
            Kite { r, s } => write!(f, "kite({r},{s})"),
            Hypercube(d) => write!(f, "hypercube({d})"),
            Petersen => write!(f, "petersen"),
            Heawood => write!(f, "heawood"),
            Fan(n) => write!(f, "fan({n})"),
            PlanarMax(n) => write!(f, "planarmax({n})"),
            Wheel(n) => write!(f, "wheel({n})"),
            Gkrs {
                k,
                r,
                neighborhood_sizes,
            } => {
                let mut all = vec![*k, *r, neighborhood_sizes.len()];
                all.extend(neighborhood_sizes);
                write!(f, "gkrs({})", join(&all))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                let close = s
                    .strip_suffix(')')
                    .ok_or_else(|| Error::MalformedInput(format!("missing ')' in {s:?}")))?;
                (&s[..open], &close[open + 1..])
            }
            None => (s, ""),
        };
        let params: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim().parse::<usize>().map_err(|_| {
                        Error::MalformedInput(format!("bad parameter {a:?} in {s:?}"))
                    })
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::MalformedInput(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        use FamilySpec::*;
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "complete" => arity(1).map(|_| Complete(params[0]))?,
            "empty" => arity(1).map(|_| Empty(params[0]))?,
            "path" => arity(1).map(|_| Path(params[0]))?,
            "cycle" => arity(1).map(|_| Cycle(params[0]))?,
            "star" => arity(1).map(|_| Star(params[0]))?,
            "bipartite" => arity(2).map(|_| CompleteBipartite(params[0], params[1]))?,
            "multipartite" => CompleteMultipartite(params.clone()),
            "turan" => arity(2).map(|_| Turan {
                n: params[0],
                k: params[1],
            })?,
            "split" => arity(2).map(|_| CompleteSplit {
                n: params[0],
                k: params[1],
            })?,
            "splitplus" => arity(2).map(|_| CompleteSplitPlus {
                n: params[0],
                k: params[1],
            })?,
            "doublekite" => arity(2).map(|_| DoubleKite {
                r: params[0],
                s: params[1],
            })?,
            "doublecomet" => arity(2).map(|_| DoubleComet {
                k: params[0],
                l: params[1],
            })?,
            "kite" => arity(2).map(|_| Kite {
                r: params[0],
                s: params[1],
            })?,
            "hypercube" => arity(1).map(|_| Hypercube(params[0]))?,
            "petersen" => arity(0).map(|_| Petersen)?,
            "heawood" => arity(0).map(|_| Heawood)?,
            "fan" => arity(1).map(|_| Fan(params[0]))?,
            "planarmax" => arity(1).map(|_| PlanarMax(params[0]))?,
            "wheel" => arity(1).map(|_| Wheel(params[0]))?,
            "gkrs" => {
                if params.len() < 3 || params.len() != 3 + params[2] {
                    return Err(Error::MalformedInput(
                        "gkrs takes k,r,s followed by s neighbourhood sizes".into(),
                    ));
                }
                Gkrs {
                    k: params[0],
                    r: params[1],
                    neighborhood_sizes: params[3..].to_vec(),
                }
            }
            other => {
                return Err(Error::MalformedInput(format!("unknown family {other:?}")));
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn all_specs() -> Vec<FamilySpec> {
        use FamilySpec::*;
        vec![
            Complete(7),
            Empty(4),
            Path(6),
            Cycle(9),
            Star(5),
            CompleteBipartite(2, 3),
            CompleteMultipartite(vec![3, 2, 2, 1]),
            Turan { n: 10, k: 3 },
            CompleteSplit { n: 5, k: 2 },
            CompleteSplitPlus { n: 9, k: 3 },
            DoubleKite { r: 8, s: 5 },
            DoubleKite { r: 3, s: 0 },
            DoubleComet { k: 3, l: 6 },
            Kite { r: 6, s: 4 },
            Hypercube(4),
            Petersen,
            Heawood,
            Fan(7),
            PlanarMax(9),
            Wheel(6),
            Gkrs {
                k: 4,
                r: 2,
                neighborhood_sizes: vec![3, 3, 1, 0],
            },
        ]
    }

    #[test]
    fn counts_match_closed_forms() {
        for spec in all_specs() {
            let g = generate(&spec).unwrap();
            assert_eq!(g.order(), spec.order(), "{spec}");
            assert_eq!(g.size(), spec.expected_size(), "{spec}");
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn double_kite_8_5() {
        let g = generate(&FamilySpec::DoubleKite { r: 8, s: 5 }).unwrap();
        assert_eq!((g.order(), g.size()), (21, 62));
        assert!(g.is_connected());
    }

    #[test]
    fn complete_split_5_2() {
        let g = generate(&FamilySpec::CompleteSplit { n: 5, k: 2 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
    }

    #[test]
    fn hypercube_3() {
        let g = generate(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_regular() && g.degree(0) == 3);
        assert!(g.is_bipartite());
    }

    #[test]
    fn named_graphs_are_cubic() {
        for spec in [FamilySpec::Petersen, FamilySpec::Heawood] {
            let g = generate(&spec).unwrap();
            assert!(g.is_regular() && g.degree(0) == 3);
        }
        let heawood = generate(&FamilySpec::Heawood).unwrap();
        assert_eq!(heawood.girth(), Some(6));
    }

    #[test]
    fn kite_and_comet_shapes() {
        let kite = generate(&FamilySpec::Kite { r: 1, s: 4 }).unwrap();
        assert!(kite.is_complete());
        let comet = generate(&FamilySpec::DoubleComet { k: 1, l: 5 }).unwrap();
        assert_eq!(comet, generate(&FamilySpec::Path(7)).unwrap().relabel(&[5, 0, 1, 2, 3, 4, 6]));
        assert!(comet.is_tree());
    }

    #[test]
    fn gkrs_nested_neighbourhoods() {
        let spec = FamilySpec::Gkrs {
            k: 4,
            r: 2,
            neighborhood_sizes: vec![3, 1],
        };
        let g = generate(&spec).unwrap();
        let clique = VertexSet::full(4).0;
        assert_eq!(g.row64(4) & clique, clique);
        assert_eq!(g.row64(6), 0b0111);
        assert_eq!(g.row64(7), 0b0001);
        assert!(generate(&FamilySpec::Gkrs {
            k: 3,
            r: 1,
            neighborhood_sizes: vec![3]
        })
        .is_err());
        assert!(generate(&FamilySpec::Gkrs {
            k: 3,
            r: 1,
            neighborhood_sizes: vec![1, 2]
        })
        .is_err());
    }

    #[test]
    fn grammar_round_trips() {
        for spec in all_specs() {
            let text = spec.to_string();
            assert_eq!(text.parse::<FamilySpec>().unwrap(), spec, "{text}");
        }
        assert_eq!(
            "split(12,3)".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteSplit { n: 12, k: 3 }
        );
        assert_eq!(
            " doublekite( 8 , 5 ) ".parse::<FamilySpec>().unwrap(),
            FamilySpec::DoubleKite { r: 8, s: 5 }
        );
    }

    #[test]
    fn grammar_errors() {
        assert!("nosuch(3)".parse::<FamilySpec>().is_err());
        assert!("path(3".parse::<FamilySpec>().is_err());
        assert!("path(3,4)".parse::<FamilySpec>().is_err());
        assert!("path(x)".parse::<FamilySpec>().is_err());
        assert!("cycle(2)".parse::<FamilySpec>().is_err());
        assert!("doublekite(0,3)".parse::<FamilySpec>().is_err());
        assert!("gkrs(3,1,2,1)".parse::<FamilySpec>().is_err());
        assert!("hypercube(10)".parse::<FamilySpec>().is_err());
    }
}
