//! Exact toughness `min |S| / c(G - S)` over separating vertex sets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};

/// Largest order accepted by [`toughness`].
pub const MAX_TOUGHNESS_ORDER: usize = 24;

/// Toughness as a reduced fraction, or infinity for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    Finite { num: u64, den: u64 },
    Infinite,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Toughness {
    pub fn ratio(num: u64, den: u64) -> Toughness {
        let g = gcd(num, den).max(1);
        Toughness::Finite {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Toughness::Finite { num, den } => num as f64 / den as f64,
            Toughness::Infinite => f64::INFINITY,
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
            (Toughness::Infinite, _) => Ordering::Greater,
            (_, Toughness::Infinite) => Ordering::Less,
            (Toughness::Finite { num: a, den: b }, Toughness::Finite { num: c, den: d }) => {
                (*a as u128 * *d as u128).cmp(&(*c as u128 * *b as u128))
            }
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite { num, den } if *den == 1 => write!(f, "{num}"),
            Toughness::Finite { num, den } => write!(f, "{num}/{den}"),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Toughness with a minimising separating set (`None` for complete graphs).
#[derive(Clone, Debug, PartialEq)]
pub struct ToughnessWitness {
    pub value: Toughness,
    pub separator: Option<VertexSet>,
}

fn component_count(rows: &[u64], alive: u64) -> u32 {
    let mut left = alive;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut seen = left & left.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= rows[v];
            }
            next &= left & !seen;
            seen |= next;
            frontier = next;
        }
        left &= !seen;
    }
    count
}

/// Exact toughness of a connected graph by scanning every vertex subset.
pub fn toughness_with_witness(g: &Graph, budget: Budget) -> Result<ToughnessWitness> {
    let n = g.order();
    if n > MAX_TOUGHNESS_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            limit: MAX_TOUGHNESS_ORDER,
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Ok(ToughnessWitness {
            value: Toughness::Infinite,
            separator: None,
        });
    }
    let rows = g.rows64();
    let all = VertexSet::full(n).0;
    let mut meter = budget.meter("toughness");
    let mut best = Toughness::Infinite;
    let mut arg = 0u64;
    // |S| <= n - 2 since G - S needs two components
    for s in 1u64..all {
        let size = s.count_ones() as u64;
        if size + 2 > n as u64 {
            continue;
        }
        meter.tick()?;
        // cheap bound: c(G - S) <= n - |S|
        if let Toughness::Finite { num, den } = best {
            if (size as u128) * (den as u128) > (num as u128) * ((n as u64 - size) as u128) {
                continue;
            }
        }
        let c = component_count(rows, all & !s);
        if c >= 2 {
            let t = Toughness::ratio(size, c as u64);
            if t < best {
                best = t;
                arg = s;
            }
        }
    }
    Ok(ToughnessWitness {
        value: best,
        separator: Some(VertexSet(arg)),
    })
}

/// Exact toughness t(G) of a connected graph; infinite for complete graphs.
pub fn toughness(g: &Graph, budget: Budget) -> Result<Toughness> {
    toughness_with_witness(g, budget).map(|w| w.value)
}
