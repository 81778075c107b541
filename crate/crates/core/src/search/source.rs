//! Graph sources: built-in enumeration, graph6 streams, free trees and
//! family sweeps.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use serde::Serialize;

use super::enumerate::{certificate_levels, MAX_ENUM_ORDER};
use super::trees::{FreeTrees, MAX_TREE_ORDER};
use crate::error::{Error, Result};
use crate::graph::families::FamilySpec;
use crate::graph::Graph;

/// Where a batch of graphs comes from.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphSource {
    /// Every isomorphism class with `min_order <= n <= max_order`.
    BuiltinEnum {
        min_order: usize,
        max_order: usize,
        connected_only: bool,
    },
    /// One graph6 string per line; `>>graph6<<` headers and blank lines are
    /// ignored, malformed lines are counted and skipped.
    Graph6Stream { path: PathBuf },
    /// Every free tree with `min_order <= n <= max_order`.
    TreeEnum { min_order: usize, max_order: usize },
    /// Family template whose integer arguments may be ranges `a..b`
    /// (inclusive), e.g. `doublekite(2..4,1..3)`.
    FamilySweep { template: String },
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::BuiltinEnum {
                min_order,
                max_order,
                connected_only,
            } => {
                let kind = if *connected_only { "connected graphs" } else { "graphs" };
                write!(f, "all {kind} on {min_order}..{max_order} vertices")
            }
            GraphSource::Graph6Stream { path } => write!(f, "graph6 stream {}", path.display()),
            GraphSource::TreeEnum { min_order, max_order } => {
                write!(f, "all free trees on {min_order}..{max_order} vertices")
            }
            GraphSource::FamilySweep { template } => write!(f, "family sweep {template}"),
        }
    }
}

/// Streamed graphs plus a running count of skipped inputs.
pub struct GraphStream {
    inner: Box<dyn Iterator<Item = Graph> + Send>,
    skipped: Arc<AtomicUsize>,
}

impl GraphStream {
    fn new(inner: Box<dyn Iterator<Item = Graph> + Send>, skipped: Arc<AtomicUsize>) -> Self {
        GraphStream { inner, skipped }
    }

    /// Inputs skipped so far (malformed graph6 lines or invalid family members).
    pub fn skipped(&self) -> usize {
        self.skipped.load(Ordering::Relaxed)
    }

    /// Pulls up to `size` graphs.
    pub fn next_chunk(&mut self, size: usize) -> Vec<Graph> {
        self.inner.by_ref().take(size).collect()
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next()
    }
}

impl GraphSource {
    /// Built-in enumeration of all graphs of exactly order `n`.
    pub fn graphs_of_order(n: usize, connected_only: bool) -> GraphSource {
        GraphSource::BuiltinEnum {
            min_order: n,
            max_order: n,
            connected_only,
        }
    }

    pub fn trees_of_order(n: usize) -> GraphSource {
        GraphSource::TreeEnum {
            min_order: n,
            max_order: n,
        }
    }

    /// Opens the source. Order limits and unreadable files fail here; bad
    /// individual inputs are skipped while streaming.
    pub fn open(&self) -> Result<GraphStream> {
        let skipped = Arc::new(AtomicUsize::new(0));
        match self {
            GraphSource::BuiltinEnum {
                min_order,
                max_order,
                connected_only,
            } => {
                check_range(*min_order, *max_order, MAX_ENUM_ORDER)?;
                let levels = certificate_levels(*max_order)?;
                let connected = *connected_only;
                let it = levels
                    .into_iter()
                    .skip(min_order - 1)
                    .flatten()
                    .map(|c| c.to_graph())
                    .filter(move |g| !connected || g.is_connected());
                Ok(GraphStream::new(Box::new(it), skipped))
            }
            GraphSource::TreeEnum { min_order, max_order } => {
                check_range(*min_order, *max_order, MAX_TREE_ORDER)?;
                let it = (*min_order..=*max_order).flat_map(|n| FreeTrees::new(n).expect("order checked"));
                Ok(GraphStream::new(Box::new(it), skipped))
            }
            GraphSource::Graph6Stream { path } => {
                let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let counter = Arc::clone(&skipped);
                let it = BufReader::new(file).lines().filter_map(move |line| {
                    let parsed = line.map_err(Error::from).and_then(|l| parse_line(&l));
                    match parsed {
                        Ok(g) => g,
                        Err(_) => {
                            counter.fetch_add(1, Ordering::Relaxed);
                            None
                        }
                    }
                });
                Ok(GraphStream::new(Box::new(it), skipped))
            }
            GraphSource::FamilySweep { template } => {
                let specs = expand_sweep(template)?;
                let counter = Arc::clone(&skipped);
                let it = specs.into_iter().filter_map(move |s| {
                    match s.parse::<FamilySpec>().and_then(|spec| crate::graph::families::generate(&spec)) {
                        Ok(g) => Some(g),
                        Err(_) => {
                            counter.fetch_add(1, Ordering::Relaxed);
                            None
                        }
                    }
                });
                Ok(GraphStream::new(Box::new(it), skipped))
            }
        }
    }
}

fn check_range(lo: usize, hi: usize, limit: usize) -> Result<()> {
    if hi > limit {
        return Err(Error::OrderOutOfRange { n: hi, limit });
    }
    if lo == 0 || lo > hi {
        return Err(Error::InvalidParameters(format!("order range {lo}..{hi}")));
    }
    Ok(())
}

/// One graph6 line: `Ok(None)` for headers and blank lines.
fn parse_line(line: &str) -> Result<Option<Graph>> {
    let t = line.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    if t.is_empty() {
        return Ok(None);
    }
    Graph::from_graph6(t).map(Some)
}

/// Expands `name(a..b, c, ...)` into every concrete family string, varying
/// the last argument fastest.
pub fn expand_sweep(template: &str) -> Result<Vec<String>> {
    let t = template.trim();
    let Some(open) = t.find('(') else {
        return Ok(vec![t.to_string()]);
    };
    let name = &t[..open];
    let inner = t[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::MalformedInput(format!("unbalanced parentheses in `{t}`")))?;
    let mut axes: Vec<Vec<String>> = Vec::new();
    for arg in inner.split(',') {
        let arg = arg.trim();
        match arg.split_once("..") {
            Some((a, b)) => {
                let lo: usize = a.trim().parse().map_err(|_| Error::MalformedInput(format!("range `{arg}`")))?;
                let hi: usize = b.trim().parse().map_err(|_| Error::MalformedInput(format!("range `{arg}`")))?;
                if lo > hi {
                    return Err(Error::MalformedInput(format!("empty range `{arg}`")));
                }
                axes.push((lo..=hi).map(|v| v.to_string()).collect());
            }
            None => axes.push(vec![arg.to_string()]),
        }
    }
    let mut out = vec![Vec::<String>::new()];
    for axis in &axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(|args| format!("{name}({})", args.join(","))).collect())
}

impl FromStr for GraphSource {
    type Err = Error;

    /// `enum:N`, `enum:A..B`, `connected:N`, `trees:N`, `trees:A..B`,
    /// `g6:PATH` or `family:TEMPLATE`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::MalformedInput(format!("source `{s}` lacks a kind prefix")))?;
        let range = |r: &str| -> Result<(usize, usize)> {
            let bad = || Error::MalformedInput(format!("order range `{r}`"));
            match r.split_once("..") {
                Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
                None => {
                    let n = r.trim().parse().map_err(|_| bad())?;
                    Ok((n, n))
                }
            }
        };
        match kind {
            "enum" | "connected" => {
                let (min_order, max_order) = range(rest)?;
                Ok(GraphSource::BuiltinEnum {
                    min_order,
                    max_order,
                    connected_only: kind == "connected",
                })
            }
            "trees" => {
                let (min_order, max_order) = range(rest)?;
                Ok(GraphSource::TreeEnum { min_order, max_order })
            }
            "g6" => Ok(GraphSource::Graph6Stream { path: rest.into() }),
            "family" => Ok(GraphSource::FamilySweep {
                template: rest.to_string(),
            }),
            other => Err(Error::MalformedInput(format!("unknown source kind `{other}`"))),
        }
    }
}
