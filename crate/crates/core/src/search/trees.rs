//! Free trees by the Wright–Richmond–Odlyzko–McKay successor algorithm over
//! canonical level sequences, constant amortised time per tree.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the tree enumerator accepts.
pub const MAX_TREE_ORDER: usize = 20;

/// Iterator over one representative of each free tree on `n` vertices.
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    single: bool,
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<FreeTrees> {
        if n == 0 || n > MAX_TREE_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                limit: MAX_TREE_ORDER,
            });
        }
        if n == 1 {
            return Ok(FreeTrees {
                layout: None,
                single: true,
            });
        }
        let layout: Vec<usize> = (0..=n / 2).chain(1..(n + 1) / 2).collect();
        Ok(FreeTrees {
            layout: Some(layout),
            single: false,
        })
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            return Some(Graph::empty(1));
        }
        let layout = next_tree(self.layout.take()?)?;
        let g = layout_to_graph(&layout);
        self.layout = next_rooted_tree(&layout, None);
        Some(g)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (shifted up
/// one level) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, level) in (1..=h + 1).enumerate() {
            next[len - (h + 1) + i] = level;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut g = Graph::empty(layout.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                g.add_edge_mut(i, j);
                break;
            }
        }
        stack.push(i);
    }
    g
}
