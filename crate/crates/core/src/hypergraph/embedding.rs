//! Rotation systems, face tracing, and 3-uniform hypergraphs built from the
//! interior triangular faces of a plane embedding.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{spectral_radius, UniformHypergraph};
use crate::error::{Error, Result};
use crate::graph::families::{generate, FamilySpec};
use crate::graph::Graph;

/// Clockwise neighbour order around every vertex, plus an optional outer face.
///
/// Text form: one line `v: a b c` per vertex, and optionally a line
/// `outer: u v w ...` giving the outer face as a cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
    outer: Option<Vec<usize>>,
}

/// Closed walk bounding a face, as the sequence of vertices visited.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Face(pub Vec<usize>);

impl Face {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn vertex_set(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    /// Same cyclic sequence in either direction.
    fn matches_cycle(&self, cycle: &[usize]) -> bool {
        let k = self.0.len();
        if k != cycle.len() {
            return false;
        }
        let mut rev = cycle.to_vec();
        rev.reverse();
        (0..k).any(|s| {
            (0..k).all(|i| self.0[(s + i) % k] == cycle[i])
                || (0..k).all(|i| self.0[(s + i) % k] == rev[i])
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<usize>>, outer: Option<Vec<usize>>) -> Result<RotationSystem> {
        let n = rotations.len();
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in rot {
                if u >= n || u == v || !seen.insert(u) {
                    return Err(Error::InvalidRotationSystem(format!(
                        "bad neighbour {u} in rotation of {v}"
                    )));
                }
                if !rotations[u].contains(&v) {
                    return Err(Error::InvalidRotationSystem(format!(
                        "{u} appears around {v} but not {v} around {u}"
                    )));
                }
            }
        }
        if let Some(o) = &outer {
            if o.is_empty() || o.iter().any(|&v| v >= n) {
                return Err(Error::InvalidRotationSystem("bad outer face".into()));
            }
        }
        Ok(RotationSystem { rotations, outer })
    }

    pub fn order(&self) -> usize {
        self.rotations.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn outer(&self) -> Option<&[usize]> {
        self.outer.as_deref()
    }

    pub fn with_outer(mut self, outer: Option<Vec<usize>>) -> RotationSystem {
        self.outer = outer;
        self
    }

    /// The underlying graph.
    pub fn graph(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            edges.extend(rot.iter().filter(|&&u| u > v).map(|&u| (v, u)));
        }
        Graph::from_edges(self.order().max(1), &edges)
    }

    /// Faces traced by following, from dart `u -> v`, the dart leaving `v`
    /// towards the clockwise successor of `u`. Each dart lies on exactly one
    /// face; faces are listed in order of their smallest starting dart.
    pub fn faces(&self) -> Vec<Face> {
        let mut index = HashMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                index.insert((v, u), i);
            }
        }
        let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for &u in rot {
                if used.contains(&(v, u)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (v, u);
                while used.insert((a, b)) {
                    walk.push(a);
                    let around = &self.rotations[b];
                    let next = around[(index[&(b, a)] + 1) % around.len()];
                    (a, b) = (b, next);
                }
                faces.push(Face(walk));
            }
        }
        faces
    }

    /// Checks that the rotations describe a plane embedding of a connected
    /// graph: Euler's formula `V - E + F = 2`.
    pub fn validate_planar(&self) -> Result<Vec<Face>> {
        let g = self.graph()?;
        if g.size() == 0 || !g.is_connected() {
            return Err(Error::NotConnected);
        }
        let faces = self.faces();
        let euler = g.order() as i64 - g.size() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::InvalidRotationSystem(format!(
                "V - E + F = {euler}, embedding is not plane"
            )));
        }
        Ok(faces)
    }

    /// Index of the outer face among `faces`: the declared one, otherwise the
    /// longest face (ties to the earliest).
    fn outer_index(&self, faces: &[Face]) -> Result<usize> {
        match &self.outer {
            Some(cycle) => faces
                .iter()
                .position(|f| f.matches_cycle(cycle))
                .ok_or_else(|| {
                    Error::InvalidRotationSystem(format!("declared outer face {cycle:?} is not a face"))
                }),
            None => Ok(faces
                .iter()
                .enumerate()
                .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
                .map(|(i, _)| i)
                .expect("a graph with an edge has a face")),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            let parts: Vec<String> = rot.iter().map(|u| u.to_string()).collect();
            out.push_str(&format!("{v}: {}\n", parts.join(" ")));
        }
        if let Some(o) = &self.outer {
            out.push_str(&format!("outer: {}\n", Face(o.clone())));
        }
        out
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::MalformedInput(format!("bad vertex `{t}`")))
        })
        .collect()
}

impl FromStr for RotationSystem {
    type Err = Error;

    fn from_str(text: &str) -> Result<RotationSystem> {
        let mut lines: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut outer = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::MalformedInput(format!("missing `:` in `{line}`")))?;
            let head = head.trim();
            if head == "outer" {
                outer = Some(parse_list(rest)?);
                continue;
            }
            let v: usize = head
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad vertex `{head}`")))?;
            if lines.iter().any(|(w, _)| *w == v) {
                return Err(Error::MalformedInput(format!("vertex {v} listed twice")));
            }
            lines.push((v, parse_list(rest)?));
        }
        let n = lines
            .iter()
            .flat_map(|(v, rot)| std::iter::once(v).chain(rot))
            .max()
            .map_or(0, |m| m + 1);
        let mut rotations = vec![Vec::new(); n];
        for (v, rot) in lines {
            rotations[v] = rot;
        }
        RotationSystem::new(rotations, outer)
    }
}

/// Rotation system of a straight-line drawing: neighbours sorted clockwise by
/// angle. The outer face is the face of largest absolute signed area.
pub fn rotation_from_coordinates(g: &Graph, coords: &[(f64, f64)]) -> Result<RotationSystem> {
    if coords.len() != g.order() {
        return Err(Error::InvalidParameters(format!(
            "{} coordinates for {} vertices",
            coords.len(),
            g.order()
        )));
    }
    let rotations: Vec<Vec<usize>> = (0..g.order())
        .map(|v| {
            let (x, y) = coords[v];
            let mut nb: Vec<usize> = g.neighbors(v).collect();
            nb.sort_by(|&a, &b| {
                let ta = (coords[a].1 - y).atan2(coords[a].0 - x);
                let tb = (coords[b].1 - y).atan2(coords[b].0 - x);
                tb.total_cmp(&ta)
            });
            nb
        })
        .collect();
    let rot = RotationSystem::new(rotations, None)?;
    let faces = rot.faces();
    let area = |f: &Face| -> f64 {
        let k = f.len();
        (0..k)
            .map(|i| {
                let (a, b) = (coords[f.0[i]], coords[f.0[(i + 1) % k]]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum::<f64>()
            .abs()
    };
    let outer = faces
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| area(a).total_cmp(&area(b)).then(j.cmp(i)))
        .map(|(_, f)| f.0.clone());
    Ok(rot.with_outer(outer))
}

/// Fan `K_1 ∨ P_{n-1}` drawn with the hub above the path.
pub fn fan_embedding(n: usize) -> Result<(Graph, RotationSystem)> {
    let g = generate(&FamilySpec::Fan(n))?;
    let mut coords = vec![(0.0, 1.0)];
    coords.extend((1..n).map(|i| (i as f64, 0.0)));
    let rot = rotation_from_coordinates(&g, &coords)?;
    Ok((g, rot))
}

/// `K_2 ∨ P_{n-2}` drawn with the two hubs above and below the path.
pub fn planar_max_embedding(n: usize) -> Result<(Graph, RotationSystem)> {
    let g = generate(&FamilySpec::PlanarMax(n))?;
    let mut coords = vec![(0.0, 1.0), (0.0, -1.0)];
    coords.extend((2..n).map(|i| ((i - 1) as f64, 0.0)));
    let rot = rotation_from_coordinates(&g, &coords)?;
    Ok((g, rot))
}

fn interior_triangles(faces: &[Face], outer: usize) -> Vec<Vec<usize>> {
    let set: BTreeSet<BTreeSet<usize>> = faces
        .iter()
        .enumerate()
        .filter(|&(i, f)| i != outer && f.len() == 3)
        .map(|(_, f)| f.vertex_set())
        .collect();
    set.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// 3-uniform hypergraph of the interior triangular faces of `g` embedded by `rot`.
/// May have no edges (then its radius is `EmptyHypergraph`).
pub fn from_triangulation(g: &Graph, rot: &RotationSystem) -> Result<UniformHypergraph> {
    if !g.is_planar() {
        return Err(Error::NotPlanar);
    }
    if rot.graph()? != *g {
        return Err(Error::InvalidRotationSystem(
            "rotations do not describe the given graph".into(),
        ));
    }
    let faces = rot.validate_planar()?;
    let outer = rot.outer_index(&faces)?;
    UniformHypergraph::new(g.order(), 3, interior_triangles(&faces, outer))
}

/// Result of embedding with one particular face outermost.
#[derive(Clone, Debug, Serialize)]
pub struct TriangulationCandidate {
    pub outer: Face,
    pub hypergraph: UniformHypergraph,
    /// `None` when no interior triangle remains.
    pub radius: Option<f64>,
}

/// Every choice of outer face for the embedding `rot` of `g`, sorted by
/// decreasing radius. Choices whose radius is within `1e-9` of the first are
/// the maximisers; several can share the same shadow.
pub fn triangulation_candidates(
    g: &Graph,
    rot: &RotationSystem,
) -> Result<Vec<TriangulationCandidate>> {
    from_triangulation(g, rot)?;
    let faces = rot.validate_planar()?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        let h = UniformHypergraph::new(g.order(), 3, interior_triangles(&faces, i))?;
        if !seen.insert(h.edges().to_vec()) {
            continue;
        }
        let radius = match spectral_radius(&h) {
            Ok(r) => Some(r.radius),
            Err(Error::EmptyHypergraph) => None,
            Err(e) => return Err(e),
        };
        out.push(TriangulationCandidate {
            outer: f.clone(),
            hypergraph: h,
            radius,
        });
    }
    out.sort_by(|a, b| {
        b.radius
            .unwrap_or(f64::NEG_INFINITY)
            .total_cmp(&a.radius.unwrap_or(f64::NEG_INFINITY))
    });
    Ok(out)
}
