//! Canonical labelled constructions of the graphs used throughout.

use std::fmt;
use std::str::FromStr;

use super::MultiGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Petersen,
    Dodecahedron,
    K4,
    /// Two vertices joined by `k` parallel edges.
    Theta(usize),
    /// One vertex carrying `k` loops.
    Bouquet(usize),
    /// Triangle with every edge doubled.
    DoubledTriangle,
    /// Synonym of `Theta`.
    Parallel(usize),
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Prism(usize),
    Wheel(usize),
}

impl NamedGraph {
    pub fn build(self) -> MultiGraph {
        let (n, edges) = match self {
            NamedGraph::Petersen => petersen(),
            NamedGraph::Dodecahedron => dodecahedron(),
            NamedGraph::K4 => complete(4),
            NamedGraph::Theta(k) | NamedGraph::Parallel(k) => (2, vec![(0, 1); k]),
            NamedGraph::Bouquet(k) => (1, vec![(0, 0); k]),
            NamedGraph::DoubledTriangle => (3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]),
            NamedGraph::Complete(k) => complete(k),
            NamedGraph::Cycle(k) => (k, (0..k).map(|i| (i, (i + 1) % k)).collect()),
            NamedGraph::Path(k) => (k, (1..k).map(|i| (i - 1, i)).collect()),
            NamedGraph::Prism(k) => {
                let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                e.extend((0..k).map(|i| (k + i, k + (i + 1) % k)));
                e.extend((0..k).map(|i| (i, k + i)));
                (2 * k, e)
            }
            NamedGraph::Wheel(k) => {
                let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                e.extend((0..k).map(|i| (i, k)));
                (k + 1, e)
            }
        };
        MultiGraph::new(n, edges).expect("named constructions are well formed")
    }
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
fn petersen() -> (usize, Vec<(usize, usize)>) {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    (10, edges)
}

/// Inner pentagon 0..5, middle decagon 5..15, outer pentagon 15..20.
fn dodecahedron() -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..10 {
        edges.push((5 + i, 5 + (i + 1) % 10));
    }
    for i in 0..5 {
        edges.push((i, 5 + 2 * i));
        edges.push((5 + 2 * i + 1, 15 + i));
    }
    for i in 0..5 {
        edges.push((15 + i, 15 + (i + 1) % 5));
    }
    (20, edges)
}

fn complete(k: usize) -> (usize, Vec<(usize, usize)>) {
    let edges = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
    (k, edges)
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `petersen`, `theta(4)`, `theta4`, `k4`, `k5`, `prism3`, ...
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (name, arg) = match s.find(|c: char| c.is_ascii_digit() || c == '(') {
            Some(i) => {
                let arg = s[i..].trim_start_matches('(').trim_end_matches(')');
                let arg: usize = arg
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad parameter in graph name `{s}`")))?;
                (&s[..i], Some(arg))
            }
            None => (s.as_str(), None),
        };
        let need = |a: Option<usize>| a.ok_or_else(|| Error::invalid(format!("graph `{name}` needs a parameter")));
        Ok(match (name, arg) {
            ("petersen", None) => NamedGraph::Petersen,
            ("dodecahedron", None) => NamedGraph::Dodecahedron,
            ("k", Some(4)) => NamedGraph::K4,
            ("k" | "complete", a) => NamedGraph::Complete(need(a)?),
            ("theta", a) => NamedGraph::Theta(need(a)?),
            ("parallel", a) => NamedGraph::Parallel(need(a)?),
            ("bouquet", a) => NamedGraph::Bouquet(need(a)?),
            ("doubled_triangle", None) => NamedGraph::DoubledTriangle,
            ("cycle", a) => NamedGraph::Cycle(need(a)?),
            ("path", a) => NamedGraph::Path(need(a)?),
            ("prism" | "prism_", a) => NamedGraph::Prism(need(a)?),
            ("wheel", a) => NamedGraph::Wheel(need(a)?),
            _ => return Err(Error::invalid(format!("unknown graph name `{s}`"))),
        })
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Dodecahedron => write!(f, "dodecahedron"),
            NamedGraph::K4 => write!(f, "k4"),
            NamedGraph::Theta(k) => write!(f, "theta({k})"),
            NamedGraph::Bouquet(k) => write!(f, "bouquet({k})"),
            NamedGraph::DoubledTriangle => write!(f, "doubled_triangle"),
            NamedGraph::Parallel(k) => write!(f, "parallel({k})"),
            NamedGraph::Complete(k) => write!(f, "k{k}"),
            NamedGraph::Cycle(k) => write!(f, "cycle({k})"),
            NamedGraph::Path(k) => write!(f, "path({k})"),
            NamedGraph::Prism(k) => write!(f, "prism({k})"),
            NamedGraph::Wheel(k) => write!(f, "wheel({k})"),
        }
    }
}

/// Builds a named graph from its textual name.
pub fn named_graph(name: &str) -> Result<MultiGraph> {
    name.parse::<NamedGraph>().map(NamedGraph::build)
}
