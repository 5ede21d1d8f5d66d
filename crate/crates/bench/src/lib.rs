//! Shared fixtures for the benchmark harness.

use gspkit::graph::named_graph;
use gspkit::{Matroid, MultiGraph};

/// Named graphs used across the benchmarks, smallest first.
pub const GRAPHS: &[&str] = &["k4", "prism(3)", "wheel(5)", "petersen"];

pub fn graph(name: &str) -> MultiGraph {
    named_graph(name).expect("benchmark graph names parse")
}

pub fn bicircular(name: &str) -> Matroid {
    Matroid::bicircular(&graph(name)).expect("bicircular matroids of named graphs build")
}

/// Random-looking but fixed generators for lattice membership benchmarks.
pub fn lattice_generators(dim: usize, count: usize) -> Vec<Vec<i64>> {
    (0..count)
        .map(|i| (0..dim).map(|j| ((i * 7 + j * 13 + i * j) % 5) as i64 - 2).collect())
        .collect()
}
