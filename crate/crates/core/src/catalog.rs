//! Seeded test catalogs of graphs and matroids, and the random generators
//! behind them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{named_graph, MultiGraph};
use crate::matroid::{LatticePathBounds, Matroid};

#[derive(Debug, Clone)]
pub struct CatalogGraph {
    pub name: String,
    pub graph: MultiGraph,
}

#[derive(Debug, Clone)]
pub struct CatalogMatroid {
    pub name: String,
    pub matroid: Matroid,
}

const NAMED: &[&str] = &[
    "k4",
    "theta(2)",
    "theta(3)",
    "theta(4)",
    "theta(5)",
    "theta(6)",
    "bouquet(1)",
    "bouquet(2)",
    "bouquet(3)",
    "bouquet(4)",
    "doubled_triangle",
    "cycle(3)",
    "cycle(4)",
    "cycle(5)",
    "prism(3)",
    "prism(4)",
    "wheel(4)",
    "wheel(5)",
    "k5",
    "petersen",
];

fn named(name: &str) -> CatalogGraph {
    CatalogGraph {
        name: name.to_string(),
        graph: named_graph(name).expect("catalog names parse"),
    }
}

/// `K_{3,3}`.
pub fn k33() -> MultiGraph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    MultiGraph::new(6, edges).expect("well formed")
}

/// `K4` with edge 0 subdivided once: 7 edges with an `M(K4)` minor.
pub fn k4_subdivided() -> MultiGraph {
    named_graph("k4").expect("named").subdivide(0, 2)
}

/// A multigraph with up to `max_vertices` vertices and between one and
/// `max_edges` edges. Loops appear with probability `loop_chance`.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize, loop_chance: f64) -> MultiGraph {
    let n = rng.random_range(1..=max_vertices.max(1));
    let m = rng.random_range(1..=max_edges.max(1));
    let edges = (0..m)
        .map(|_| {
            let u = rng.random_range(0..n);
            if n == 1 || rng.random_bool(loop_chance) {
                (u, u)
            } else {
                let mut v = rng.random_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                (u.min(v), u.max(v))
            }
        })
        .collect();
    MultiGraph::new(n, edges).expect("endpoints in range")
}

/// Loopless multigraph with minimum degree at least three and at most
/// `max_edges` edges: random edges are added until every degree reaches
/// three, restarting whenever the edge budget runs out.
pub fn random_min_degree3(rng: &mut ChaCha8Rng, max_edges: usize) -> MultiGraph {
    let max_vertices = (2 * max_edges / 3).max(2);
    loop {
        let n = rng.random_range(2..=max_vertices);
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        while edges.len() < max_edges && deg.iter().any(|&d| d < 3) {
            let low: Vec<usize> = (0..n).filter(|&v| deg[v] < 3).collect();
            let u = low[rng.random_range(0..low.len())];
            let mut v = rng.random_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u.min(v), u.max(v)));
        }
        if deg.iter().all(|&d| d >= 3) {
            return MultiGraph::new(n, edges).expect("endpoints in range");
        }
    }
}

/// Series-parallel multigraph with `edges` edges, grown from a single edge
/// by random subdivisions and parallel copies.
pub fn series_parallel_graph(rng: &mut ChaCha8Rng, edges: usize) -> MultiGraph {
    let mut n = 2;
    let mut list = vec![(0usize, 1usize)];
    while list.len() < edges.max(1) {
        let i = rng.random_range(0..list.len());
        let (u, v) = list[i];
        if rng.random_bool(0.5) {
            list[i] = (u, n);
            list.push((n, v));
            n += 1;
        } else {
            list.push((u, v));
        }
    }
    MultiGraph::new(n, list).expect("endpoints in range")
}

fn random_path(rng: &mut ChaCha8Rng, len: usize, north: usize) -> Vec<bool> {
    let mut steps = vec![false; len];
    let mut placed = 0;
    while placed < north {
        let i = rng.random_range(0..len);
        if !steps[i] {
            steps[i] = true;
            placed += 1;
        }
    }
    steps
}

/// Lattice path matroid bounded by the pointwise highest and lowest of
/// two random paths with `len` steps.
pub fn random_lattice_path(rng: &mut ChaCha8Rng, min_len: usize, max_len: usize) -> LatticePathBounds {
    let len = rng.random_range(min_len.max(1)..=max_len.max(min_len.max(1)));
    let north = rng.random_range(0..=len);
    let a = random_path(rng, len, north);
    let b = random_path(rng, len, north);
    let (mut ha, mut hb) = (0usize, 0usize);
    let (mut upper, mut lower) = (Vec::with_capacity(len), Vec::with_capacity(len));
    for i in 0..len {
        let (pa, pb) = (ha.max(hb), ha.min(hb));
        ha += a[i] as usize;
        hb += b[i] as usize;
        upper.push(ha.max(hb) > pa);
        lower.push(ha.min(hb) > pb);
    }
    LatticePathBounds::from_steps(upper, lower).expect("envelopes of two paths are nested")
}

/// Named graphs followed by `random` seeded multigraphs on at most six
/// vertices and twelve edges.
pub fn graph_catalog(seed: u64, random: usize) -> Vec<CatalogGraph> {
    let mut out: Vec<CatalogGraph> = NAMED.iter().map(|n| named(n)).collect();
    out.push(CatalogGraph {
        name: "k33".into(),
        graph: k33(),
    });
    out.push(CatalogGraph {
        name: "k4_subdivided".into(),
        graph: k4_subdivided(),
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        out.push(CatalogGraph {
            name: format!("random-{seed}-{i}"),
            graph: random_multigraph(&mut rng, 6, 12, 0.1),
        });
    }
    out
}

fn push(out: &mut Vec<CatalogMatroid>, name: impl Into<String>, matroid: Matroid) {
    out.push(CatalogMatroid {
        name: name.into(),
        matroid,
    });
}

/// Graphic matroids of named, small and series-parallel graphs, and their
/// duals. Every member is binary.
pub fn binary_catalog(seed: u64) -> Result<Vec<CatalogMatroid>> {
    let mut out = Vec::new();
    let mut graphs: Vec<CatalogGraph> = [
        "k4",
        "cycle(4)",
        "theta(3)",
        "prism(3)",
        "wheel(4)",
        "k5",
        "doubled_triangle",
    ]
    .iter()
    .map(|n| named(n))
    .collect();
    graphs.push(CatalogGraph {
        name: "k33".into(),
        graph: k33(),
    });
    graphs.push(CatalogGraph {
        name: "k4_subdivided".into(),
        graph: k4_subdivided(),
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..8 {
        let e = rng.random_range(3..=10);
        graphs.push(CatalogGraph {
            name: format!("sp-{seed}-{i}"),
            graph: series_parallel_graph(&mut rng, e),
        });
    }
    for g in graphs {
        let m = Matroid::graphic(&g.graph)?;
        push(&mut out, format!("M({})", g.name), m.clone());
        push(&mut out, format!("M({})*", g.name), m.dual());
    }
    Ok(out)
}

/// Uniform matroids up to eight elements, graphic, bicircular and lattice
/// path matroids, duals, and series and parallel extensions.
pub fn matroid_catalog(seed: u64) -> Result<Vec<CatalogMatroid>> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for r in 0..=n {
            push(&mut out, format!("U({r},{n})"), Matroid::uniform(r, n)?);
        }
    }
    out.extend(binary_catalog(seed)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb1c1);
    let mut bic: Vec<CatalogGraph> = [
        "k4",
        "theta(3)",
        "theta(4)",
        "bouquet(3)",
        "doubled_triangle",
        "cycle(4)",
        "prism(3)",
        "wheel(4)",
    ]
    .iter()
    .map(|n| named(n))
    .collect();
    for i in 0..10 {
        bic.push(CatalogGraph {
            name: format!("random-{seed}-{i}"),
            graph: random_multigraph(&mut rng, 5, 9, 0.1),
        });
    }
    for g in &bic {
        let m = Matroid::bicircular(&g.graph)?;
        push(&mut out, format!("B({})", g.name), m.clone());
        if ["k4", "prism(3)", "doubled_triangle"].contains(&g.name.as_str()) {
            push(&mut out, format!("B({})*", g.name), m.dual());
        }
    }
    push(
        &mut out,
        "LPM(NENE,ENEN)",
        Matroid::lattice_path(LatticePathBounds::new("NENE", "ENEN")?),
    );
    push(
        &mut out,
        "LPM(NNEE,EENN)",
        Matroid::lattice_path(LatticePathBounds::new("NNEE", "EENN")?),
    );
    for _ in 0..12 {
        let b = random_lattice_path(&mut rng, 2, 8);
        let m = Matroid::lattice_path(b.clone());
        push(&mut out, format!("LPM({b})"), m.clone());
        if b.len() <= 6 {
            push(&mut out, format!("LPM({b})*"), m.dual());
        }
    }
    let u24 = Matroid::uniform(2, 4)?;
    push(&mut out, "U(2,4)+p0", u24.parallel_extension(0)?);
    push(&mut out, "U(2,4)+s0", u24.series_extension(0)?);
    let k4 = Matroid::graphic(&named_graph("k4")?)?;
    push(&mut out, "M(k4)+s0", k4.series_extension(0)?);
    push(&mut out, "M(k4)+p0", k4.parallel_extension(0)?);
    let bk4 = Matroid::bicircular(&named_graph("k4")?)?;
    push(&mut out, "B(k4)+p0", bk4.parallel_extension(0)?);
    push(&mut out, "B(k4)+s0", bk4.series_extension(0)?);
    Ok(out)
}
