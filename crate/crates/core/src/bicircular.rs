//! Bicircular matroids of multigraphs: structural circuits, the structure
//! of double circuits, circuit pairs with symmetric difference two, and the
//! classification of the uniform ones.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::caps::Caps;
use crate::doublecirc::{circuit_partition, is_double_circuit};
use crate::error::{check_cap, Error, Result};
use crate::graph::{MultiGraph, Path};
use crate::matroid::{is_cosimple, Matroid};

/// Hard limit on the number of cycles collected during structural
/// enumeration.
const CYCLE_LIMIT: usize = 200_000;

#[derive(Debug, Clone)]
pub struct BicircularMatroid {
    pub graph: MultiGraph,
    pub matroid: Matroid,
}

pub fn make_bicircular(g: &MultiGraph) -> Result<BicircularMatroid> {
    Ok(BicircularMatroid {
        graph: g.clone(),
        matroid: Matroid::bicircular(g)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BicycleShape {
    Theta,
    Dumbbell,
    FigureEight,
}

/// A circuit of a bicircular matroid: a subdivided theta, dumbbell or
/// figure-eight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Bicycle {
    pub edges: u64,
    pub shape: BicycleShape,
}

/// Shape of the edge set `mask` if it is connected, leafless and has
/// `|E| = |V| + 1`.
pub fn bicycle_shape(g: &MultiGraph, mask: u64) -> Option<BicycleShape> {
    if mask == 0 {
        return None;
    }
    let census = g.component_census(mask);
    let verts = census.vertices;
    let components = verts - census.forest_edges;
    if components != 1 || bits::count(mask) != verts + 1 {
        return None;
    }
    let deg = g.degrees_in(mask);
    if deg.contains(&1) {
        return None;
    }
    if deg.iter().any(|&d| d >= 4) {
        return Some(BicycleShape::FigureEight);
    }
    let has_bridge = bits::elements(mask).any(|e| {
        let c = g.component_census(mask & !bits::bit(e));
        c.vertices - c.forest_edges > 1 || c.vertices < verts
    });
    Some(if has_bridge {
        BicycleShape::Dumbbell
    } else {
        BicycleShape::Theta
    })
}

/// Edge masks of all cycles: loops, parallel pairs, and longer cycles.
pub fn cycles(g: &MultiGraph) -> Result<Vec<u64>> {
    check_cap("cycle enumeration edges", 64, g.edge_count())?;
    let inc = g.incidence();
    let mut found: HashSet<u64> = HashSet::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            found.insert(bits::bit(e));
        }
    }
    // Cycles through `start` whose other vertices are all larger.
    for start in 0..g.vertex_count() {
        let mut on_path = vec![false; g.vertex_count()];
        on_path[start] = true;
        fn walk(
            g: &MultiGraph,
            inc: &[Vec<(usize, usize)>],
            start: usize,
            cur: usize,
            used: u64,
            on_path: &mut [bool],
            found: &mut HashSet<u64>,
        ) -> Result<()> {
            for &(e, w) in &inc[cur] {
                if bits::contains(used, e) || g.is_loop(e) {
                    continue;
                }
                if w == start {
                    if bits::count(used) >= 1 {
                        found.insert(used | bits::bit(e));
                        if found.len() > CYCLE_LIMIT {
                            return Err(Error::ResourceCap {
                                what: "cycle count",
                                limit: CYCLE_LIMIT,
                                actual: found.len(),
                            });
                        }
                    }
                    continue;
                }
                if w < start || on_path[w] {
                    continue;
                }
                on_path[w] = true;
                walk(g, inc, start, w, used | bits::bit(e), on_path, found)?;
                on_path[w] = false;
            }
            Ok(())
        }
        walk(g, &inc, start, start, 0, &mut on_path, &mut found)?;
    }
    let mut out: Vec<u64> = found.into_iter().collect();
    out.sort_by_key(|&c| bits::canonical_key(c));
    Ok(out)
}

fn vertex_mask(g: &MultiGraph, edges: u64) -> u128 {
    let mut m = 0u128;
    for e in bits::elements(edges) {
        let (u, v) = g.endpoints(e);
        m |= 1u128 << u | 1u128 << v;
    }
    m
}

/// All bicycles of `G`, built from pairs of cycles: two cycles meeting in
/// a vertex give a theta or figure-eight when their union has one more
/// edge than vertices; two disjoint cycles plus a connecting path give a
/// dumbbell.
pub fn bicircular_circuits(b: &BicircularMatroid) -> Result<Vec<Bicycle>> {
    let g = &b.graph;
    check_cap(
        "structural bicircular circuit edges",
        Caps::global().bicircular_circuits,
        g.edge_count(),
    )?;
    if g.vertex_count() > 128 {
        return Err(Error::ResourceCap {
            what: "structural bicircular circuit vertices",
            limit: 128,
            actual: g.vertex_count(),
        });
    }
    let cyc = cycles(g)?;
    let vm: Vec<u128> = cyc.iter().map(|&c| vertex_mask(g, c)).collect();
    let inc = g.incidence();
    let found: HashSet<u64> = (0..cyc.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut local = Vec::new();
            for j in i + 1..cyc.len() {
                if vm[i] & vm[j] != 0 {
                    let u = cyc[i] | cyc[j];
                    let verts = (vm[i] | vm[j]).count_ones() as usize;
                    if bits::count(u) == verts + 1 {
                        local.push(u);
                    }
                } else {
                    connecting_paths(g, &inc, vm[i], vm[j], &mut |p| local.push(cyc[i] | cyc[j] | p));
                }
            }
            local
        })
        .collect();
    let mut out: Vec<Bicycle> = found
        .into_iter()
        .map(|edges| Bicycle {
            edges,
            shape: bicycle_shape(g, edges).expect("cycle unions built here are bicycles"),
        })
        .collect();
    out.sort_by_key(|c| bits::canonical_key(c.edges));
    Ok(out)
}

/// Calls `emit` with the edge mask of every path from a vertex of `a` to
/// a vertex of `b` whose interior avoids both.
fn connecting_paths(g: &MultiGraph, inc: &[Vec<(usize, usize)>], a: u128, b: u128, emit: &mut dyn FnMut(u64)) {
    fn go(
        inc: &[Vec<(usize, usize)>],
        cur: usize,
        used: u64,
        visited: u128,
        a: u128,
        b: u128,
        emit: &mut dyn FnMut(u64),
    ) {
        for &(e, w) in &inc[cur] {
            if bits::contains(used, e) || w == cur {
                continue;
            }
            let wb = 1u128 << w;
            if b & wb != 0 {
                emit(used | bits::bit(e));
            } else if a & wb == 0 && visited & wb == 0 {
                go(inc, w, used | bits::bit(e), visited | wb, a, b, emit);
            }
        }
    }
    for s in 0..g.vertex_count() {
        if a >> s & 1 == 1 {
            go(inc, s, 0, a, a, b, emit);
        }
    }
}

/// How a sym-diff-2 pair was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMethod {
    Construction,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Symdiff2Pair {
    pub c1: u64,
    pub c2: u64,
    pub method: PairMethod,
    /// The maximal path used by the construction.
    pub path: Path,
    /// Why the construction was abandoned, when it was.
    pub note: Option<String>,
}

/// Two circuits with `|C1 △ C2| = 2`, for a graph of minimum degree 3.
///
/// Take a maximal path `v_1 e_1 .. v_k` through the smallest non-loop edge,
/// an edge `e_k ≠ e_{k-1}` at `v_k` (not ending at `v_1` if possible), and
/// two more edges `e`, `f` at `v_1`
/// outside `E' = {e_1, .., e_k}`. Maximality puts every other endpoint on
/// the path, so `E' + e` and `E' + f` are bicycles. When the edges cannot
/// be chosen, a search over all circuit pairs is used instead.
pub fn symdiff2_circuit_pair(b: &BicircularMatroid) -> Result<Symdiff2Pair> {
    let g = &b.graph;
    if g.vertex_count() == 0 || g.min_degree() < 3 {
        return Err(Error::precondition(format!(
            "minimum degree is {}, need at least 3",
            g.min_degree()
        )));
    }
    let seed = (0..g.edge_count())
        .find(|&e| !g.is_loop(e))
        .ok_or_else(|| Error::precondition("every edge is a loop"))?;
    let path = g.maximal_path(seed)?;
    let inc = g.incidence();
    let mut e_prime = bits::from_elements(path.edges.iter().copied());
    let vk = *path.vertices.last().unwrap();
    let v1 = path.vertices[0];
    let last = *path.edges.last().unwrap();
    let outcome = (|| -> std::result::Result<(u64, u64), String> {
        // Prefer an edge that avoids v_1, so that v_1 keeps two free edges.
        let candidates = || inc[vk].iter().filter(|&&(e, _)| e != last);
        let &(ek, _) = candidates()
            .find(|&&(_, w)| w != v1 || vk == v1)
            .or_else(|| candidates().next())
            .ok_or("no second edge at the end of the path")?;
        e_prime |= bits::bit(ek);
        let extra: Vec<usize> = inc[v1]
            .iter()
            .map(|&(e, _)| e)
            .filter(|&e| !bits::contains(e_prime, e))
            .take(2)
            .collect();
        if extra.len() < 2 {
            return Err(format!(
                "fewer than two edges at vertex {v1} avoid the path and e_k = {ek}"
            ));
        }
        let c1 = e_prime | bits::bit(extra[0]);
        let c2 = e_prime | bits::bit(extra[1]);
        if b.matroid.is_circuit(c1) && b.matroid.is_circuit(c2) {
            Ok((c1, c2))
        } else {
            Err("constructed sets are not both circuits".into())
        }
    })();
    match outcome {
        Ok((c1, c2)) => Ok(Symdiff2Pair {
            c1,
            c2,
            method: PairMethod::Construction,
            path,
            note: None,
        }),
        Err(note) => {
            let (c1, c2) = symdiff2_by_search(b)?.ok_or_else(|| {
                Error::SearchExhausted(format!(
                    "no circuit pair with symmetric difference 2 in graph with edges {:?}",
                    g.edges()
                ))
            })?;
            Ok(Symdiff2Pair {
                c1,
                c2,
                method: PairMethod::Fallback,
                path,
                note: Some(note),
            })
        }
    }
}

/// First pair `C1 < C2` (canonical order) of circuits differing in two
/// elements.
pub fn symdiff2_by_search(b: &BicircularMatroid) -> Result<Option<(u64, u64)>> {
    let cs: Vec<u64> = bicircular_circuits(b)?.into_iter().map(|c| c.edges).collect();
    let set: HashSet<u64> = cs.iter().copied().collect();
    let g = b.matroid.ground();
    for &c in &cs {
        for y in bits::elements(c) {
            for x in bits::elements(g & !c) {
                let d = (c & !bits::bit(y)) | bits::bit(x);
                if set.contains(&d) {
                    let (p, q) = if bits::canonical_key(c) <= bits::canonical_key(d) {
                        (c, d)
                    } else {
                        (d, c)
                    };
                    return Ok(Some((p, q)));
                }
            }
        }
    }
    Ok(None)
}

/// Whether the degree precondition and cosimplicity of `B(G)` agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CosimplicityCheck {
    pub min_degree_at_least_3: bool,
    pub bicircular_cosimple: bool,
}

impl CosimplicityCheck {
    pub fn agree(&self) -> bool {
        self.min_degree_at_least_3 == self.bicircular_cosimple
    }
}

pub fn cosimplicity_check(b: &BicircularMatroid) -> CosimplicityCheck {
    CosimplicityCheck {
        min_degree_at_least_3: b.graph.vertex_count() > 0 && b.graph.min_degree() >= 3,
        bicircular_cosimple: is_cosimple(&b.matroid),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DcViolation {
    Leaf { vertex: usize },
    TooManyDistinguished { count: usize },
    SplitClass { subdivision_class: u64 },
}

/// Structure of `G[D]` for a double circuit `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DcStructure {
    pub double_circuit: u64,
    /// Vertices of degree at least 3 in `G[D]`.
    pub distinguished: Vec<usize>,
    pub subdivision_classes: Vec<u64>,
    pub circuit_classes: Vec<u64>,
    pub violations: Vec<DcViolation>,
}

/// Checks that `G[D]` has no leaves, at most four distinguished vertices,
/// and that each subdivision class lies inside one class of the circuit
/// partition.
pub fn dc_structure(b: &BicircularMatroid, d: u64) -> Result<DcStructure> {
    if !is_double_circuit(&b.matroid, d) {
        return Err(Error::invalid(format!("{} is not a double circuit", bits::display(d))));
    }
    let report = circuit_partition(&b.matroid, d)?;
    let g = &b.graph;
    let deg = g.degrees_in(d);
    let mut violations = Vec::new();
    for (v, &k) in deg.iter().enumerate() {
        if k == 1 {
            violations.push(DcViolation::Leaf { vertex: v });
        }
    }
    let distinguished: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] >= 3).collect();
    if distinguished.len() > 4 {
        violations.push(DcViolation::TooManyDistinguished {
            count: distinguished.len(),
        });
    }
    let subdivision_classes = if violations.is_empty() {
        g.subdivision_structure_in(d)?.classes
    } else {
        Vec::new()
    };
    for &sc in &subdivision_classes {
        if !report.classes.iter().any(|&c| sc & c == sc) {
            violations.push(DcViolation::SplitClass { subdivision_class: sc });
        }
    }
    Ok(DcStructure {
        double_circuit: d,
        distinguished,
        subdivision_classes,
        circuit_classes: report.classes,
        violations,
    })
}

/// Outcome of the sweep over small multigraphs.
#[derive(Debug, Clone, Serialize)]
pub struct UniformClassification {
    pub max_vertices: usize,
    pub max_multiplicity: usize,
    pub max_loops: usize,
    /// Graphs (labelled, before isomorphism reduction) visited by the search.
    pub graphs_examined: usize,
    /// For each uniform type `(r, n)` found: number of pairwise
    /// non-isomorphic graphs and the first one found.
    pub types: BTreeMap<String, UniformType>,
    /// Uniform types outside the known list, with a witness graph.
    pub outside_list: Vec<UniformType>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniformType {
    pub rank: usize,
    pub size: usize,
    pub graphs: usize,
    pub example: MultiGraph,
}

/// `U_{1,n}`, `U_{2,n}`, `U_{n,n}`, `U_{n-1,n}`, `U_{3,5}`, `U_{3,6}`,
/// `U_{4,6}`.
pub fn in_uniform_bicircular_list(r: usize, n: usize) -> bool {
    r == 1 || r == 2 || r == n || r + 1 == n || matches!((r, n), (3, 5) | (3, 6) | (4, 6))
}

/// Rank `r` if `B(G)` is `U_{r,m}`.
fn uniform_rank(g: &MultiGraph) -> Option<usize> {
    let m = Matroid::bicircular(g).ok()?;
    let r = m.full_rank();
    bits::k_subsets(g.edge_count(), r)
        .all(|s| m.is_independent(s))
        .then_some(r)
}

/// Sweeps all multigraphs on `max_vertices` labelled vertices with edge
/// multiplicity at most `max_multiplicity` and at most `max_loops` loops
/// per vertex, recording every uniform bicircular matroid. Adding an edge
/// to a non-uniform `B(G)` keeps it non-uniform (uniform matroids are
/// closed under deletion), which prunes the search.
pub fn check_uniform_classification(
    max_vertices: usize,
    max_multiplicity: usize,
    max_loops: usize,
) -> Result<UniformClassification> {
    if max_vertices > 6 {
        return Err(Error::ResourceCap {
            what: "classification sweep vertices",
            limit: 6,
            actual: max_vertices,
        });
    }
    let mut slots: Vec<(usize, usize, usize)> = Vec::new();
    for u in 0..max_vertices {
        slots.push((u, u, max_loops));
        for v in u + 1..max_vertices {
            slots.push((u, v, max_multiplicity));
        }
    }
    let first_choices: Vec<usize> = (0..=slots.first().map_or(0, |s| s.2)).collect();
    let results: Vec<(usize, Vec<(Vec<u8>, usize, MultiGraph)>)> = first_choices
        .par_iter()
        .map(|&k0| {
            let mut edges = Vec::new();
            let mut found = Vec::new();
            let mut seen = HashSet::new();
            let mut visited = 0usize;
            if let Some(&(u, v, _)) = slots.first() {
                edges.extend(std::iter::repeat_n((u, v), k0));
            }
            sweep(max_vertices, &slots, 1, &mut edges, &mut visited, &mut seen, &mut found);
            (visited, found)
        })
        .collect();
    let mut graphs_examined = 0;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut types: BTreeMap<(usize, usize), UniformType> = BTreeMap::new();
    for (visited, found) in results {
        graphs_examined += visited;
        for (code, r, g) in found {
            if !seen.insert(code) {
                continue;
            }
            let entry = types.entry((r, g.edge_count())).or_insert_with(|| UniformType {
                rank: r,
                size: g.edge_count(),
                graphs: 0,
                example: g.clone(),
            });
            entry.graphs += 1;
        }
    }
    let outside_list = types
        .values()
        .filter(|t| !in_uniform_bicircular_list(t.rank, t.size))
        .cloned()
        .collect();
    Ok(UniformClassification {
        max_vertices,
        max_multiplicity,
        max_loops,
        graphs_examined,
        types: types
            .into_iter()
            .map(|((r, n), t)| (format!("U_{{{r},{n}}}"), t))
            .collect(),
        outside_list,
    })
}

/// Returns false when the graph built so far is not uniform.
fn sweep(
    nv: usize,
    slots: &[(usize, usize, usize)],
    i: usize,
    edges: &mut Vec<(usize, usize)>,
    visited: &mut usize,
    seen: &mut HashSet<Vec<u8>>,
    found: &mut Vec<(Vec<u8>, usize, MultiGraph)>,
) -> bool {
    *visited += 1;
    let g = MultiGraph::new(nv, edges.clone()).expect("slots stay in range");
    let Some(r) = uniform_rank(&g) else {
        return false;
    };
    if i == slots.len() {
        let code = g.canonical_code();
        if seen.insert(code.clone()) {
            found.push((code, r, g));
        }
        return true;
    }
    let (u, v, max) = slots[i];
    for k in 0..=max {
        let before = edges.len();
        edges.extend(std::iter::repeat_n((u, v), k));
        let uniform = sweep(nv, slots, i + 1, edges, visited, seen, found);
        edges.truncate(before);
        if !uniform {
            break;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, parse_edge_list};
    use crate::matroid::{circuits, is_isomorphic};

    fn b(name: &str) -> BicircularMatroid {
        make_bicircular(&named_graph(name).unwrap()).unwrap()
    }

    #[test]
    fn small_bicircular_matroids() {
        assert!(b("theta(3)")
            .matroid
            .same_rank_function(&Matroid::uniform(2, 3).unwrap()));
        assert!(b("bouquet(2)")
            .matroid
            .same_rank_function(&Matroid::uniform(1, 2).unwrap()));
        assert!(is_isomorphic(&b("k4").matroid, &Matroid::uniform(4, 6).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn structural_circuits_examples() {
        let t = bicircular_circuits(&b("theta(3)")).unwrap();
        assert_eq!(
            t,
            vec![Bicycle {
                edges: 0b111,
                shape: BicycleShape::Theta
            }]
        );
        let f = bicircular_circuits(&b("bouquet(2)")).unwrap();
        assert_eq!(
            f,
            vec![Bicycle {
                edges: 0b11,
                shape: BicycleShape::FigureEight
            }]
        );
        let k = bicircular_circuits(&b("k4")).unwrap();
        assert_eq!(k.len(), 6);
        assert!(k.iter().all(|c| bits::count(c.edges) == 5));
        let g = parse_edge_list("0 0\n1 1\n0 1").unwrap();
        let d = bicircular_circuits(&make_bicircular(&g).unwrap()).unwrap();
        assert_eq!(
            d,
            vec![Bicycle {
                edges: 0b111,
                shape: BicycleShape::Dumbbell
            }]
        );
    }

    #[test]
    fn structural_matches_generic() {
        for name in [
            "k4",
            "petersen",
            "prism(3)",
            "doubled_triangle",
            "wheel(4)",
            "bouquet(3)",
        ] {
            let bm = b(name);
            let s: Vec<u64> = bicircular_circuits(&bm).unwrap().iter().map(|c| c.edges).collect();
            assert_eq!(s, circuits(&bm.matroid).unwrap(), "{name}");
        }
    }

    #[test]
    fn symdiff2_examples() {
        for name in ["k4", "theta(4)", "petersen", "doubled_triangle", "prism(3)"] {
            let bm = b(name);
            let p = symdiff2_circuit_pair(&bm).unwrap();
            assert!(bm.matroid.is_circuit(p.c1) && bm.matroid.is_circuit(p.c2), "{name}");
            assert_eq!(bits::count(p.c1 ^ p.c2), 2, "{name}");
        }
        let k4 = symdiff2_circuit_pair(&b("k4")).unwrap();
        assert_eq!(k4.method, PairMethod::Construction);
        assert!(symdiff2_circuit_pair(&b("cycle(4)")).is_err());
    }

    #[test]
    fn dc_structure_examples() {
        let s = dc_structure(&b("theta(4)"), 0b1111).unwrap();
        assert_eq!(s.distinguished, vec![0, 1]);
        assert_eq!(s.subdivision_classes.len(), 4);
        assert!(s.violations.is_empty());
        let s = dc_structure(&b("bouquet(3)"), 0b111).unwrap();
        assert_eq!(s.distinguished, vec![0]);
        assert!(s.violations.is_empty());
        assert!(dc_structure(&b("bouquet(3)"), 0b11).is_err());
    }

    #[test]
    fn uniform_list_membership() {
        assert!(in_uniform_bicircular_list(4, 6));
        assert!(in_uniform_bicircular_list(3, 3));
        assert!(!in_uniform_bicircular_list(5, 7));
        assert!(!in_uniform_bicircular_list(3, 7));
    }

    #[test]
    fn classification_on_three_vertices() {
        let c = check_uniform_classification(3, 2, 2).unwrap();
        assert!(c.outside_list.is_empty());
        assert!(c.types.contains_key("U_{3,6}"));
    }
}
