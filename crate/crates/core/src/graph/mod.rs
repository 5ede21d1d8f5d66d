//! Multigraphs with loops and parallel edges.

mod graph6;
mod named;

use std::collections::VecDeque;

use serde::Serialize;

pub use graph6::{parse_graph6, to_graph6};
pub use named::{named_graph, NamedGraph};

use crate::bits;
use crate::error::{Error, Result};

/// Undirected multigraph. Edge ids are positions in `edges`; a loop is an
/// edge `(v, v)` and contributes 2 to the degree of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge-list" | "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            _ => Err(Error::invalid(format!("unknown graph format `{s}`"))),
        }
    }
}

/// Basic statistics of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    /// `None` stands for infinite girth (a forest).
    pub girth: Option<usize>,
    pub min_degree: usize,
    pub is_connected: bool,
}

/// A path `v_1 e_1 v_2 ... e_{k-1} v_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Subdivision classes of a leafless graph and the graph obtained by
/// suppressing every degree-2 vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionStructure {
    /// Edge masks, one per class, sorted by smallest edge id.
    pub classes: Vec<u64>,
    /// Parallel to `classes`: true for a bare cycle component.
    pub cycle_class: Vec<bool>,
    /// Edge `i` of `suppressed` corresponds to `classes[i]`.
    pub suppressed: MultiGraph,
    /// Vertices of degree at least 3, in original labels.
    pub branch_vertices: Vec<usize>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge {id} = ({u},{v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
        }
        Ok(MultiGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn all_edges(&self) -> u64 {
        bits::full(self.edges.len())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees()[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.degrees_in(u64::MAX)
    }

    /// Degrees in the spanning subgraph with the edges of `mask`.
    pub fn degrees_in(&self, mask: u64) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if e < 64 && !bits::contains(mask, e) {
                continue;
            }
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Vertices touched by the edges of `mask`.
    pub fn vertices_of(&self, mask: u64) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        for e in bits::elements(mask) {
            let (u, v) = self.edges[e];
            seen[u] = true;
            seen[v] = true;
        }
        (0..self.vertex_count).filter(|&v| seen[v]).collect()
    }

    /// Incidence list: for every vertex, `(edge, other endpoint)` pairs in
    /// edge-id order. A loop appears once.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((e, v));
            if u != v {
                inc[v].push((e, u));
            }
        }
        inc
    }

    /// Cycle census of the spanning subgraph on `mask`: returns
    /// `(vertices touched, tree components, forest rank)` where the forest
    /// rank is the number of edges in a spanning forest.
    pub fn component_census(&self, mask: u64) -> ComponentCensus {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut touched = vec![false; self.vertex_count];
        let mut forest = 0;
        for e in bits::elements(mask) {
            let (u, v) = self.edges[e];
            touched[u] = true;
            touched[v] = true;
            if uf.union(u, v) {
                forest += 1;
            } else {
                uf.mark_cyclic(u);
            }
        }
        let mut vertices = 0;
        let mut acyclic = 0;
        for v in 0..self.vertex_count {
            if !touched[v] {
                continue;
            }
            vertices += 1;
            if uf.find(v) == v && !uf.cyclic[v] {
                acyclic += 1;
            }
        }
        ComponentCensus {
            vertices,
            acyclic_components: acyclic,
            forest_edges: forest,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            if uf.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Shortest cycle length; loops give 1 and parallel pairs give 2.
    /// `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        if self.has_loops() {
            return Some(1);
        }
        let inc = self.incidence();
        let mut best: Option<usize> = None;
        for root in 0..self.vertex_count {
            let mut dist = vec![usize::MAX; self.vertex_count];
            let mut via = vec![usize::MAX; self.vertex_count];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &(e, w) in &inc[u] {
                    if e == via[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn report(&self) -> GraphReport {
        GraphReport {
            girth: self.girth(),
            min_degree: self.min_degree(),
            is_connected: self.is_connected(),
        }
    }

    /// Greedy non-extendable path through `seed`. The tail end is extended
    /// first, then the head end, always by the smallest usable edge id.
    /// Every neighbour of either endpoint lies on the returned path.
    pub fn maximal_path(&self, seed: usize) -> Result<Path> {
        if seed >= self.edges.len() {
            return Err(Error::invalid(format!("edge {seed} does not exist")));
        }
        let (a, b) = self.edges[seed];
        if a == b {
            return Err(Error::invalid(format!("seed edge {seed} is a loop")));
        }
        let inc = self.incidence();
        let mut on_path = vec![false; self.vertex_count];
        on_path[a] = true;
        on_path[b] = true;
        let mut verts = VecDeque::from([a, b]);
        let mut edges = VecDeque::from([seed]);
        loop {
            let mut grew = false;
            while let Some(&(e, w)) = inc[*verts.back().unwrap()].iter().find(|&&(_, w)| !on_path[w]) {
                on_path[w] = true;
                verts.push_back(w);
                edges.push_back(e);
                grew = true;
            }
            while let Some(&(e, w)) = inc[*verts.front().unwrap()].iter().find(|&&(_, w)| !on_path[w]) {
                on_path[w] = true;
                verts.push_front(w);
                edges.push_front(e);
                grew = true;
            }
            if !grew {
                break;
            }
        }
        Ok(Path {
            vertices: verts.into(),
            edges: edges.into(),
        })
    }

    /// Subdivision structure of the whole graph.
    pub fn subdivision_structure(&self) -> Result<SubdivisionStructure> {
        if self.edges.len() > 64 {
            return Err(Error::ResourceCap {
                what: "subdivision structure edges",
                limit: 64,
                actual: self.edges.len(),
            });
        }
        self.subdivision_structure_in(self.all_edges())
    }

    /// Subdivision structure of the spanning subgraph on `mask`. Class
    /// masks use the original edge ids.
    pub fn subdivision_structure_in(&self, mask: u64) -> Result<SubdivisionStructure> {
        let deg = self.degrees_in(mask);
        if let Some(v) = (0..self.vertex_count).find(|&v| deg[v] == 1) {
            return Err(Error::precondition(format!("vertex {v} is a leaf")));
        }
        let mut inc = vec![Vec::new(); self.vertex_count];
        for e in bits::elements(mask) {
            let (u, v) = self.edges[e];
            inc[u].push((e, v));
            if u != v {
                inc[v].push((e, u));
            }
        }
        let branch: Vec<usize> = (0..self.vertex_count).filter(|&v| deg[v] >= 3).collect();
        let mut used = 0u64;
        let mut found: Vec<(u64, bool, usize, usize)> = Vec::new();
        // Walk from every branch vertex along each unused incident edge.
        for &start in &branch {
            for &(e0, w0) in &inc[start] {
                if bits::contains(used, e0) {
                    continue;
                }
                let mut class = bits::bit(e0);
                let (mut prev_edge, mut cur) = (e0, w0);
                while deg[cur] == 2 {
                    let &(e, w) = inc[cur]
                        .iter()
                        .find(|&&(e, _)| e != prev_edge)
                        .expect("degree-2 vertex has a second edge");
                    class |= bits::bit(e);
                    prev_edge = e;
                    cur = w;
                }
                used |= class;
                found.push((class, false, start, cur));
            }
        }
        // Whatever is left lies on components that are bare cycles.
        while used != mask {
            let e0 = (mask & !used).trailing_zeros() as usize;
            let (start, mut cur) = self.edges[e0];
            let mut class = bits::bit(e0);
            let mut prev_edge = e0;
            while cur != start {
                let &(e, w) = inc[cur]
                    .iter()
                    .find(|&&(e, _)| e != prev_edge)
                    .expect("cycle vertex has a second edge");
                class |= bits::bit(e);
                prev_edge = e;
                cur = w;
            }
            used |= class;
            found.push((class, true, start, start));
        }
        found.sort_by_key(|&(c, ..)| c.trailing_zeros());

        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for &v in &branch {
            label[v] = next;
            next += 1;
        }
        let mut sup_edges = Vec::with_capacity(found.len());
        for &(_, is_cycle, u, v) in &found {
            if is_cycle {
                // A bare cycle suppresses to a loop on a fresh vertex.
                sup_edges.push((next, next));
                next += 1;
            } else {
                sup_edges.push((label[u], label[v]));
            }
        }
        Ok(SubdivisionStructure {
            classes: found.iter().map(|f| f.0).collect(),
            cycle_class: found.iter().map(|f| f.1).collect(),
            suppressed: MultiGraph::new(next, sup_edges)?,
            branch_vertices: branch,
        })
    }

    /// Replaces edge `e` by a path of `parts` edges (new vertices appended).
    pub fn subdivide(&self, e: usize, parts: usize) -> MultiGraph {
        assert!(parts >= 1);
        let (u, v) = self.edges[e];
        if parts == 1 {
            return self.clone();
        }
        let base = self.vertex_count;
        let mut edges = self.edges.clone();
        edges[e] = (u, base);
        for i in 0..parts - 2 {
            edges.push((base + i, base + i + 1));
        }
        edges.push((base + parts - 2, v));
        MultiGraph::new(base + parts - 1, edges).expect("subdivision keeps endpoints valid")
    }

    /// Spanning subgraph on the edges of `mask`, with edges renumbered in
    /// ascending order and isolated vertices dropped.
    pub fn edge_subgraph(&self, mask: u64) -> MultiGraph {
        let verts = self.vertices_of(mask);
        let mut label = vec![usize::MAX; self.vertex_count];
        for (i, &v) in verts.iter().enumerate() {
            label[v] = i;
        }
        let edges = bits::elements(mask)
            .map(|e| {
                let (u, v) = self.edges[e];
                (label[u], label[v])
            })
            .collect();
        MultiGraph::new(verts.len(), edges).expect("relabelled endpoints are valid")
    }

    /// Multiplicity matrix (loops on the diagonal) under a vertex relabelling.
    fn multiplicity_code(&self, perm: &[usize]) -> Vec<u8> {
        let n = self.vertex_count;
        let mut code = vec![0u8; n * n];
        for &(u, v) in &self.edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            code[a * n + b] += 1;
        }
        code
    }

    /// Canonical form under vertex relabelling, by brute force over all
    /// permutations. Intended for graphs with at most 8 vertices.
    pub fn canonical_code(&self) -> Vec<u8> {
        let n = self.vertex_count;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.multiplicity_code(&perm);
        while next_permutation(&mut perm) {
            let code = self.multiplicity_code(&perm);
            if code < best {
                best = code;
            }
        }
        let mut out = vec![n as u8];
        out.extend(best);
        out
    }

    /// Isomorphism of multigraphs (ignoring edge labels) by backtracking
    /// over degree-compatible vertex maps.
    pub fn is_isomorphic_to(&self, other: &MultiGraph) -> bool {
        let n = self.vertex_count;
        if n != other.vertex_count || self.edges.len() != other.edges.len() {
            return false;
        }
        let ma = self.multiplicity_code(&(0..n).collect::<Vec<_>>());
        let mb = other.multiplicity_code(&(0..n).collect::<Vec<_>>());
        let mult = |m: &[u8], a: usize, b: usize| m[a.min(b) * n + a.max(b)];
        let da = self.degrees();
        let db = other.degrees();
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            i: usize,
            n: usize,
            map: &mut [usize],
            used: &mut [bool],
            ok: &dyn Fn(&[usize], usize) -> bool,
            da: &[usize],
            db: &[usize],
        ) -> bool {
            if i == n {
                return true;
            }
            for t in 0..n {
                if used[t] || da[i] != db[t] {
                    continue;
                }
                map[i] = t;
                if ok(map, i) {
                    used[t] = true;
                    if go(i + 1, n, map, used, ok, da, db) {
                        return true;
                    }
                    used[t] = false;
                }
            }
            map[i] = usize::MAX;
            false
        }
        let ok = |map: &[usize], i: usize| (0..=i).all(|j| mult(&ma, i, j) == mult(&mb, map[i], map[j]));
        go(0, n, &mut map, &mut used, &ok, &da, &db)
    }
}

/// Result of [`MultiGraph::component_census`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCensus {
    pub vertices: usize,
    pub acyclic_components: usize,
    pub forest_edges: usize,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    cyclic: Vec<bool>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            cyclic: vec![false; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.cyclic[rb] |= self.cyclic[ra];
        true
    }

    pub(crate) fn mark_cyclic(&mut self, a: usize) {
        let r = self.find(a);
        self.cyclic[r] = true;
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Parses an edge list: one `u v` pair per line, `#` comments, blank lines
/// ignored. The vertex count is one more than the largest endpoint.
pub fn parse_edge_list(payload: &str) -> Result<MultiGraph> {
    let mut edges = Vec::new();
    let mut max_v: Option<usize> = None;
    for (lineno, raw) in payload.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let loc = || format!("line {}", lineno + 1);
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = parts
                .next()
                .ok_or_else(|| Error::parse(loc(), "expected two vertex indices"))?;
            tok.parse()
                .map_err(|_| Error::parse(loc(), format!("`{tok}` is not a vertex index")))
        };
        let u = next()?;
        let v = next()?;
        if parts.next().is_some() {
            return Err(Error::parse(loc(), "trailing tokens after edge"));
        }
        max_v = Some(max_v.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    MultiGraph::new(max_v.map_or(0, |m| m + 1), edges)
}

/// Parses a graph in the declared format.
pub fn parse_graph(format: GraphFormat, payload: &str) -> Result<MultiGraph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(payload.trim()),
        GraphFormat::EdgeList => parse_edge_list(payload),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        let g = parse_edge_list("0 0").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.degree(0), 2);
        let g = parse_edge_list("# comment\n\n0 1 # tail\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors_name_lines() {
        let err = parse_edge_list("0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location == "line 2"));
        assert!(parse_edge_list("0\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(named_graph("cycle(3)").unwrap().girth(), Some(3));
        assert_eq!(named_graph("petersen").unwrap().girth(), Some(5));
        assert_eq!(named_graph("path(3)").unwrap().girth(), None);
        assert_eq!(named_graph("theta(2)").unwrap().girth(), Some(2));
        assert_eq!(named_graph("bouquet(1)").unwrap().girth(), Some(1));
        assert_eq!(named_graph("k4").unwrap().girth(), Some(3));
    }

    #[test]
    fn named_graph_shapes() {
        let p = named_graph("petersen").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        let d = named_graph("dodecahedron").unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (20, 30));
        assert!(d.degrees().iter().all(|&x| x == 3));
        assert_eq!(d.girth(), Some(5));
        assert!(d.is_connected());
        let t = named_graph("theta(3)").unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (2, 3));
        assert_eq!(named_graph("parallel(3)").unwrap(), t);
        let dt = named_graph("doubled_triangle").unwrap();
        assert_eq!(dt.edge_count(), 6);
        assert!(named_graph("nonsense").is_err());
        assert!(named_graph("theta").is_err());
        assert_eq!(named_graph("prism3").unwrap().edge_count(), 9);
    }

    #[test]
    fn maximal_path_examples() {
        let p = named_graph("path(3)").unwrap().maximal_path(0).unwrap();
        assert_eq!(p.vertices.len(), 3);
        let k4 = named_graph("k4").unwrap();
        assert_eq!(k4.maximal_path(0).unwrap().vertices.len(), 4);
        let g = parse_edge_list("0 1\n1 2\n2 0\n0 3").unwrap();
        let p = g.maximal_path(3).unwrap();
        assert_eq!(p.vertices, vec![2, 1, 0, 3]);
        assert_eq!(p.edges, vec![1, 0, 3]);
        assert!(named_graph("bouquet(2)").unwrap().maximal_path(0).is_err());
    }

    #[test]
    fn subdivision_examples() {
        let s = named_graph("theta(3)").unwrap().subdivision_structure().unwrap();
        assert_eq!(s.classes, vec![1, 2, 4]);
        assert_eq!(s.branch_vertices, vec![0, 1]);
        assert_eq!(s.suppressed.edge_count(), 3);

        // 6-cycle with a chord between 0 and 3
        let g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3").unwrap();
        let s = g.subdivision_structure().unwrap();
        assert_eq!(s.classes.len(), 3);
        assert_eq!(s.branch_vertices, vec![0, 3]);
        let mut sizes: Vec<usize> = s.classes.iter().map(|&c| bits::count(c)).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 3]);

        let s = named_graph("cycle(4)").unwrap().subdivision_structure().unwrap();
        assert_eq!(s.classes, vec![0b1111]);
        assert_eq!(s.cycle_class, vec![true]);
        assert!(s.branch_vertices.is_empty());

        assert!(named_graph("path(3)").unwrap().subdivision_structure().is_err());
    }

    #[test]
    fn isomorphism_and_canonical_codes() {
        let a = parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 3").unwrap();
        let b = parse_edge_list("3 2\n2 1\n1 3\n3 0\n0 0").unwrap();
        assert!(a.is_isomorphic_to(&b));
        assert_eq!(a.canonical_code(), b.canonical_code());
        let c = parse_edge_list("0 1\n1 2\n2 0\n1 3\n0 0").unwrap();
        assert!(!a.is_isomorphic_to(&c));
        assert_ne!(a.canonical_code(), c.canonical_code());
    }

    #[test]
    fn census_counts_cycles() {
        let g = named_graph("theta(3)").unwrap();
        let c = g.component_census(0b011);
        assert_eq!((c.vertices, c.acyclic_components), (2, 0));
        let c = g.component_census(0b001);
        assert_eq!((c.vertices, c.acyclic_components), (2, 1));
    }
}
