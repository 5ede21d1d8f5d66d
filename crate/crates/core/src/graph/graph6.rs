//! graph6 encoding of simple undirected graphs.

use super::MultiGraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn byte_error(offset: usize, msg: impl Into<String>) -> Error {
    Error::parse(format!("byte {offset}"), msg)
}

/// Decodes one graph6 record. Edge ids follow the bit order of the format:
/// column `j` ascending, then row `i < j` ascending.
pub fn parse_graph6(payload: &str) -> Result<MultiGraph> {
    let trimmed = payload.trim_end_matches(['\n', '\r']);
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(byte_error(
                base + i,
                format!("character 0x{b:02x} outside the graph6 range"),
            ));
        }
    }
    let (n, mut pos) = decode_n(body, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have != need {
        return Err(byte_error(
            base + pos,
            format!("expected {need} adjacency bytes for {n} vertices, found {have}"),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    MultiGraph::new(n, edges)
}

fn decode_n(body: &[u8], base: usize) -> Result<(usize, usize)> {
    let first = *body.first().ok_or_else(|| byte_error(base, "empty graph6 record"))?;
    if first < 126 {
        return Ok(((first - 63) as usize, 1));
    }
    let (len, start) = if body.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
    if body.len() < start + len {
        return Err(byte_error(base + body.len(), "truncated vertex-count field"));
    }
    let n = body[start..start + len]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    Ok((n, start + len))
}

/// Encodes a simple graph; loops and parallel edges are rejected.
pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    let n = g.vertex_count();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        if u == v {
            return Err(Error::invalid("graph6 cannot encode loops"));
        }
        let (a, b) = (u.min(v), u.max(v));
        if adj[a * n + b] {
            return Err(Error::invalid("graph6 cannot encode parallel edges"));
        }
        adj[a * n + b] = true;
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
