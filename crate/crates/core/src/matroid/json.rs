//! JSON form of matroids.
//!
//! ```json
//! {"n": 4, "kind": "uniform", "rank": 2}
//! {"n": 3, "kind": "graphic", "vertices": 3, "edges": [[0,1],[1,2],[2,0]]}
//! {"n": 4, "kind": "lattice_path", "upper": "NNEE", "lower": "EENN"}
//! {"n": 3, "bases": [3, 5, 6]}
//! {"n": 4, "kind": "dual", "of": {...}}
//! {"n": 2, "kind": "minor", "of": {...}, "delete": 1, "contract": 2}
//! {"n": 3, "kind": "linear", "columns": [[1,0],[0,1],[1,1]]}
//! ```

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{LatticePathBounds, Matroid, Repr};
use crate::bits;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::parse(format!("field `{key}`"), "missing"))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(format!("field `{key}`"), "expected a non-negative integer"))
}

fn as_mask(v: &Value, key: &str) -> Result<u64> {
    match v.get(key) {
        None => Ok(0),
        Some(x) => x
            .as_u64()
            .ok_or_else(|| Error::parse(format!("field `{key}`"), "expected a subset mask")),
    }
}

fn parse_graph(v: &Value) -> Result<MultiGraph> {
    let edges = field(v, "edges")?
        .as_array()
        .ok_or_else(|| Error::parse("field `edges`", "expected an array"))?;
    let mut out = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let pair = e.as_array().filter(|p| p.len() == 2);
        let ends = pair.and_then(|p| Some((p[0].as_u64()? as usize, p[1].as_u64()? as usize)));
        out.push(ends.ok_or_else(|| Error::parse(format!("edges[{i}]"), "expected [u, v]"))?);
    }
    let vertices = match v.get("vertices") {
        Some(_) => as_usize(v, "vertices")?,
        None => out.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0),
    };
    MultiGraph::new(vertices, out)
}

/// Parses a matroid description and spot-checks the rank axioms.
pub fn matroid_from_json(text: &str) -> Result<Matroid> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let m = from_value(&v)?;
    m.check_rank_axioms(300, 11)?;
    Ok(m)
}

fn from_value(v: &Value) -> Result<Matroid> {
    let kind = match v.get("kind") {
        Some(k) => k
            .as_str()
            .ok_or_else(|| Error::parse("field `kind`", "expected a string"))?,
        None if v.get("bases").is_some() => "explicit_bases",
        None => return Err(Error::parse("field `kind`", "missing")),
    };
    let m = match kind {
        "uniform" => Matroid::uniform(as_usize(v, "rank")?, as_usize(v, "n")?)?,
        "graphic" => Matroid::graphic(&parse_graph(v)?)?,
        "bicircular" => Matroid::bicircular(&parse_graph(v)?)?,
        "lattice_path" => {
            let s = |k: &str| -> Result<String> {
                Ok(field(v, k)?
                    .as_str()
                    .ok_or_else(|| Error::parse(format!("field `{k}`"), "expected a step string"))?
                    .to_string())
            };
            Matroid::lattice_path(LatticePathBounds::new(&s("upper")?, &s("lower")?)?)
        }
        "explicit_bases" | "bases" => {
            let list = field(v, "bases")?
                .as_array()
                .ok_or_else(|| Error::parse("field `bases`", "expected an array"))?;
            let bases = list
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    b.as_u64()
                        .ok_or_else(|| Error::parse(format!("bases[{i}]"), "expected a mask"))
                })
                .collect::<Result<Vec<u64>>>()?;
            Matroid::from_bases(as_usize(v, "n")?, bases)?
        }
        "dual" => from_value(field(v, "of")?)?.dual(),
        "minor" => from_value(field(v, "of")?)?.minor(as_mask(v, "delete")?, as_mask(v, "contract")?)?,
        "linear" => {
            let cols = field(v, "columns")?
                .as_array()
                .ok_or_else(|| Error::parse("field `columns`", "expected an array"))?;
            let mut out = Vec::with_capacity(cols.len());
            for (i, c) in cols.iter().enumerate() {
                let entries = c
                    .as_array()
                    .ok_or_else(|| Error::parse(format!("columns[{i}]"), "expected an array"))?;
                let col = entries
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => s.parse::<BigInt>().ok(),
                        _ => x.as_i64().map(BigInt::from),
                    })
                    .collect::<Option<Vec<BigInt>>>()
                    .ok_or_else(|| Error::parse(format!("columns[{i}]"), "expected integers"))?;
                out.push(col);
            }
            Matroid::linear(out)?
        }
        other => return Err(Error::parse("field `kind`", format!("unknown kind `{other}`"))),
    };
    if let Some(n) = v.get("n") {
        if n.as_u64() != Some(m.size() as u64) {
            return Err(Error::invalid(format!(
                "declared n = {n} but the description has {} elements",
                m.size()
            )));
        }
    }
    Ok(m)
}

fn graph_value(g: &MultiGraph) -> Value {
    let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([u, v])).collect();
    json!({"vertices": g.vertex_count(), "edges": edges})
}

/// Serialises a matroid. Kinds without a finite description (tables,
/// parallel extensions) are written as explicit bases.
pub fn matroid_to_json(m: &Matroid) -> Value {
    let n = m.size();
    match &*m.repr {
        Repr::Uniform { rank } => json!({"n": n, "kind": "uniform", "rank": rank}),
        Repr::Graphic(g) | Repr::Bicircular(g) => {
            let mut v = graph_value(g);
            let obj = v.as_object_mut().unwrap();
            let mut out = serde_json::Map::new();
            out.insert("n".into(), json!(n));
            out.insert("kind".into(), json!(m.kind().to_string()));
            out.append(obj);
            Value::Object(out)
        }
        Repr::LatticePath(b) => json!({"n": n, "kind": "lattice_path", "upper": b.upper(), "lower": b.lower()}),
        Repr::Dual(inner) => json!({"n": n, "kind": "dual", "of": matroid_to_json(inner)}),
        Repr::Minor { of, keep, contract, .. } => {
            let delete = of.ground() & !contract & !bits::from_elements(keep.iter().copied());
            json!({"n": n, "kind": "minor", "of": matroid_to_json(of), "delete": delete, "contract": contract})
        }
        Repr::Linear(cols) => {
            let cols: Vec<Value> = cols
                .iter()
                .map(|c| {
                    Value::Array(
                        c.iter()
                            .map(|x| i64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v)))
                            .collect(),
                    )
                })
                .collect();
            json!({"n": n, "kind": "linear", "columns": cols})
        }
        Repr::Table { source: Some(s), .. } => matroid_to_json(s),
        _ => {
            let r = m.full_rank();
            let bases: Vec<u64> = crate::bits::k_subsets(n, r).filter(|&b| m.is_independent(b)).collect();
            json!({"n": n, "kind": "explicit_bases", "bases": bases})
        }
    }
}
