//! JSON instances. Schema errors carry the JSON path of the offending value.
//!
//! - graph / hypergraph: `{"vertices": n, "edges": [[1, 2, 3], ...]}`
//! - ideal: `{"vars": n, "gens": [[e1, ..., en], ...]}` (a hypergraph file is
//!   also accepted and read as its edge ideal)

use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sqfree_core::hypergraph::Violation;
use sqfree_core::{Graph, Hypergraph, Monomial, MonomialIdeal};
use thiserror::Error;

use crate::corpus;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("cannot read {file}: {message}")]
    Read { file: String, message: String },
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Schema { path: path.into(), message: message.into() }
}

type Parsed<T> = Result<T, InputError>;

/// Reads `source` as a file path, or as `corpus:NAME` for a bundled instance.
pub fn load(source: &str) -> Parsed<Value> {
    let text = match source.strip_prefix("corpus:") {
        Some(name) => corpus::get(name)
            .map(|e| e.text.to_string())
            .ok_or_else(|| InputError::Read { file: source.into(), message: "no such corpus entry".into() })?,
        None => std::fs::read_to_string(Path::new(source))
            .map_err(|e| InputError::Read { file: source.into(), message: e.to_string() })?,
    };
    serde_json::from_str(&text).map_err(|e| schema("$", format!("invalid JSON: {e}")))
}

fn field<'a>(v: &'a Value, name: &str) -> Parsed<&'a Value> {
    v.as_object()
        .ok_or_else(|| schema("$", "expected an object"))?
        .get(name)
        .ok_or_else(|| schema(format!("$.{name}"), "missing field"))
}

fn uint(v: &Value, path: &str) -> Parsed<u64> {
    v.as_u64().ok_or_else(|| schema(path, "expected a nonnegative integer"))
}

fn array<'a>(v: &'a Value, path: &str) -> Parsed<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn uint_lists(v: &Value, path: &str) -> Parsed<Vec<Vec<u64>>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            array(row, &p)?.iter().enumerate().map(|(j, x)| uint(x, &format!("{p}[{j}]"))).collect()
        })
        .collect()
}

fn small(x: u64, path: &str) -> Parsed<usize> {
    usize::try_from(x).ok().filter(|&x| x <= 64).ok_or_else(|| schema(path, format!("{x} is too large")))
}

fn raw_edges(v: &Value) -> Parsed<(usize, Vec<Vec<usize>>)> {
    let n = small(uint(field(v, "vertices")?, "$.vertices")?, "$.vertices")?;
    let edges = uint_lists(field(v, "edges")?, "$.edges")?
        .into_iter()
        .map(|e| e.into_iter().map(|x| x as usize).collect())
        .collect();
    Ok((n, edges))
}

fn violation_path(v: &Violation) -> String {
    match *v {
        Violation::NoVertices | Violation::TooManyVertices(_) | Violation::Uncovered { .. } => "$.vertices".into(),
        Violation::EmptyEdge { edge }
        | Violation::VertexOutOfRange { edge, .. }
        | Violation::RepeatedVertex { edge, .. } => format!("$.edges[{edge}]"),
        Violation::DuplicateEdge { second, .. } => format!("$.edges[{second}]"),
        Violation::Containment { inner, .. } => format!("$.edges[{inner}]"),
    }
}

pub fn hypergraph(v: &Value, strict: bool) -> Parsed<Hypergraph> {
    let (n, edges) = raw_edges(v)?;
    sqfree_core::hypergraph::validate(n, &edges, strict).map_err(|e| schema(violation_path(&e), e.to_string()))?;
    Hypergraph::new(n, edges).map_err(|e| schema("$", e.to_string()))
}

pub fn graph(v: &Value) -> Parsed<Graph> {
    let (n, edges) = raw_edges(v)?;
    let mut pairs = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        match e[..] {
            [a, b] if a != b => pairs.push((a, b)),
            [a, _] => return Err(schema(format!("$.edges[{i}]"), format!("loop at vertex {a}"))),
            _ => return Err(schema(format!("$.edges[{i}]"), "a graph edge has exactly two vertices")),
        }
    }
    if let Some(i) = (0..edges.len()).find(|&i| (0..i).any(|j| same_pair(pairs[i], pairs[j]))) {
        return Err(schema(format!("$.edges[{i}]"), "repeated edge"));
    }
    if let Some((i, _)) = pairs.iter().enumerate().find(|(_, &(a, b))| a == 0 || b == 0 || a > n || b > n) {
        return Err(schema(format!("$.edges[{i}]"), format!("vertex outside 1..={n}")));
    }
    Graph::new(n, pairs).map_err(|e| schema("$", e.to_string()))
}

fn same_pair(a: (usize, usize), b: (usize, usize)) -> bool {
    a == b || a == (b.1, b.0)
}

/// Ideal schema, or the edge ideal of a hypergraph file.
pub fn ideal(v: &Value) -> Parsed<MonomialIdeal> {
    if v.get("vars").is_none() && v.get("vertices").is_some() {
        return Ok(hypergraph(v, false)?.edge_ideal());
    }
    let n = small(uint(field(v, "vars")?, "$.vars")?, "$.vars")?;
    let gens = uint_lists(field(v, "gens")?, "$.gens")?
        .into_iter()
        .enumerate()
        .map(|(i, exps)| {
            let path = format!("$.gens[{i}]");
            if exps.len() != n {
                return Err(schema(&path, format!("expected {n} exponents, found {}", exps.len())));
            }
            let exps = exps
                .into_iter()
                .map(|e| u32::try_from(e).map_err(|_| schema(&path, "exponent too large")))
                .collect::<Parsed<Vec<u32>>>()?;
            Monomial::new(exps).map_err(|e| schema(&path, e.to_string()))
        })
        .collect::<Parsed<Vec<_>>>()?;
    MonomialIdeal::minimalize(n, gens).map_err(|e| schema("$", e.to_string()))
}

/// 0/1 covering matrix `{"columns": n, "rows": [[...], ...]}`.
pub fn matrix(v: &Value) -> Parsed<(usize, Vec<Vec<u8>>)> {
    let n = small(uint(field(v, "columns")?, "$.columns")?, "$.columns")?;
    let rows = uint_lists(field(v, "rows")?, "$.rows")?;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(schema(format!("$.rows[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        if let Some(j) = row.iter().position(|&x| x > 1) {
            return Err(schema(format!("$.rows[{i}][{j}]"), "entries must be 0 or 1"));
        }
    }
    Ok((n, rows.into_iter().map(|r| r.into_iter().map(|x| x as u8).collect()).collect()))
}

/// Canonical form of an input, used for digests and embedded in certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Instance {
    Ideal { vars: usize, gens: Vec<Vec<u32>> },
    Hypergraph { vertices: usize, edges: Vec<Vec<usize>> },
    Graph { vertices: usize, edges: Vec<Vec<usize>> },
    None,
}

impl Instance {
    pub fn of_ideal(i: &MonomialIdeal) -> Self {
        Instance::Ideal { vars: i.nvars(), gens: i.generators().iter().map(|g| g.exponents().to_vec()).collect() }
    }

    pub fn of_hypergraph(h: &Hypergraph) -> Self {
        Instance::Hypergraph { vertices: h.vertex_count(), edges: h.edge_lists() }
    }

    pub fn of_graph(g: &Graph) -> Self {
        Instance::Graph { vertices: g.vertex_count(), edges: g.edges().iter().map(|&(a, b)| vec![a, b]).collect() }
    }

    /// Rebuilds an instance from its embedded certificate form.
    pub fn from_value(v: &Value) -> Parsed<Self> {
        let kind = field(v, "type")?.as_str().ok_or_else(|| schema("$.type", "expected a string"))?;
        Ok(match kind {
            "ideal" => Instance::of_ideal(&ideal(v)?),
            "hypergraph" => Instance::of_hypergraph(&hypergraph(v, false)?),
            "graph" => Instance::of_graph(&graph(v)?),
            "none" => Instance::None,
            other => return Err(schema("$.type", format!("unknown instance type {other:?}"))),
        })
    }

    pub fn as_ideal(&self) -> Parsed<MonomialIdeal> {
        ideal(&serde_json::to_value(self).expect("instances serialize"))
    }

    pub fn as_hypergraph(&self) -> Parsed<Hypergraph> {
        match self {
            Instance::Hypergraph { vertices, edges } => {
                Hypergraph::new(*vertices, edges.clone()).map_err(|e| schema("$", e.to_string()))
            }
            _ => Err(schema("$.type", "expected a hypergraph")),
        }
    }

    pub fn as_graph(&self) -> Parsed<Graph> {
        match self {
            Instance::Graph { .. } => graph(&serde_json::to_value(self).expect("instances serialize")),
            _ => Err(schema("$.type", "expected a graph")),
        }
    }
}
