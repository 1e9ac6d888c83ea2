//! Text formats: edge lists, metric CSV, poset relations, cell lists, and
//! JSON / DOT rendering.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::helly::HullResult;
use crate::metric::{validate_metric, FiniteMetric};
use crate::poset::Poset;
use crate::scalar::{parse_rational, Rational};

pub const SCHEMA: &str = "helly-lab/1";

/// A parsed input together with non-fatal remarks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

/// Meaningful lines with their 1-based numbers; `#` starts a comment.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, message: format!("expected {what}, found {tok:?}") })
}

/// Edge-list format: a header `n m`, then `m` lines `u v` with `0 ≤ u, v < n`.
/// Duplicate edges are dropped with a warning.
pub fn parse_graph(text: &str) -> Result<Parsed<SimpleGraph>> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header `n m`".into() })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse { line: hline, message: "header must be `n m`".into() });
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;
    let mut g = SimpleGraph::empty(n);
    let mut warnings = Vec::new();
    let mut count = 0;
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        if count == m {
            return Err(Error::Parse { line, message: format!("more than the declared {m} edges") });
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line, message: "edge line must be `u v`".into() });
        }
        let u = parse_usize(toks[0], line, "vertex")?;
        let v = parse_usize(toks[1], line, "vertex")?;
        if u >= n || v >= n {
            return Err(Error::Parse { line, message: format!("vertex {} out of range 0..{n}", u.max(v)) });
        }
        if u == v {
            return Err(Error::LoopEdge { line, vertex: u });
        }
        if !g.add_edge(u, v)? {
            warnings.push(format!("line {line}: duplicate edge {u}-{v} ignored"));
        }
        count += 1;
    }
    if count < m {
        return Err(Error::Parse { line: last_line, message: format!("expected {m} edges, found {count}") });
    }
    Ok(Parsed { value: g, warnings })
}

/// Inverse of [`parse_graph`].
pub fn emit_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Square CSV table of integers or fractions `p/q`, optionally preceded by a
/// row of point labels.
pub fn parse_metric(text: &str) -> Result<FiniteMetric<Rational>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.iter().all(str::is_empty) {
            continue;
        }
        rows.push((line, rec.iter().map(str::to_string).collect()));
    }
    let mut labels = None;
    if let Some((_, first)) = rows.first() {
        if first.iter().any(|c| parse_rational(c).is_none()) {
            labels = Some(rows.remove(0).1);
        }
    }
    let mut table = Vec::with_capacity(rows.len());
    for (r, (line, cells)) in rows.iter().enumerate() {
        let mut row = Vec::with_capacity(cells.len());
        for (c, cell) in cells.iter().enumerate() {
            row.push(parse_rational(cell).ok_or_else(|| Error::Parse {
                line: *line,
                message: format!("row {r}, column {c}: {cell:?} is not a number"),
            })?);
        }
        table.push(row);
    }
    let m = validate_metric(table)?;
    match labels {
        Some(l) => m.with_labels(l),
        None => Ok(m),
    }
}

/// Metric as CSV rows.
pub fn emit_metric_csv<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Poset relations, one `a < b` per line (`a` alone declares an element).
/// Elements are numbered in order of first appearance.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut id = |name: &str| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };
    let mut pairs = Vec::new();
    for (line, l) in content_lines(text) {
        let parts: Vec<&str> = l.split('<').map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty() || p.contains(char::is_whitespace)) {
            return Err(Error::Parse { line, message: format!("expected `a < b`, found {l:?}") });
        }
        let ids: Vec<usize> = parts.iter().map(|p| id(p)).collect();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Parse { line, message: format!("{} < {} is not strict", parts[0], parts[0]) });
            }
            pairs.push((w[0], w[1]));
        }
    }
    Poset::from_relations(names.len(), &pairs)?.with_labels(names)
}

/// Comma or whitespace separated vertex indices.
pub fn parse_vertex_set(text: &str) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::BadSpec(format!("bad vertex {s:?}"))))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// One cell per line.
pub fn parse_cells(text: &str) -> Result<Vec<Vec<usize>>> {
    content_lines(text)
        .map(|(line, l)| {
            parse_vertex_set(l).map_err(|e| Error::Parse { line, message: e.to_string() })
        })
        .collect()
}

/// `{"schema": "helly-lab/1", "kind": kind, ...fields}` with sorted keys.
pub fn json_document<T: Serialize>(kind: &str, payload: &T) -> Result<String> {
    let mut v = serde_json::to_value(payload).map_err(|e| Error::InvalidInput(e.to_string()))?;
    let obj = match v {
        Value::Object(ref mut m) => m,
        _ => {
            v = json!({ "result": v });
            v.as_object_mut().unwrap()
        }
    };
    obj.insert("schema".into(), Value::String(SCHEMA.into()));
    obj.insert("kind".into(), Value::String(kind.into()));
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::InvalidInput(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT for a plain graph; `shapes[v]` overrides the default node shape.
pub fn graph_dot(g: &SimpleGraph, labels: Option<&[String]>, shapes: Option<&[&str]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let label = labels.map_or_else(|| v.to_string(), |l| l[v].clone());
        let shape = shapes.map_or("ellipse", |s| s[v]);
        let _ = writeln!(out, "  {v} [label=\"{}\", shape={shape}];", dot_escape(&label));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Plain text hull: `V E`, then one function per line (hull vertex order),
/// then one edge `u v` per line.
pub fn emit_hull_text(h: &HullResult) -> String {
    let mut out = format!("{} {}\n", h.functions.len(), h.hull.edge_count());
    for f in &h.functions {
        let vals: Vec<String> = f.iter().map(ToString::to_string).collect();
        out.push_str(&vals.join(" "));
        out.push('\n');
    }
    for (u, v) in h.hull.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Hull as DOT: original vertices are boxes, added vertices ellipses.
pub fn hull_dot(h: &HullResult) -> String {
    let labels: Vec<String> = h
        .functions
        .iter()
        .map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect();
    let shapes: Vec<&str> =
        (0..h.functions.len()).map(|i| if i < h.original_count() { "box" } else { "ellipse" }).collect();
    graph_dot(&h.hull, Some(&labels), Some(&shapes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, rational};

    #[test]
    fn graph_examples() {
        let k2 = parse_graph("2 1\n0 1").unwrap().value;
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let k3 = parse_graph("3 3\n0 1\n1 2\n2 0").unwrap().value;
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(parse_graph("2 1\n0 0").unwrap_err(), Error::LoopEdge { line: 2, vertex: 0 });
    }

    #[test]
    fn graph_errors_name_lines() {
        assert!(matches!(parse_graph("2 1\n0 5"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 1\n1 2"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("x 1"), Err(Error::Parse { line: 1, .. })));
        let dup = parse_graph("# comment\n3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(dup.value.edge_count(), 2);
        assert_eq!(dup.warnings, vec!["line 4: duplicate edge 1-0 ignored".to_string()]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_graph("4 3\n0 1\n2 1\n3 0").unwrap().value;
        assert_eq!(parse_graph(&emit_edge_list(&g)).unwrap().value, g);
    }

    #[test]
    fn metric_examples() {
        let m = parse_metric("0,1\n1,0").unwrap();
        assert_eq!(m.len(), 2);
        let m = parse_metric("0,1/2\n1/2,0").unwrap();
        assert_eq!(*m.d(0, 1), ratio(1, 2));
        assert!(matches!(parse_metric("0,1,3\n1,0,1\n3,1,0"), Err(Error::Triangle { i: 0, j: 2, k: 1, .. })));
        let m = parse_metric("a,b\n0,2\n2,0").unwrap();
        assert_eq!(m.label(1), "b");
        assert_eq!(*m.d(0, 1), rational(2));
        assert!(matches!(parse_metric("0,1\n1,zz"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn posets_and_cells() {
        let p = parse_poset("a < b\nb < c\n# x\nd").unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.leq(0, 2));
        assert_eq!(p.label(3), "d");
        assert!(parse_poset("a < a").is_err());
        assert!(parse_poset("a b").is_err());
        assert_eq!(parse_cells("0 1\n1,2\n").unwrap(), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn json_has_schema() {
        let s = json_document("demo", &json!({"b": 1, "a": 2})).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], "helly-lab/1");
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
    }
}
