//! JSON and plain-text input formats.

use serde::Deserialize;
use serde_json::Value;

use crate::arrangement::{AffineArrangement, CentralArrangement};
use crate::graph::Multigraph;
use crate::matroid::{GroundSet, Matroid};
use crate::rational::parse_rational;
use crate::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum EdgeSpec {
    Labeled(usize, usize, String),
    Bare(usize, usize),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum MatroidSpec {
    Uniform {
        rank: usize,
        size: usize,
    },
    Graph {
        vertices: usize,
        edges: Vec<EdgeSpec>,
    },
    Matrix {
        columns: Vec<Vec<String>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Circuits {
        labels: Vec<String>,
        circuits: Vec<Vec<String>>,
    },
}

fn graph_from_spec(vertices: usize, edges: Vec<EdgeSpec>) -> Result<Multigraph> {
    let mut pairs = Vec::with_capacity(edges.len());
    let mut labels = Vec::with_capacity(edges.len());
    for (i, e) in edges.into_iter().enumerate() {
        match e {
            EdgeSpec::Labeled(u, w, l) => {
                pairs.push((u, w));
                labels.push(l);
            }
            EdgeSpec::Bare(u, w) => {
                pairs.push((u, w));
                labels.push(format!("e{}", i + 1));
            }
        }
    }
    Multigraph::new(vertices, pairs, labels)
}

fn parse_rationals(v: &[String]) -> Result<Vec<num_rational::BigRational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn labels_or_numbered(labels: Option<Vec<String>>, n: usize) -> Result<GroundSet> {
    match labels {
        Some(l) if l.len() != n => Err(Error::parse(format!("{} labels for {n} elements", l.len()))),
        Some(l) => GroundSet::new(l),
        None => GroundSet::numbered(n),
    }
}

/// Matroid from the JSON input schema (`uniform`, `graph`, `matrix`,
/// `circuits`).
pub fn parse_matroid_json(text: &str) -> Result<Matroid> {
    let spec: MatroidSpec = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    match spec {
        MatroidSpec::Uniform { rank, size } => Matroid::uniform(rank, size),
        MatroidSpec::Graph { vertices, edges } => Matroid::graphic(graph_from_spec(vertices, edges)?),
        MatroidSpec::Matrix { columns, labels } => {
            let cols = columns.iter().map(|c| parse_rationals(c)).collect::<Result<Vec<_>>>()?;
            let ground = labels_or_numbered(labels, cols.len())?;
            Matroid::linear(cols, ground)
        }
        MatroidSpec::Circuits { labels, circuits } => {
            let ground = GroundSet::new(labels)?;
            let sets = circuits
                .iter()
                .map(|c| {
                    let refs: Vec<&str> = c.iter().map(String::as_str).collect();
                    ground.set_of(&refs)
                })
                .collect::<Result<Vec<_>>>()?;
            Matroid::from_circuits(ground, sets)
        }
    }
}

/// Graph from `{"type":"graph",...}` JSON or from plain-text lines
/// `u w [label]` (vertices are 0-based; `#` starts a comment).
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        let spec: MatroidSpec = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        return match spec {
            MatroidSpec::Graph { vertices, edges } => graph_from_spec(vertices, edges),
            _ => Err(Error::parse("expected a graph (\"type\":\"graph\")")),
        };
    }
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 2 || toks.len() > 3 {
            return Err(Error::parse(format!("line {}: expected \"u w [label]\"", lineno + 1)));
        }
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(format!("line {}: bad vertex {t:?}", lineno + 1)))
        };
        pairs.push((num(toks[0])?, num(toks[1])?));
        labels.push(toks.get(2).map_or_else(|| format!("e{}", pairs.len()), |s| s.to_string()));
    }
    let vertices = pairs.iter().map(|&(u, w)| u.max(w) + 1).max().unwrap_or(1);
    Multigraph::new(vertices, pairs, labels)
}

#[derive(Debug, Deserialize)]
struct ArrangementSpec {
    forms: Vec<Vec<String>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

fn parse_forms(text: &str) -> Result<(Vec<Vec<num_rational::BigRational>>, GroundSet)> {
    let spec: ArrangementSpec = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    let forms = spec.forms.iter().map(|f| parse_rationals(f)).collect::<Result<Vec<_>>>()?;
    let ground = labels_or_numbered(spec.labels, forms.len())?;
    Ok((forms, ground))
}

/// `{"forms":[["c","a1","a2"],...]}`: each affine form `c + a1 x + a2 y`.
pub fn parse_affine_arrangement(text: &str) -> Result<AffineArrangement> {
    let (rows, ground) = parse_forms(text)?;
    AffineArrangement::from_rows(rows, ground)
}

/// `{"forms":[["a0","a1","a2"],...]}`: linear forms through the origin.
pub fn parse_central_arrangement(text: &str) -> Result<CentralArrangement> {
    let (forms, ground) = parse_forms(text)?;
    CentralArrangement::new(forms, ground)
}

/// Graph as the JSON input schema.
pub fn graph_to_json(g: &Multigraph) -> Value {
    serde_json::json!({
        "type": "graph",
        "vertices": g.vertex_count(),
        "edges": g.edges().iter().zip(g.labels()).map(|(&(u, w), l)| serde_json::json!([u, w, l])).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn matroid_inputs() {
        let u = parse_matroid_json(r#"{"type":"uniform","rank":2,"size":3}"#).unwrap();
        assert!(u.same_rank_function(&Matroid::uniform(2, 3).unwrap()).unwrap());
        let g = parse_matroid_json(r#"{"type":"graph","vertices":3,"edges":[[0,1,"a"],[1,2,"b"],[0,2,"c"]]}"#).unwrap();
        assert_eq!(g.full_rank(), 2);
        assert_eq!(g.ground().labels(), &["a", "b", "c"]);
        let m = parse_matroid_json(
            r#"{"type":"matrix","columns":[["1/2","0"],["0","1"],["1","2"]],"labels":["x","y","z"]}"#,
        )
        .unwrap();
        assert_eq!(m.full_rank(), 2);
        match m.representation() {
            crate::matroid::Representation::LinearRational { columns, .. } => assert_eq!(columns[0][0], rat(1, 2)),
            _ => panic!("expected a matrix"),
        }
        let c = parse_matroid_json(r#"{"type":"circuits","labels":["a","b","c"],"circuits":[["a","b","c"]]}"#).unwrap();
        assert_eq!(c.full_rank(), 2);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_matroid_json("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_matroid_json(r#"{"type":"bogus"}"#), Err(Error::Parse(_))));
        assert!(parse_matroid_json(r#"{"type":"matrix","columns":[["1/0"]]}"#).is_err());
        assert!(parse_matroid_json(r#"{"type":"circuits","labels":["a"],"circuits":[["q"]]}"#).is_err());
        assert!(parse_graph("0 1\n1").is_err());
    }

    #[test]
    fn plain_text_graph() {
        let g = parse_graph("# triangle\n0 1\n1 2 b\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.labels(), &["e1", "b", "e3"]);
        let back = parse_graph(&graph_to_json(&g).to_string()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn arrangements() {
        let a = parse_affine_arrangement(r#"{"forms":[["0","1","0"],["0","0","1"],["-1","1","1"]]}"#).unwrap();
        assert_eq!(a.len(), 3);
        let c = parse_central_arrangement(r#"{"forms":[["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"]]}"#).unwrap();
        assert_eq!(c.decone(3).unwrap().len(), 3);
    }
}
