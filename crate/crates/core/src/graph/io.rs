//! Graph file formats: a line-oriented edge list with a `p graph <n> <m>`
//! header, and the JSON form `{"n": 5, "edges": [[0, 1], ...]}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|e| [e.0, e.1]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let mut g = Graph::empty(j.n);
        for (i, [u, v]) in j.edges.into_iter().enumerate() {
            g.try_add_edge(u, v)
                .map_err(|msg| Error::parse(format!("edges[{i}]"), msg))?;
        }
        Ok(g)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Parses either format, choosing JSON when the first non-blank byte is `{`.
pub fn parse_graph(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        parse_graph_json(input)
    } else {
        parse_graph_text(input)
    }
}

pub fn parse_graph_json(input: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(input).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    Graph::try_from(j)
}

/// Edge-list format. Blank lines and lines starting with `c` or `#` are
/// comments. The header must precede every edge line and the edge count must
/// match it.
pub fn parse_graph_text(input: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let pos = || format!("line {lineno}");
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "p" {
            if graph.is_some() {
                return Err(Error::parse(pos(), "second header line"));
            }
            if fields.len() != 4 || fields[1] != "graph" {
                return Err(Error::parse(pos(), "expected header `p graph <n> <m>`"));
            }
            let n = parse_num(fields[2], lineno)?;
            let m = parse_num(fields[3], lineno)?;
            graph = Some((Graph::empty(n), m));
            continue;
        }
        let Some((g, _)) = graph.as_mut() else {
            return Err(Error::parse(pos(), "edge before `p graph` header"));
        };
        if fields.len() != 2 {
            return Err(Error::parse(pos(), "expected `u v`"));
        }
        let u = parse_num(fields[0], lineno)?;
        let v = parse_num(fields[1], lineno)?;
        g.try_add_edge(u, v).map_err(|msg| Error::parse(pos(), msg))?;
    }
    let (g, m) = graph.ok_or_else(|| Error::parse("line 1", "missing `p graph` header"))?;
    if g.m() != m {
        return Err(Error::parse(
            format!("line {last_line}"),
            format!("header declares {m} edges, found {}", g.m()),
        ));
    }
    Ok(g)
}

fn parse_num(s: &str, lineno: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(format!("line {lineno}"), format!("not a vertex id: {s:?}")))
}

pub fn to_text(g: &Graph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.0, e.1));
    }
    out
}
