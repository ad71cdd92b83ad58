//! Exact minor containment for small fixed patterns, with branch-set
//! witnesses that can be checked independently of the search.

mod sampler;
mod search;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{named, Edge, Graph, Vertex};

pub use sampler::minor_free_sampler;
pub use search::has_minor;

/// Largest pattern the search accepts.
pub const MAX_PATTERN_VERTICES: usize = 8;

/// Witness that `pattern` is a minor of some host graph: one connected
/// branch set per pattern vertex, pairwise disjoint, and a host edge between
/// the branch sets of every pattern edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub pattern: Graph,
    pub branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>>,
    /// Pattern edge `{a, b}` (a < b) to a host edge `(x, y)` with `x` in
    /// branch set `a` and `y` in branch set `b`.
    pub witness_edges: BTreeMap<Edge, (Vertex, Vertex)>,
}

#[derive(Serialize, Deserialize)]
struct MinorModelJson {
    pattern: Graph,
    branch_sets: BTreeMap<String, Vec<Vertex>>,
    witness_edges: BTreeMap<String, [Vertex; 2]>,
}

impl Serialize for MinorModel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MinorModelJson {
            pattern: self.pattern.clone(),
            branch_sets: self
                .branch_sets
                .iter()
                .map(|(h, set)| (h.to_string(), set.iter().copied().collect()))
                .collect(),
            witness_edges: self
                .witness_edges
                .iter()
                .map(|(e, &(x, y))| (format!("{}-{}", e.0, e.1), [x, y]))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinorModel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MinorModelJson::deserialize(d)?;
        let key = |s: &str| -> std::result::Result<Vertex, D::Error> {
            s.parse().map_err(|_| D::Error::custom(format!("bad pattern vertex key {s:?}")))
        };
        let mut branch_sets = BTreeMap::new();
        for (k, vs) in j.branch_sets {
            branch_sets.insert(key(&k)?, vs.into_iter().collect());
        }
        let mut witness_edges = BTreeMap::new();
        for (k, [x, y]) in j.witness_edges {
            let (a, b) = k
                .split_once('-')
                .ok_or_else(|| D::Error::custom(format!("bad pattern edge key {k:?}")))?;
            let (a, b) = (key(a)?, key(b)?);
            // store oriented so the first host vertex belongs to the smaller pattern vertex
            let (e, w) = if a <= b { (Edge(a, b), (x, y)) } else { (Edge(b, a), (y, x)) };
            witness_edges.insert(e, w);
        }
        Ok(MinorModel {
            pattern: j.pattern,
            branch_sets,
            witness_edges,
        })
    }
}

/// First violated model clause, in checking order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum ModelViolation {
    Coverage { pattern_vertex: Vertex },
    Disjointness { first: Vertex, second: Vertex, host_vertex: Vertex },
    Connectivity { pattern_vertex: Vertex },
    Witness { pattern_edge: Edge, detail: String },
}

impl ModelViolation {
    pub fn clause(&self) -> &'static str {
        match self {
            ModelViolation::Coverage { .. } => "coverage",
            ModelViolation::Disjointness { .. } => "disjointness",
            ModelViolation::Connectivity { .. } => "connectivity",
            ModelViolation::Witness { .. } => "witness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelCheck {
    pub valid: bool,
    pub violation: Option<ModelViolation>,
}

/// Checks a model against `g`: every pattern vertex has a nonempty branch
/// set, the sets are disjoint, each induces a connected subgraph, and every
/// pattern edge has a witness host edge between the right sets.
pub fn verify_minor_model(g: &Graph, model: &MinorModel) -> Result<ModelCheck> {
    let h = &model.pattern;
    for (&hv, set) in &model.branch_sets {
        if hv >= h.n() {
            return Err(Error::BadCell(format!("pattern vertex {hv} not in pattern")));
        }
        for &v in set {
            g.check_vertex(v)?;
        }
    }
    for (e, &(x, y)) in &model.witness_edges {
        if e.1 >= h.n() {
            return Err(Error::BadCell(format!("pattern edge {}-{} not in pattern", e.0, e.1)));
        }
        g.check_vertex(x)?;
        g.check_vertex(y)?;
    }
    let fail = |v: ModelViolation| {
        Ok(ModelCheck {
            valid: false,
            violation: Some(v),
        })
    };
    for hv in h.vertices() {
        if model.branch_sets.get(&hv).is_none_or(|s| s.is_empty()) {
            return fail(ModelViolation::Coverage { pattern_vertex: hv });
        }
    }
    let mut owner: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for (&hv, set) in &model.branch_sets {
        for &v in set {
            if let Some(&first) = owner.get(&v) {
                return fail(ModelViolation::Disjointness {
                    first,
                    second: hv,
                    host_vertex: v,
                });
            }
            owner.insert(v, hv);
        }
    }
    for (&hv, set) in &model.branch_sets {
        let (sub, _) = g.induced(set);
        if !sub.is_connected() {
            return fail(ModelViolation::Connectivity { pattern_vertex: hv });
        }
    }
    for e in h.edges() {
        let Some(&(x, y)) = model.witness_edges.get(&e) else {
            return fail(ModelViolation::Witness {
                pattern_edge: e,
                detail: "missing".into(),
            });
        };
        if !g.has_edge(x, y) {
            return fail(ModelViolation::Witness {
                pattern_edge: e,
                detail: format!("{x}-{y} is not a host edge"),
            });
        }
        if !model.branch_sets[&e.0].contains(&x) || !model.branch_sets[&e.1].contains(&y) {
            return fail(ModelViolation::Witness {
                pattern_edge: e,
                detail: format!("{x}-{y} does not join the branch sets"),
            });
        }
    }
    Ok(ModelCheck {
        valid: true,
        violation: None,
    })
}

/// `K_t` minor search. Hosts with fewer than `t(t-1)/2` edges are rejected
/// before any search.
pub fn has_clique_minor(g: &Graph, t: usize) -> Result<Option<MinorModel>> {
    if t == 0 {
        return Err(Error::InvalidArgument("clique order must be at least 1".into()));
    }
    if g.m() < t * (t - 1) / 2 {
        return Ok(None);
    }
    has_minor(g, &named::complete(t))
}

/// `K_{s,t}` minor search.
pub fn has_complete_bipartite_minor(g: &Graph, s: usize, t: usize) -> Result<Option<MinorModel>> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument("both sides must be nonempty".into()));
    }
    has_minor(g, &named::complete_bipartite(s, t))
}
