use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{vertex_connectivity, Edge, Graph, Subgraph, Vertex};
use crate::error::{Error, Result};

/// An ear decomposition of a 2-connected graph: an initial cycle followed by
/// paths whose endpoints lie in the current stage and whose interiors do
/// not. A single edge between two stage vertices is a valid (chord) ear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub cycle: Vec<Vertex>,
    pub ears: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum EarViolation {
    InitialCycle { detail: String },
    Ear { index: usize, detail: String },
    NotTwoConnected { stage: usize },
    Incomplete { missing_edges: Vec<Edge> },
}

impl EarDecomposition {
    /// Nested stages `G_0 ⊆ G_1 ⊆ … ⊆ G_k`, without validation.
    pub fn stages(&self) -> Vec<Subgraph> {
        let k = self.cycle.len();
        let mut current = Subgraph::from_edges(
            (0..k).map(|i| Edge::new(self.cycle[i], self.cycle[(i + 1) % k])),
        );
        let mut out = vec![current.clone()];
        for ear in &self.ears {
            for w in ear.windows(2) {
                current.add_edge(Edge::new(w[0], w[1]));
            }
            out.push(current.clone());
        }
        out
    }
}

fn stage_graph(stage: &Subgraph) -> Graph {
    let ids: Vec<Vertex> = stage.vertices.iter().copied().collect();
    let idx = |v: Vertex| ids.binary_search(&v).unwrap();
    Graph::from_edges(ids.len(), stage.edges.iter().map(|e| (idx(e.0), idx(e.1))))
        .expect("stage edges are simple")
}

/// Replays the decomposition against `g`. Returns the first violation found.
pub fn verify_ear_decomposition(
    g: &Graph,
    ed: &EarDecomposition,
) -> std::result::Result<(), EarViolation> {
    let c = &ed.cycle;
    let bad_cycle = |detail: String| EarViolation::InitialCycle { detail };
    if c.len() < 3 {
        return Err(bad_cycle("fewer than 3 vertices".into()));
    }
    if c.iter().collect::<BTreeSet<_>>().len() != c.len() {
        return Err(bad_cycle("repeated vertex".into()));
    }
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        if !g.has_edge(a, b) {
            return Err(bad_cycle(format!("{a}-{b} is not an edge")));
        }
    }
    let mut stage = ed.stages()[0].clone();
    for (index, ear) in ed.ears.iter().enumerate() {
        let bad = |detail: String| EarViolation::Ear { index, detail };
        if ear.len() < 2 {
            return Err(bad("ear has no edge".into()));
        }
        let (first, last) = (ear[0], ear[ear.len() - 1]);
        if first == last {
            return Err(bad("ear endpoints coincide".into()));
        }
        if !stage.vertices.contains(&first) || !stage.vertices.contains(&last) {
            return Err(bad("ear endpoint outside current stage".into()));
        }
        let interior = &ear[1..ear.len() - 1];
        if interior.iter().collect::<BTreeSet<_>>().len() != interior.len()
            || interior.iter().any(|v| stage.vertices.contains(v))
        {
            return Err(bad("ear interior meets current stage".into()));
        }
        for w in ear.windows(2) {
            let e = Edge::new(w[0], w[1]);
            if !g.has_edge(e.0, e.1) {
                return Err(bad(format!("{}-{} is not an edge", e.0, e.1)));
            }
            if stage.edges.contains(&e) {
                return Err(bad(format!("{}-{} already in stage", e.0, e.1)));
            }
            stage.add_edge(e);
        }
    }
    for (i, s) in ed.stages().iter().enumerate() {
        if vertex_connectivity(&stage_graph(s)).unwrap_or(0) < 2 {
            return Err(EarViolation::NotTwoConnected { stage: i });
        }
    }
    let missing: Vec<Edge> = g.edges().filter(|e| !stage.edges.contains(e)).collect();
    if !missing.is_empty() || stage.vertices.len() != g.n() {
        return Err(EarViolation::Incomplete {
            missing_edges: missing,
        });
    }
    Ok(())
}

/// Ear decomposition of a 2-connected graph. The initial cycle is a shortest
/// cycle through the lexicographically first edge; each following ear starts
/// from the first unused edge touching the current stage.
pub fn ear_decomposition(g: &Graph) -> Result<EarDecomposition> {
    if g.n() < 3 || vertex_connectivity(g)? < 2 {
        return Err(Error::NotTwoConnected);
    }
    let first = g.edges().next().expect("2-connected graph has edges");
    let path = shortest_path(g, first.1, |v| v == first.0, |u, w| Edge::new(u, w) != first, |_| true)
        .expect("2-connected: every edge lies on a cycle");
    let mut cycle = vec![first.0];
    cycle.extend(&path[..path.len() - 1]);

    let mut ed = EarDecomposition {
        cycle,
        ears: Vec::new(),
    };
    let mut stage = ed.stages().pop().unwrap();
    while stage.edges.len() < g.m() {
        let e = g
            .edges()
            .find(|e| {
                !stage.edges.contains(e)
                    && (stage.vertices.contains(&e.0) || stage.vertices.contains(&e.1))
            })
            .expect("connected graph: some unused edge touches the stage");
        let ear = if stage.vertices.contains(&e.0) && stage.vertices.contains(&e.1) {
            vec![e.0, e.1]
        } else {
            let (x, w) = if stage.vertices.contains(&e.0) {
                (e.0, e.1)
            } else {
                (e.1, e.0)
            };
            let inside = |v: Vertex| stage.vertices.contains(&v);
            let tail = shortest_path(g, w, |v| inside(v) && v != x, |_, _| true, |v| !inside(v))
                .expect("2-connected: ear returns to the stage");
            let mut ear = vec![x];
            ear.extend(tail);
            ear
        };
        for w in ear.windows(2) {
            stage.add_edge(Edge::new(w[0], w[1]));
        }
        ed.ears.push(ear);
    }
    Ok(ed)
}

/// BFS from `start` to the first vertex satisfying `is_target`, moving only
/// along allowed edges and through vertices satisfying `passable` (targets
/// need not be passable). Returns the path including both ends.
fn shortest_path(
    g: &Graph,
    start: Vertex,
    is_target: impl Fn(Vertex) -> bool,
    edge_ok: impl Fn(Vertex, Vertex) -> bool,
    passable: impl Fn(Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] != usize::MAX || !edge_ok(u, w) {
                continue;
            }
            if is_target(w) {
                let mut path = vec![w, u];
                let mut cur = u;
                while cur != start {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if passable(w) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn cycle_needs_no_ears() {
        let ed = ear_decomposition(&named::cycle(5)).unwrap();
        assert!(ed.ears.is_empty());
        assert_eq!(ed.stages().len(), 1);
        verify_ear_decomposition(&named::cycle(5), &ed).unwrap();
    }

    #[test]
    fn k4_has_path_then_chord() {
        let g = named::complete(4);
        let ed = ear_decomposition(&g).unwrap();
        assert_eq!(ed.stages().len(), 3);
        assert_eq!(ed.ears[0].len(), 3);
        assert_eq!(ed.ears[1].len(), 2);
        verify_ear_decomposition(&g, &ed).unwrap();
    }

    #[test]
    fn figure_decomposition_verifies() {
        let g = named::ear_figure();
        // v1..v5 then v1 v6 v7 v8 v3 then v8 v9 v10 v11 v12 v4, zero-based
        let ed = EarDecomposition {
            cycle: vec![0, 1, 2, 3, 4],
            ears: vec![vec![0, 5, 6, 7, 2], vec![7, 8, 9, 10, 11, 3]],
        };
        verify_ear_decomposition(&g, &ed).unwrap();
        let ours = ear_decomposition(&g).unwrap();
        verify_ear_decomposition(&g, &ours).unwrap();
        assert_eq!(ours.ears.len(), 2);
    }

    #[test]
    fn verifier_catches_bad_orders() {
        let g = named::ear_figure();
        let ed = EarDecomposition {
            cycle: vec![0, 1, 2, 3, 4],
            ears: vec![vec![7, 8, 9, 10, 11, 3], vec![0, 5, 6, 7, 2]],
        };
        assert!(matches!(
            verify_ear_decomposition(&g, &ed),
            Err(EarViolation::Ear { index: 0, .. })
        ));
        let ed = EarDecomposition {
            cycle: vec![0, 1, 2, 3, 4],
            ears: vec![vec![0, 5, 6, 7, 2]],
        };
        assert!(matches!(
            verify_ear_decomposition(&g, &ed),
            Err(EarViolation::Incomplete { .. })
        ));
    }

    #[test]
    fn rejects_non_two_connected() {
        assert!(matches!(
            ear_decomposition(&named::path(4)),
            Err(Error::NotTwoConnected)
        ));
    }
}
