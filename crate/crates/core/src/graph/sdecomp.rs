use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, Subgraph, Vertex};
use crate::error::{Error, Result};

/// One marked component: `S` plus one component of `G - S`, with the
/// induced edges and a clique on `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedComponent {
    pub graph: Subgraph,
    /// Pairs of `S` added to complete the clique (absent from `G`).
    pub marker_edges: BTreeSet<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSDecomposition {
    pub cut: BTreeSet<Vertex>,
    pub components: Vec<MarkedComponent>,
}

impl MarkedSDecomposition {
    /// Union of the components with marker edges removed.
    pub fn reconstruct(&self) -> Subgraph {
        let mut out = Subgraph::default();
        for c in &self.components {
            out.vertices.extend(&c.graph.vertices);
            out.edges
                .extend(c.graph.edges.iter().filter(|e| !c.marker_edges.contains(e)));
        }
        out
    }
}

/// Splits `g` along the vertex cut `s`. The marker on `S` is realised as a
/// clique; only the pairs missing from `g` are recorded as marker edges.
pub fn marked_s_decomposition(g: &Graph, s: &BTreeSet<Vertex>) -> Result<MarkedSDecomposition> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let comps = g.components_avoiding(s);
    if comps.len() < 2 {
        return Err(Error::NotASeparator(s.iter().copied().collect()));
    }
    let cut: Vec<Vertex> = s.iter().copied().collect();
    let mut marker_edges = BTreeSet::new();
    let mut clique = BTreeSet::new();
    for (i, &a) in cut.iter().enumerate() {
        for &b in &cut[i + 1..] {
            let e = Edge::new(a, b);
            clique.insert(e);
            if !g.has_edge(a, b) {
                marker_edges.insert(e);
            }
        }
    }
    let components = comps
        .into_iter()
        .map(|comp| {
            let vertices: BTreeSet<Vertex> = comp.into_iter().chain(cut.iter().copied()).collect();
            let mut edges: BTreeSet<Edge> = g
                .edges()
                .filter(|e| {
                    vertices.contains(&e.0)
                        && vertices.contains(&e.1)
                        && !(s.contains(&e.0) && s.contains(&e.1))
                })
                .collect();
            edges.extend(clique.iter().copied());
            MarkedComponent {
                graph: Subgraph { vertices, edges },
                marker_edges: marker_edges.clone(),
            }
        })
        .collect();
    Ok(MarkedSDecomposition {
        cut: s.clone(),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn bowtie_at_cut_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = marked_s_decomposition(&g, &[2].into()).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.components[0].marker_edges.is_empty());
        assert_eq!(d.reconstruct(), g.as_subgraph());
    }

    #[test]
    fn k23_splits_into_three_triangles() {
        let g = named::complete_bipartite(2, 3);
        let d = marked_s_decomposition(&g, &[0, 1].into()).unwrap();
        assert_eq!(d.components.len(), 3);
        for c in &d.components {
            assert_eq!(c.graph.vertices.len(), 3);
            assert_eq!(c.graph.edges.len(), 3);
            assert_eq!(c.marker_edges, [Edge(0, 1)].into());
        }
        assert_eq!(d.reconstruct(), g.as_subgraph());
    }

    #[test]
    fn three_cut_between_two_caps() {
        // triangle x1 x2 x3 = 0 1 2, apexes 3 and 4 on either side
        let g = Graph::from_edges(
            5,
            [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        let d = marked_s_decomposition(&g, &[0, 1, 2].into()).unwrap();
        assert_eq!(d.components.len(), 2);
        for c in &d.components {
            for e in [Edge(0, 1), Edge(1, 2), Edge(0, 2)] {
                assert!(c.graph.edges.contains(&e));
            }
        }
        assert_eq!(d.reconstruct(), g.as_subgraph());
    }

    #[test]
    fn non_separator_rejected() {
        let g = named::cycle(5);
        assert!(matches!(
            marked_s_decomposition(&g, &[0].into()),
            Err(Error::NotASeparator(_))
        ));
    }
}
