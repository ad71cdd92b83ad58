//! Simple undirected graphs on dense vertex ids `0..n`, plus the structural
//! operations used throughout the crate: connectivity, contraction, bridges
//! of a cycle, ear decompositions, marked separator decompositions and BFS
//! layering.

mod bridges;
mod connectivity;
mod cycles;
mod ears;
mod io;
mod layers;
pub mod named;
mod sdecomp;
mod stacked;

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bridges::{bridges_of_cycle, classify_bridge_pair, Bridge, BridgeRelation};
pub use connectivity::{
    contract_edge, find_contractible_edge, is_k_connected, local_connectivity,
    vertex_connectivity, Contraction,
};
pub use cycles::chordless_cycles;
pub use ears::{ear_decomposition, verify_ear_decomposition, EarDecomposition, EarViolation};
pub use layers::bfs_layers;
pub use stacked::{stacked_planar_triangulation, PlanarTriangulation};
pub use sdecomp::{marked_s_decomposition, MarkedComponent, MarkedSDecomposition};

pub type Vertex = usize;

/// Undirected edge, always stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

/// A simple graph. Adjacency lists are kept sorted so every traversal is
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// A vertex and edge subset of some host graph, in host ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgraph {
    pub vertices: BTreeSet<Vertex>,
    pub edges: BTreeSet<Edge>,
}

impl Subgraph {
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut s = Subgraph::default();
        for e in edges {
            s.add_edge(e);
        }
        s
    }

    pub fn add_edge(&mut self, e: Edge) {
        self.vertices.insert(e.0);
        self.vertices.insert(e.1);
        self.edges.insert(e);
    }

    pub fn is_subgraph_of(&self, other: &Subgraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints. Errors name the offending position in the input sequence.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.try_add_edge(u, v)
                .map_err(|msg| Error::parse(format!("edge {i}"), msg))?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> std::result::Result<(), String> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(format!("endpoint out of range in {u}-{v} (n = {n})"));
        }
        if u == v {
            return Err(format!("loop at vertex {u}"));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(format!("duplicate edge {u}-{v}")),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    /// Copy of this graph with one more edge. Existing edges are left alone.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let mut g = self.clone();
        g.try_add_edge(u, v)
            .map_err(|msg| Error::InvalidArgument(msg))?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| Edge(u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Neighbourhood bitmasks. Only valid for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::TooLarge(format!(
                "{} vertices exceeds the 64-vertex bitset limit",
                self.n()
            )));
        }
        Ok(self
            .adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect())
    }

    /// Subgraph induced by `keep`, relabelled densely in increasing id order.
    /// Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.iter().copied().filter(|&v| v < self.n()).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(old.len());
        for e in self.edges() {
            let (a, b) = (new_id[e.0], new_id[e.1]);
            if a != usize::MAX && b != usize::MAX {
                g.try_add_edge(a, b).expect("induced edges are simple");
            }
        }
        (g, old)
    }

    /// Connected components of the graph with `removed` deleted, each sorted.
    pub fn components_avoiding(&self, removed: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        for &r in removed {
            if r < self.n() {
                seen[r] = true;
            }
        }
        let mut comps = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&BTreeSet::new())
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_connected_avoiding(&self, removed: &BTreeSet<Vertex>) -> bool {
        self.components_avoiding(removed).len() <= 1
    }

    pub fn as_subgraph(&self) -> Subgraph {
        Subgraph {
            vertices: self.vertices().collect(),
            edges: self.edges().collect(),
        }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        Graph::from_edges(self.n(), self.edges().map(|e| (perm[e.0], perm[e.1])))
    }
}

pub use io::{parse_graph, parse_graph_json, parse_graph_text, to_text, GraphJson};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::Parse { .. })
        ));
        let err = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err();
        assert!(err.to_string().contains("edge 1"), "{err}");
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edges_sorted_and_counted() {
        let g = Graph::from_edges(4, [(3, 2), (0, 1), (2, 0)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![Edge(0, 1), Edge(0, 2), Edge(2, 3)]);
        assert_eq!(g.m(), 3);
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn induced_relabels() {
        let g = named::cycle(5);
        let (h, map) = g.induced(&[0, 1, 2].into());
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.m(), 2);
    }
}
