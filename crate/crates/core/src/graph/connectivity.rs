use std::collections::VecDeque;

use super::{Edge, Graph, Vertex};
use crate::error::{Error, Result};

/// Maximum number of internally vertex-disjoint `s`–`t` paths for distinct,
/// non-adjacent `s` and `t`, by unit-capacity max-flow on the split graph.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex) -> Result<usize> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t || g.has_edge(s, t) {
        return Err(Error::InvalidArgument(format!(
            "local connectivity needs distinct non-adjacent vertices, got {s} and {t}"
        )));
    }
    let n = g.n();
    // v_in = 2v, v_out = 2v + 1
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    let mut arcs: Vec<Vec<usize>> = vec![Vec::new(); size];
    let mut add = |a: usize, b: usize, c: i32, cap: &mut Vec<Vec<i32>>| {
        if cap[a][b] == 0 && cap[b][a] == 0 {
            arcs[a].push(b);
            arcs[b].push(a);
        }
        cap[a][b] += c;
    };
    let big = n as i32;
    for v in g.vertices() {
        let c = if v == s || v == t { big } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut cap);
    }
    for e in g.edges() {
        add(2 * e.0 + 1, 2 * e.1, big, &mut cap);
        add(2 * e.1 + 1, 2 * e.0, big, &mut cap);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for &b in &arcs[a] {
                if parent[b] == usize::MAX && cap[a][b] > 0 {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return Ok(flow);
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            cap[a][b] -= 1;
            cap[b][a] += 1;
            b = a;
        }
        flow += 1;
    }
}

/// Vertex connectivity. `K_n` has connectivity `n - 1`; a disconnected graph
/// has connectivity 0.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for s in g.vertices() {
        // A minimum separator misses some vertex among the first best + 1, so
        // sources beyond that add nothing.
        if s > best {
            break;
        }
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t)?);
            }
        }
    }
    Ok(best)
}

/// `k`-connected: at least `k + 1` vertices and no separator smaller than `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    Ok(g.n() > k && vertex_connectivity(g)? >= k)
}

/// Result of contracting one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// Id of the merged vertex in the contracted graph.
    pub merged: Vertex,
    /// Old vertex id to new vertex id.
    pub map: Vec<Vertex>,
}

/// Contracts `e = {u, v}` (`u < v`): `v` is folded into `u`, ids above `v`
/// shift down by one, loops and parallel edges disappear.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<Contraction> {
    let Edge(u, v) = Edge::new(e.0, e.1);
    if !g.has_edge(u, v) {
        return Err(Error::NoSuchEdge(u, v));
    }
    let map: Vec<Vertex> = g
        .vertices()
        .map(|w| match w.cmp(&v) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => w - 1,
        })
        .collect();
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .map(|f| Edge::new(map[f.0], map[f.1]))
        .filter(|f| f.0 != f.1)
        .map(|f| (f.0, f.1))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::from_edges(g.n() - 1, edges)?;
    Ok(Contraction {
        graph,
        merged: u,
        map,
    })
}

/// First edge (lexicographic order) whose contraction keeps connectivity at
/// least `k`. Requires `g` to be `k`-connected.
///
/// For `|V| = k + 1` (a complete graph) no edge qualifies, since `K_{k+1}/e`
/// is `K_k`; the search simply reports `None` there.
pub fn find_contractible_edge(g: &Graph, k: usize) -> Result<Option<Edge>> {
    if !is_k_connected(g, k)? {
        return Err(Error::Hypothesis {
            lemma: "contractible edge",
            detail: format!("graph is not {k}-connected"),
        });
    }
    for e in g.edges() {
        let c = contract_edge(g, e)?;
        if vertex_connectivity(&c.graph)? >= k {
            return Ok(Some(e));
        }
    }
    Ok(None)
}
