//! Small named graphs used by tests, examples and the acceptance suite.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// K_{s,t} with the s-side on vertices `0..s`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let edges = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)));
    Graph::from_edges(s + t, edges).expect("K_{s,t} is simple")
}

/// Petersen graph: outer 5-cycle on `0..5`, inner pentagram on `5..10`, spoke
/// `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("Petersen graph is simple")
}

/// Octahedron K_{2,2,2}; antipodal pairs are `{0,5}`, `{1,3}`, `{2,4}`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if !is_antipodal(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, edges).expect("octahedron is simple")
}

fn is_antipodal(u: usize, v: usize) -> bool {
    matches!((u, v), (0, 5) | (1, 3) | (2, 4))
}

/// Triangles of the octahedron, consistent with [`octahedron`].
pub fn octahedron_faces() -> Vec<[usize; 3]> {
    let ring = [1, 2, 3, 4];
    let mut faces = Vec::new();
    for pole in [0, 5] {
        for i in 0..4 {
            let (a, b) = (ring[i], ring[(i + 1) % 4]);
            let mut f = [pole, a, b];
            f.sort_unstable();
            faces.push(f);
        }
    }
    faces.sort_unstable();
    faces
}

/// The 12-vertex ear decomposition example: the 5-cycle `v1..v5` with ears
/// `v1 v6 v7 v8 v3` and `v8 v9 v10 v11 v12 v4`, relabelled to `0..12`.
pub fn ear_figure() -> Graph {
    let walk = |vs: &[usize]| -> Vec<(usize, usize)> {
        vs.windows(2).map(|w| (w[0] - 1, w[1] - 1)).collect()
    };
    let mut edges = walk(&[1, 2, 3, 4, 5, 1]);
    edges.extend(walk(&[1, 6, 7, 8, 3]));
    edges.extend(walk(&[8, 9, 10, 11, 12, 4]));
    Graph::from_edges(12, edges).expect("figure graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(6).m(), 15);
        assert_eq!(petersen().m(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        assert_eq!(octahedron().m(), 12);
        assert_eq!(octahedron_faces().len(), 8);
        assert_eq!(complete_bipartite(3, 4).m(), 12);
        assert_eq!(ear_figure().m(), 5 + 4 + 5);
    }

    #[test]
    fn octahedron_faces_are_triangles() {
        let g = octahedron();
        for [a, b, c] in octahedron_faces() {
            assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c));
        }
    }
}
