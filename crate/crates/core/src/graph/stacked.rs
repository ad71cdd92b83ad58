use rand::Rng;

use super::Graph;

/// A planar triangulation with its triangular faces (outer face included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarTriangulation {
    pub graph: Graph,
    pub faces: Vec<[usize; 3]>,
}

/// Stacked (Apollonian) triangulation on `n >= 4` vertices: start from
/// `K_4` and repeatedly insert a vertex into a uniformly chosen face,
/// joining it to the face's three corners.
pub fn stacked_planar_triangulation<R: Rng>(n: usize, rng: &mut R) -> PlanarTriangulation {
    assert!(n >= 4, "a stacked triangulation starts from K_4");
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [a, c, v], [b, c, v]]);
    }
    faces.sort_unstable();
    PlanarTriangulation {
        graph: Graph::from_edges(n, edges).expect("stacking keeps the graph simple"),
        faces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn euler_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 4..13 {
            let t = stacked_planar_triangulation(n, &mut rng);
            assert_eq!(t.graph.m(), 3 * n - 6);
            assert_eq!(t.faces.len(), 2 * n - 4);
        }
    }
}
