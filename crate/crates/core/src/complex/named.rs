//! Small complexes used as fixtures and corpus members.

use rand::Rng;

use super::CellComplex;
use crate::graph::named as graphs;
use crate::graph::Vertex;

fn subsets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

/// Boundary of the `k`-simplex on vertices `0..=k`, a `(k-1)`-sphere.
pub fn simplex_boundary(k: usize) -> CellComplex {
    assert!(k >= 1);
    CellComplex::simplicial(k + 1, &subsets(k + 1, k)).expect("simplex faces are valid")
}

pub fn tetrahedron_boundary() -> CellComplex {
    simplex_boundary(3)
}

/// The tetrahedron surface without triangle 1-2-3.
pub fn tetrahedron_minus_triangle() -> CellComplex {
    CellComplex::simplicial(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]])
        .expect("valid facets")
}

pub fn octahedron_surface() -> CellComplex {
    let faces: Vec<Vec<Vertex>> = graphs::octahedron_faces().iter().map(|f| f.to_vec()).collect();
    CellComplex::simplicial(6, &faces).expect("valid facets")
}

/// Minimal 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}`
/// modulo 7.
pub fn torus7() -> CellComplex {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    CellComplex::simplicial(7, &faces).expect("valid facets")
}

/// Octahedron surface with two cones glued on: apex 6 over triangle 0-1-2
/// and apex 7 over the opposite triangle 3-4-5.
pub fn capped_octahedron() -> CellComplex {
    let mut faces: Vec<Vec<Vertex>> = graphs::octahedron_faces().iter().map(|f| f.to_vec()).collect();
    for (apex, base) in [(6, [0, 1, 2]), (7, [3, 4, 5])] {
        for skip in 0..3 {
            let mut f: Vec<Vertex> = base.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            f.push(apex);
            faces.push(f);
        }
    }
    CellComplex::simplicial(8, &faces).expect("valid facets")
}

/// Facets of a stacked `dim`-sphere: start from the boundary of the
/// `(dim+1)`-simplex and subdivide `extra` uniformly chosen facets by a new
/// central vertex each.
pub fn stacked_sphere_facets<R: Rng>(dim: usize, extra: usize, rng: &mut R) -> Vec<Vec<Vertex>> {
    let mut facets = subsets(dim + 2, dim + 1);
    for k in 0..extra {
        let v = dim + 2 + k;
        let f = facets.swap_remove(rng.gen_range(0..facets.len()));
        for skip in 0..f.len() {
            let mut g: Vec<Vertex> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
            g.push(v);
            facets.push(g);
        }
    }
    facets.sort();
    facets
}

pub fn stacked_sphere<R: Rng>(dim: usize, extra: usize, rng: &mut R) -> CellComplex {
    let facets = stacked_sphere_facets(dim, extra, rng);
    CellComplex::simplicial(dim + 2 + extra, &facets).expect("stacking yields valid facets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn simplex_boundaries() {
        assert_eq!(simplex_boundary(2).face_vector().0, vec![3, 3]);
        assert_eq!(simplex_boundary(4).face_vector().0, vec![5, 10, 10, 5]);
    }

    #[test]
    fn stacked_three_sphere_counts() {
        // each subdivision adds 1 vertex, 4 edges, 6 triangles, 3 tetrahedra
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let s = stacked_sphere(3, 3, &mut rng);
        assert_eq!(s.face_vector().0, vec![8, 22, 28, 14]);
        assert_eq!(s.euler_characteristic(), 0);
    }

    #[test]
    fn torus_edges_lie_in_two_triangles() {
        let t = torus7();
        assert!(t.cofacets(1).iter().all(|c| c.len() == 2));
        assert_eq!(t.skeleton().m(), 21);
    }

    #[test]
    fn capped_octahedron_counts() {
        assert_eq!(capped_octahedron().face_vector().0, vec![8, 18, 14]);
    }
}
