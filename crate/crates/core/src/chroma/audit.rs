use serde::Serialize;

use super::average_degree;
use crate::complex::CellComplex;
use crate::error::Result;
use crate::exact::{self, Rational};
use crate::graph::{bfs_layers, Vertex};
use crate::topo::{certify_standalone, Verdict, DEFAULT_PI1_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub basepoint: Vertex,
    pub sizes: Vec<usize>,
    /// Verdict for the subcomplex induced by each layer `i >= 1` as a
    /// `(d-1)`-sphere.
    pub sphere_layers: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub d: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Every cell is a simplex.
    pub triangulated: bool,
    #[serde(serialize_with = "exact::serialize")]
    pub average_degree: Rational,
    pub bound: usize,
    /// `average_degree < d(d+1)`, decided exactly.
    pub below_bound: bool,
    /// `|E| = 3|V| - 6`, reported for `d = 2`.
    pub planar_edge_count: Option<bool>,
    /// Empty when the skeleton is disconnected.
    pub layers: Vec<LayerReport>,
}

/// Average degree of the skeleton of `c` against `d(d+1)`, with BFS layer
/// sizes from every basepoint and a sphere check of each layer.
pub fn skeleton_average_degree_audit(c: &CellComplex, d: usize) -> Result<AuditReport> {
    let g = c.skeleton();
    let avg = average_degree(g)?;
    let bound = d * (d + 1);
    let mut layers = Vec::new();
    if g.is_connected() {
        for v in g.vertices() {
            let ls = bfs_layers(g, v)?;
            let mut verdicts = Vec::with_capacity(ls.len().saturating_sub(1));
            for layer in &ls[1..] {
                let sub = c.induced_subcomplex(layer, d.saturating_sub(1))?;
                verdicts.push(if d == 0 {
                    Verdict::Refuted
                } else {
                    certify_standalone(&sub, d - 1, DEFAULT_PI1_BUDGET)?.verdict
                });
            }
            layers.push(LayerReport {
                basepoint: v,
                sizes: ls.iter().map(|l| l.len()).collect(),
                sphere_layers: verdicts,
            });
        }
    }
    Ok(AuditReport {
        d,
        vertices: g.n(),
        edges: g.m(),
        triangulated: c.is_simplicial(),
        below_bound: avg < exact::int(bound as i64),
        average_degree: avg,
        bound,
        planar_edge_count: (d == 2).then(|| g.m() + 6 == 3 * g.n()),
        layers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::named;

    #[test]
    fn octahedron_surface() {
        let r = skeleton_average_degree_audit(&named::octahedron_surface(), 2).unwrap();
        assert_eq!(r.average_degree, exact::int(4));
        assert!(r.below_bound && r.triangulated);
        assert_eq!(r.planar_edge_count, Some(true));
        // from any vertex: itself, its 4-cycle link, the antipode
        assert!(r.layers.iter().all(|l| l.sizes == vec![1, 4, 1]));
        assert!(r.layers.iter().all(|l| l.sphere_layers[0] == Verdict::Certified));
    }

    #[test]
    fn simplex_boundary_skeleton() {
        let r = skeleton_average_degree_audit(&named::simplex_boundary(4), 3).unwrap();
        assert_eq!(r.average_degree, exact::int(4));
        assert!(r.below_bound);
        assert_eq!(r.layers[0].sizes, vec![1, 4]);
        assert_eq!(r.layers[0].sphere_layers, vec![Verdict::Certified]);
    }

    #[test]
    fn stacked_three_sphere() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s = named::stacked_sphere(3, 3, &mut rng);
        let r = skeleton_average_degree_audit(&s, 3).unwrap();
        assert_eq!(r.vertices, 8);
        assert_eq!(r.average_degree, exact::ratio(2 * 22, 8));
        assert!(r.below_bound);
    }
}
