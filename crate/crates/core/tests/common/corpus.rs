//! Closed complexes with their region cells, used across the property and
//! acceptance tests.

use geomgraph::complex::{named, regions, RegionData};
use geomgraph::graph::{named as graphs, stacked_planar_triangulation};
use geomgraph::CellComplex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adds an inside and an outside region to a closed sphere.
pub fn with_two_regions(sphere: &CellComplex) -> CellComplex {
    let all: Vec<usize> = (0..sphere.cells(sphere.dim()).len()).collect();
    regions(sphere, Some(&RegionData { regions: vec![all.clone(), all] })).unwrap()
}

pub fn planar_with_faces(g: &geomgraph::Graph) -> CellComplex {
    regions(&CellComplex::from_graph(g), None).unwrap()
}

/// Named region-complete complexes; each has dimension `d`.
pub fn region_corpus() -> Vec<(String, CellComplex)> {
    let mut out = vec![
        ("tetrahedron+regions".to_string(), with_two_regions(&named::tetrahedron_boundary())),
        ("planar-octahedron".to_string(), planar_with_faces(&graphs::octahedron())),
        ("four-simplex+regions".to_string(), with_two_regions(&named::simplex_boundary(4))),
        ("octahedron-surface+regions".to_string(), with_two_regions(&named::octahedron_surface())),
        ("planar-K4".to_string(), planar_with_faces(&graphs::complete(4))),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 5..=12 {
        let t = stacked_planar_triangulation(n, &mut rng);
        out.push((format!("stacked-planar-{n}"), planar_with_faces(&t.graph)));
    }
    for (dim, extra) in [(2, 3), (3, 2), (3, 3)] {
        let s = named::stacked_sphere(dim, extra, &mut rng);
        out.push((format!("stacked-S{dim}-{extra}+regions"), with_two_regions(&s)));
    }
    out
}

/// A random stacked sphere of dimension 1 to 3 with inside and outside
/// regions, or a random stacked planar triangulation with its faces.
pub fn random_region_complex(seed: u64) -> CellComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.3) {
        let n = rng.gen_range(4..=12);
        planar_with_faces(&stacked_planar_triangulation(n, &mut rng).graph)
    } else {
        let dim = rng.gen_range(1..=3);
        let extra = rng.gen_range(0..=4);
        with_two_regions(&named::stacked_sphere(dim, extra, &mut rng))
    }
}
