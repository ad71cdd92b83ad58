mod common;

use std::collections::BTreeSet;

use geomgraph::complex::{
    build_bipartite_witness, build_complete_witness, named, parse_complex, raise_dimension, RaiseMode, StopReason,
};
use geomgraph::graph::{named as graphs, vertex_connectivity};
use geomgraph::topo::{
    betti_numbers, boundary_matrices, certify_sphere, certify_standalone, BoundaryMatrix, Coefficients, Verdict,
    DEFAULT_PI1_BUDGET,
};
use geomgraph::CellComplex;
use proptest::prelude::*;

use common::corpus::{random_region_complex, region_corpus};
use common::random_graph;

fn complex_corpus() -> Vec<(String, CellComplex)> {
    let mut out = region_corpus();
    out.push(("torus".into(), named::torus7()));
    out.push(("capped-octahedron".into(), named::capped_octahedron()));
    out.push(("tetrahedron-minus-triangle".into(), named::tetrahedron_minus_triangle()));
    for d in 2..=4 {
        out.push((format!("complete-witness-{d}"), build_complete_witness(d).unwrap()));
        out.push((format!("bipartite-witness-{d}"), build_bipartite_witness(d).unwrap()));
    }
    out.push((
        "C5-general2".into(),
        raise_dimension(&graphs::cycle(5), 2, RaiseMode::General2).unwrap().complex,
    ));
    out
}

/// Dense product of two sparse integer boundary matrices.
fn compose(outer: &BoundaryMatrix, inner: &BoundaryMatrix) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; inner.columns.len()]; outer.rows];
    for (j, col) in inner.columns.iter().enumerate() {
        for &(k, a) in col {
            for &(i, b) in &outer.columns[k] {
                out[i][j] += a as i64 * b as i64;
            }
        }
    }
    out
}

#[test]
fn boundary_of_boundary_vanishes() {
    for (name, c) in complex_corpus() {
        let data = boundary_matrices(&c).unwrap();
        for i in 2..=c.dim() {
            let prod = compose(data.boundary(i - 1).unwrap(), data.boundary(i).unwrap());
            assert!(prod.iter().flatten().all(|&x| x == 0), "{name}: integer d{}d{i}", i - 1);
            assert!(prod.iter().flatten().all(|&x| x % 2 == 0), "{name}: mod 2");
        }
    }
}

#[test]
fn euler_characteristic_is_alternating_betti_sum() {
    for (name, c) in complex_corpus() {
        for k in [Coefficients::Gf2, Coefficients::Rational] {
            let b = betti_numbers(&c, k).unwrap();
            let alt: i64 = b.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            assert_eq!(alt, c.euler_characteristic(), "{name}");
        }
    }
}

#[test]
fn named_betti_numbers() {
    let q = Coefficients::Rational;
    assert_eq!(betti_numbers(&named::torus7(), q).unwrap(), vec![1, 2, 1]);
    assert_eq!(betti_numbers(&named::simplex_boundary(4), q).unwrap(), vec![1, 0, 0, 1]);
    assert_eq!(betti_numbers(&named::capped_octahedron(), q).unwrap(), vec![1, 0, 3]);
    assert_eq!(betti_numbers(&build_bipartite_witness(3).unwrap(), q).unwrap(), vec![1, 0, 12]);
    assert_eq!(betti_numbers(&build_bipartite_witness(3).unwrap(), Coefficients::Gf2).unwrap(), vec![1, 0, 12]);
}

#[test]
fn every_fill_is_a_certified_sphere_in_certified_mode() {
    for g in [graphs::complete(5), graphs::complete_bipartite(3, 4), graphs::octahedron()] {
        let r = raise_dimension(&g, 2, RaiseMode::Certified).unwrap();
        assert!(!r.fills.is_empty());
        for f in &r.fills {
            assert_eq!(f.certificate.verdict, Verdict::Certified);
            let tops: BTreeSet<_> = f.filled_sphere.iter().copied().collect();
            let (s, _, _) = r.complex.subcomplex(&r.complex.closure(&tops).unwrap()).unwrap();
            let alone = certify_standalone(&s, f.dimension - 1, DEFAULT_PI1_BUDGET).unwrap();
            assert_eq!(alone.verdict, Verdict::Certified);
        }
    }
}

#[test]
fn four_vertex_subcomplexes_of_raised_k6_are_spheres() {
    let c = build_complete_witness(3).unwrap();
    let mut count = 0;
    for mask in 0u32..64 {
        if mask.count_ones() != 4 {
            continue;
        }
        let w: BTreeSet<usize> = (0..6).filter(|v| mask >> v & 1 == 1).collect();
        let cells = c.induced_cells(&w, 2);
        assert_eq!(certify_sphere(&c, &cells, 2).unwrap().verdict, Verdict::Certified);
        count += 1;
    }
    assert_eq!(count, 15);
}

#[test]
fn raising_is_deterministic_and_round_trips() {
    for mode in [RaiseMode::Triangulated, RaiseMode::General2, RaiseMode::Certified] {
        let a = raise_dimension(&graphs::octahedron(), 3, mode).unwrap();
        let b = raise_dimension(&graphs::octahedron(), 3, mode).unwrap();
        assert_eq!(a.complex, b.complex);
        let text = serde_json::to_string(&a.complex).unwrap();
        assert_eq!(text, serde_json::to_string(&b.complex).unwrap());
        assert_eq!(parse_complex(&text).unwrap(), a.complex);
    }
}

#[test]
fn octahedron_raised_to_three() {
    // the eight triangles bound the only 2-sphere, which gets filled
    let r = raise_dimension(&graphs::octahedron(), 3, RaiseMode::Triangulated).unwrap();
    assert_eq!(r.complex.face_vector().0, vec![6, 12, 8]);
    assert_eq!(r.stop, StopReason::NoSphere);
    let r = raise_dimension(&graphs::octahedron(), 3, RaiseMode::Certified).unwrap();
    assert_eq!(r.complex.face_vector().0, vec![6, 12, 8, 1]);
    assert_eq!(r.stop, StopReason::UniqueSphere);
}

#[test]
fn region_corpus_is_closed_and_consistent() {
    for (name, c) in region_corpus() {
        let d = c.dim();
        assert!(c.is_closed(d).closed, "{name}");
        let chi: i64 = c.euler_characteristic();
        assert_eq!(chi, 1 + if d % 2 == 0 { 1 } else { -1 }, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn raising_preserves_the_skeleton(n in 4usize..9, p in 30u64..95, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let kappa = vertex_connectivity(&g).unwrap();
        for mode in [RaiseMode::Triangulated, RaiseMode::General2] {
            let x = kappa.clamp(1, 3);
            let r = raise_dimension(&g, x, mode).unwrap();
            prop_assert_eq!(r.complex.skeleton(), &g);
            prop_assert!(r.complex.dim() <= x);
        }
    }

    #[test]
    fn random_region_complexes_satisfy_euler(seed in any::<u64>()) {
        let c = random_region_complex(seed);
        let d = c.dim();
        prop_assert_eq!(c.euler_characteristic(), 1 + if d % 2 == 0 { 1 } else { -1 });
        let b = betti_numbers(&c, Coefficients::Gf2).unwrap();
        prop_assert_eq!(b[0], 1);
    }
}
