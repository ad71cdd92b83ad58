use serde::Serialize;

use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};

/// Multigraph with one vertex per top cell and one edge per facet, joining
/// the two top cells that contain it. Edge `j` comes from facet `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.vertices;
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                count -= 1;
            }
        }
        count
    }

    /// Dimension of the cycle space, `|E| - |V| + components`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.components() - self.vertices
    }
}

/// Dual graph of a closed complex whose top cells are its regions.
pub fn dual_graph(c: &CellComplex) -> Result<DualGraph> {
    let d = c.dim();
    if d == 0 || c.cells(d).is_empty() {
        return Err(Error::MissingRegions(d.max(1)));
    }
    let up = c.cofacets(d - 1);
    let mut edges = Vec::with_capacity(up.len());
    for (f, owners) in up.iter().enumerate() {
        if owners.len() != 2 {
            return Err(Error::NotClosedEmbedded(format!(
                "cell {} lies in {} cells of dimension {d}",
                CellId::new(d - 1, f),
                owners.len()
            )));
        }
        edges.push((owners[0], owners[1]));
    }
    let g = DualGraph {
        vertices: c.cells(d).len(),
        edges,
    };
    if g.components() != 1 {
        let mut reach = vec![false; g.vertices];
        reach[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(u, v) in &g.edges {
                if reach[u] != reach[v] {
                    reach[u] = true;
                    reach[v] = true;
                    changed = true;
                }
            }
        }
        return Err(Error::Disconnected {
            unreachable: (0..g.vertices).filter(|&v| !reach[v]).collect(),
        });
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuanheReport {
    pub d: usize,
    /// `|A_d|, |A_{d-1}|, |A_{d-2}|`.
    pub counts: [usize; 3],
    /// `|A_d| - |A_{d-1}| + |A_{d-2}|`.
    pub quantity: i64,
    pub holds: bool,
    pub dual_cycle_rank: usize,
    /// `|A_{d-1}| - |A_d| + 1`.
    pub expected_cycle_rank: i64,
    pub cycle_rank_matches: bool,
}

/// Checks `|A_d| - |A_{d-1}| + |A_{d-2}| >= 1` on a closed complex, with
/// `d` its dimension, alongside the cycle rank of its dual graph.
pub fn check_quanhe(c: &CellComplex) -> Result<QuanheReport> {
    let d = c.dim();
    if d < 2 {
        return Err(Error::InvalidArgument(format!("need dimension at least 2, got {d}")));
    }
    let dual = dual_graph(c)?;
    let counts = [c.cells(d).len(), c.cells(d - 1).len(), c.cells(d - 2).len()];
    let quantity = counts[0] as i64 - counts[1] as i64 + counts[2] as i64;
    let expected = counts[1] as i64 - counts[0] as i64 + 1;
    let rank = dual.cycle_rank();
    Ok(QuanheReport {
        d,
        counts,
        quantity,
        holds: quantity >= 1,
        dual_cycle_rank: rank,
        expected_cycle_rank: expected,
        cycle_rank_matches: rank as i64 == expected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RidgeDegree {
    pub cell: CellId,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub d: usize,
    /// Every `(d-1)`-cell has exactly `d` vertices.
    pub d_uniform: bool,
    pub scanned: usize,
    /// `(d-2)`-cells in at most `d+2` cells of dimension `d-1`.
    pub reducible: Vec<RidgeDegree>,
    /// `(d-2)`-cells in at least `d+3` cells of dimension `d-1`.
    pub non_reducible: Vec<RidgeDegree>,
    /// Some reducible cell exists, so `c` is not a minimal counterexample.
    pub excludes_minimal_counterexample: bool,
}

/// Scans the `(d-2)`-cells of `c` for ones lying in at most `d+2` cells of
/// dimension `d-1`. Vacuous when `c` has no such level.
pub fn verify_reducibility_jinyong1(c: &CellComplex, d: usize) -> ReducibilityReport {
    let mut report = ReducibilityReport {
        d,
        d_uniform: false,
        scanned: 0,
        reducible: Vec::new(),
        non_reducible: Vec::new(),
        excludes_minimal_counterexample: false,
    };
    if d < 2 || d - 1 > c.dim() {
        return report;
    }
    report.d_uniform = c.cells(d - 1).iter().all(|cell| cell.vertices.len() == d);
    let up = c.cofacets(d - 2);
    report.scanned = up.len();
    for (i, owners) in up.iter().enumerate() {
        let r = RidgeDegree {
            cell: CellId::new(d - 2, i),
            degree: owners.len(),
        };
        if r.degree <= d + 2 {
            report.reducible.push(r);
        } else {
            report.non_reducible.push(r);
        }
    }
    report.excludes_minimal_counterexample = !report.reducible.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{named, regions, RegionData};

    #[test]
    fn tetrahedron_dual() {
        let data = RegionData {
            regions: vec![vec![0, 1, 2, 3], vec![0, 1, 2, 3]],
        };
        let cx = regions(&named::tetrahedron_boundary(), Some(&data)).unwrap();
        let g = dual_graph(&cx).unwrap();
        assert_eq!(g.vertices, 2);
        assert_eq!(g.edges, vec![(0, 1); 4]);
        let q = check_quanhe(&cx).unwrap();
        assert_eq!(q.quantity, 4);
        assert!(q.holds && q.cycle_rank_matches);
        assert_eq!(q.dual_cycle_rank, 3);
    }

    #[test]
    fn octahedron_dual_is_cube() {
        let cx = regions(&CellComplex::from_graph(&crate::graph::named::octahedron()), None).unwrap();
        let g = dual_graph(&cx).unwrap();
        assert_eq!((g.vertices, g.edges.len()), (8, 12));
        let mut deg = vec![0; 8];
        for &(u, v) in &g.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        assert!(deg.iter().all(|&k| k == 3));
        assert_eq!(check_quanhe(&cx).unwrap().quantity, 2);
    }

    #[test]
    fn four_simplex_boundary() {
        let q = check_quanhe(&named::simplex_boundary(4)).unwrap();
        assert_eq!(q.counts, [5, 10, 10]);
        assert_eq!(q.quantity, 5);
        assert_eq!(q.dual_cycle_rank, 6);
        assert!(q.cycle_rank_matches);
    }

    #[test]
    fn pendant_facet_rejected() {
        let open = named::tetrahedron_minus_triangle();
        assert!(matches!(dual_graph(&open), Err(Error::NotClosedEmbedded(_))));
    }

    #[test]
    fn reducibility_scan() {
        let r = verify_reducibility_jinyong1(&named::tetrahedron_boundary(), 3);
        assert!(r.d_uniform);
        assert_eq!(r.scanned, 6);
        assert!(r.reducible.iter().all(|x| x.degree == 2));
        assert!(r.excludes_minimal_counterexample);
        let k8 = crate::complex::raise_dimension(
            &crate::graph::named::complete(8),
            2,
            crate::complex::RaiseMode::Triangulated,
        )
        .unwrap()
        .complex;
        let r = verify_reducibility_jinyong1(&k8, 3);
        assert_eq!(r.non_reducible.len(), 28);
        assert!(r.non_reducible.iter().all(|x| x.degree == 6));
        let r = verify_reducibility_jinyong1(&CellComplex::from_graph(&crate::graph::named::cycle(4)), 4);
        assert_eq!(r.scanned, 0);
        assert!(!r.excludes_minimal_counterexample);
    }
}
