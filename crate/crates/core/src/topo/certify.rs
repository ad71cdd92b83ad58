use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::chain::{betti_numbers, Coefficients};
use super::pi1::{pi1_trivial, Tri, DEFAULT_PI1_BUDGET};
use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereChecks {
    /// Every cell lies in an `i`-cell and nothing exceeds dimension `i`.
    pub pure: bool,
    /// Every `(i-1)`-cell lies in exactly two `i`-cells and the `i`-cells
    /// are connected through shared `(i-1)`-cells.
    pub pseudo_manifold: bool,
    pub betti_profile_matches: bool,
    pub betti_gf2: Vec<usize>,
    pub betti_rational: Vec<usize>,
    pub euler_matches: bool,
    pub euler: i64,
    /// Not computed for `i < 2`.
    pub pi1_trivial: Option<Tri>,
    /// Whether the cells are all cells of dimension at most `i` spanned by
    /// their vertices. Absent for standalone certification.
    pub induced: Option<bool>,
    /// Whether the skeleton stays connected once the sphere's vertices are
    /// removed. Absent for standalone certification.
    pub complement_connected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereCertificate {
    pub cells: Vec<CellId>,
    pub dimension: usize,
    pub checks: SphereChecks,
    pub verdict: Verdict,
}

fn expected_betti(i: usize) -> Vec<usize> {
    if i == 0 {
        return vec![2];
    }
    let mut b = vec![0; i + 1];
    b[0] = 1;
    b[i] = 1;
    b
}

/// Topological checks on a complex taken as a whole.
fn intrinsic_checks(s: &CellComplex, i: usize, budget: usize) -> Result<SphereChecks> {
    let top_ok = s.dim() == i && !s.cells(i).is_empty();
    let pure = top_ok && {
        let all: BTreeSet<CellId> = s.cells(i).iter().enumerate().map(|(j, _)| CellId::new(i, j)).collect();
        s.closure(&all)?.len() == s.cell_ids().count()
    };
    let pseudo_manifold = pure
        && (i == 0 || {
            let up = s.cofacets(i - 1);
            up.iter().all(|c| c.len() == 2) && dual_connected(s, i, &up)
        });
    let betti_gf2 = betti_numbers(s, Coefficients::Gf2)?;
    let betti_rational = betti_numbers(s, Coefficients::Rational)?;
    let want = expected_betti(i);
    let betti_profile_matches = betti_gf2 == want && betti_rational == want;
    let euler = s.euler_characteristic();
    let euler_matches = euler == if i % 2 == 0 { 2 } else { 0 };
    let pi1 = if i < 2 {
        None
    } else if !s.skeleton().is_connected() || s.skeleton().n() == 0 {
        Some(Tri::No)
    } else {
        Some(pi1_trivial(s, budget)?.verdict)
    };
    Ok(SphereChecks {
        pure,
        pseudo_manifold,
        betti_profile_matches,
        betti_gf2,
        betti_rational,
        euler_matches,
        euler,
        pi1_trivial: pi1,
        induced: None,
        complement_connected: None,
    })
}

fn dual_connected(s: &CellComplex, i: usize, up: &[Vec<usize>]) -> bool {
    let n = s.cells(i).len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for &f in &s.cells(i)[t].boundary {
            for &o in &up[f] {
                if !seen[o] {
                    seen[o] = true;
                    stack.push(o);
                }
            }
        }
    }
    seen.iter().all(|&x| x)
}

fn verdict(ch: &SphereChecks) -> Verdict {
    let definite = [
        ch.pure,
        ch.pseudo_manifold,
        ch.betti_profile_matches,
        ch.euler_matches,
        ch.induced.unwrap_or(true),
        ch.complement_connected.unwrap_or(true),
    ];
    if definite.contains(&false) || ch.pi1_trivial == Some(Tri::No) {
        Verdict::Refuted
    } else if ch.pi1_trivial == Some(Tri::Unknown) {
        Verdict::Inconclusive
    } else {
        Verdict::Certified
    }
}

/// Certifies a whole complex as a candidate `i`-sphere, without the
/// induced and complement conditions.
pub fn certify_standalone(s: &CellComplex, i: usize, budget: usize) -> Result<SphereCertificate> {
    let checks = intrinsic_checks(s, i, budget)?;
    Ok(SphereCertificate {
        cells: s.cell_ids().collect(),
        dimension: i,
        verdict: verdict(&checks),
        checks,
    })
}

/// Certifies the subcomplex `cells` of `c` as an induced `i`-sphere.
pub fn certify_sphere(c: &CellComplex, cells: &BTreeSet<CellId>, i: usize) -> Result<SphereCertificate> {
    certify_sphere_with_budget(c, cells, i, DEFAULT_PI1_BUDGET)
}

pub fn certify_sphere_with_budget(
    c: &CellComplex,
    cells: &BTreeSet<CellId>,
    i: usize,
    budget: usize,
) -> Result<SphereCertificate> {
    if cells.is_empty() {
        return Err(Error::NotSubcomplex("empty cell set".into()));
    }
    let (sub, vertices, _) = c.subcomplex(cells)?;
    let mut checks = intrinsic_checks(&sub, i, budget)?;
    let w: BTreeSet<Vertex> = vertices.into_iter().collect();
    checks.induced = Some(c.induced_cells(&w, i) == *cells);
    checks.complement_connected = Some(c.skeleton().is_connected_avoiding(&w));
    Ok(SphereCertificate {
        cells: cells.iter().copied().collect(),
        dimension: i,
        verdict: verdict(&checks),
        checks,
    })
}
