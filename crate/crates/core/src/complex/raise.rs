use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::graph::{chordless_cycles, named, vertex_connectivity, Graph, Vertex};
use crate::topo::{certify_sphere, SphereCertificate, Verdict};

/// Largest skeleton for which certified mode enumerates vertex subsets.
pub const CERTIFIED_MAX_N: usize = 16;

/// Which induced spheres get filled.
///
/// * `Triangulated`: only simplex boundaries, i.e. `(i+2)`-cliques whose
///   induced cells are exactly the faces of the simplex.
/// * `General2`: simplex boundaries, plus at the first level every
///   chordless cycle whose removal leaves the graph connected.
/// * `Certified`: at the first level the chordless cycles, above it every
///   vertex set whose induced subcomplex gets a certified sphere
///   certificate (complement connectivity included).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RaiseMode {
    Triangulated,
    General2,
    Certified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    /// All levels up to the requested dimension were processed.
    TargetReached,
    /// A level had exactly one candidate sphere, which was filled.
    UniqueSphere,
    /// A level had no candidate sphere.
    NoSphere,
}

/// One filled sphere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FillRecord {
    /// Dimension of the new cell.
    pub dimension: usize,
    /// Top cells of the filled sphere, which form the new cell's boundary.
    pub filled_sphere: Vec<CellId>,
    pub new_cell: CellId,
    pub certificate: SphereCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaiseReport {
    pub complex: CellComplex,
    pub mode: RaiseMode,
    pub target: usize,
    pub stop: StopReason,
    /// The level whose processing ended the construction; a level fills
    /// spheres of that dimension.
    pub stop_level: usize,
    pub fills: Vec<FillRecord>,
    pub kappa: usize,
    /// Whether the graph meets the stricter requirement `x <= kappa - 2`
    /// with `kappa >= 4`.
    pub strict_hypothesis: bool,
    /// Candidates of a level are always enumerated against the complex as
    /// it stood before that level.
    pub snapshot_semantics: bool,
}

/// Builds `U^x(g)`. Level `i` (from 1 to `x - 1`) fills induced
/// `i`-spheres with `(i+1)`-cells; a level with one candidate is filled and
/// ends the construction, a level with none ends it unfilled.
///
/// For `x >= 2` the graph must have vertex connectivity at least `x`.
pub fn raise_dimension(g: &Graph, x: usize, mode: RaiseMode) -> Result<RaiseReport> {
    if x == 0 {
        return Err(Error::InvalidArgument("x must be at least 1".into()));
    }
    let kappa = if g.n() == 0 { 0 } else { vertex_connectivity(g)? };
    if x >= 2 && x > kappa {
        return Err(Error::InsufficientConnectivity { x, kappa });
    }
    raise_unchecked(g, x, mode, kappa)
}

fn raise_unchecked(g: &Graph, x: usize, mode: RaiseMode, kappa: usize) -> Result<RaiseReport> {
    let mut c = CellComplex::from_graph(g);
    let mut fills = Vec::new();
    let mut stop = StopReason::TargetReached;
    let mut stop_level = x.saturating_sub(1);
    for level in 1..x {
        let candidates = candidates(&c, level, mode)?;
        if candidates.is_empty() {
            stop = StopReason::NoSphere;
            stop_level = level;
            break;
        }
        let unique = candidates.len() == 1;
        c.ensure_dim(level + 1);
        for (sphere, certificate) in candidates {
            let boundary: Vec<usize> = sphere.iter().filter(|id| id.dim == level).map(|id| id.index).collect();
            let vertices: BTreeSet<Vertex> = boundary
                .iter()
                .flat_map(|&b| c.cells(level)[b].vertices.iter().copied())
                .collect();
            let new_cell = c.push_cell(level + 1, vertices.into_iter().collect(), boundary.clone());
            fills.push(FillRecord {
                dimension: level + 1,
                filled_sphere: boundary.into_iter().map(|b| CellId::new(level, b)).collect(),
                new_cell,
                certificate,
            });
        }
        if unique {
            stop = StopReason::UniqueSphere;
            stop_level = level;
            break;
        }
    }
    let strict_hypothesis = x < 2 || (kappa >= 4 && x + 2 <= kappa);
    Ok(RaiseReport {
        complex: c,
        mode,
        target: x,
        stop,
        stop_level,
        fills,
        kappa,
        strict_hypothesis,
        snapshot_semantics: true,
    })
}

type Candidate = (BTreeSet<CellId>, SphereCertificate);

/// Spheres of dimension `level` to fill, in canonical vertex-set order.
fn candidates(c: &CellComplex, level: usize, mode: RaiseMode) -> Result<Vec<Candidate>> {
    let g = c.skeleton();
    let mut found: BTreeMap<Vec<Vertex>, Candidate> = BTreeMap::new();
    let mut consider = |w: Vec<Vertex>, require_certified: bool| -> Result<()> {
        if found.contains_key(&w) {
            return Ok(());
        }
        let set: BTreeSet<Vertex> = w.iter().copied().collect();
        let sphere = c.induced_cells(&set, level);
        let cert = certify_sphere(c, &sphere, level)?;
        if !require_certified || cert.verdict == Verdict::Certified {
            found.insert(w, (sphere, cert));
        }
        Ok(())
    };
    if mode != RaiseMode::Certified {
        for w in cliques(g, level + 2) {
            if is_simplex_boundary(c, &w, level) {
                consider(w, false)?;
            }
        }
    }
    if level == 1 && mode != RaiseMode::Triangulated {
        for cycle in chordless_cycles(g) {
            let set: BTreeSet<Vertex> = cycle.iter().copied().collect();
            let keep = match mode {
                RaiseMode::General2 => cycle.len() == 3 || g.is_connected_avoiding(&set),
                _ => true,
            };
            if keep {
                consider(set.into_iter().collect(), mode == RaiseMode::Certified)?;
            }
        }
    }
    if level >= 2 && mode == RaiseMode::Certified {
        let n = g.n();
        if n > CERTIFIED_MAX_N {
            return Err(Error::TooLarge(format!(
                "certified mode enumerates vertex subsets; {n} vertices exceeds {CERTIFIED_MAX_N}"
            )));
        }
        for mask in 1u32..(1 << n) {
            if (mask.count_ones() as usize) < level + 2 {
                continue;
            }
            let w: Vec<Vertex> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let set: BTreeSet<Vertex> = w.iter().copied().collect();
            // cheap filters before certification: every vertex on some
            // top cell, every ridge in exactly two top cells
            let cells = c.induced_cells(&set, level);
            let tops: Vec<usize> = cells.iter().filter(|id| id.dim == level).map(|id| id.index).collect();
            if tops.len() < 2 {
                continue;
            }
            let covered: BTreeSet<Vertex> =
                tops.iter().flat_map(|&t| c.cells(level)[t].vertices.iter().copied()).collect();
            if covered != set {
                continue;
            }
            let mut ridge_count: BTreeMap<usize, usize> = BTreeMap::new();
            for &t in &tops {
                for &r in &c.cells(level)[t].boundary {
                    *ridge_count.entry(r).or_default() += 1;
                }
            }
            if ridge_count.values().any(|&k| k != 2) {
                continue;
            }
            consider(w, true)?;
        }
    }
    Ok(found.into_values().collect())
}

/// Whether the cells induced on `w` (of size `level + 2`) are exactly the
/// proper faces of the simplex on `w`.
fn is_simplex_boundary(c: &CellComplex, w: &[Vertex], level: usize) -> bool {
    let set: BTreeSet<Vertex> = w.iter().copied().collect();
    let cells = c.induced_cells(&set, level);
    let k = w.len();
    let expected: usize = (1..k).map(|j| binomial(k, j)).sum();
    cells.len() == expected
        && cells.iter().all(|id| c.cells(id.dim)[id.index].vertices.len() == id.dim + 1)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All cliques of exactly `k` vertices, each sorted, in lexicographic order.
fn cliques(g: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, k: usize, current: &mut Vec<Vertex>, cands: &[Vertex], out: &mut Vec<Vec<Vertex>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<Vertex> = cands[i + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            if current.len() + 1 + next.len() < k {
                continue;
            }
            current.push(v);
            grow(g, k, current, &next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<Vertex> = g.vertices().collect();
    grow(g, k, &mut Vec::new(), &all, &mut out);
    out
}

/// `U^{d-1}(K_{d+3})` in triangulated mode.
pub fn build_complete_witness(d: usize) -> Result<CellComplex> {
    if d < 2 {
        return Err(Error::InvalidArgument("witness needs d >= 2".into()));
    }
    let g = named::complete(d + 3);
    Ok(raise_unchecked(&g, d - 1, RaiseMode::Triangulated, d + 2)?.complex)
}

/// `U^{d-1}(K_{3,d+1})` in certified mode. Its first level coincides with
/// general2 mode since the graph has no triangles.
pub fn build_bipartite_witness(d: usize) -> Result<CellComplex> {
    if d < 2 {
        return Err(Error::InvalidArgument("witness needs d >= 2".into()));
    }
    let g = named::complete_bipartite(3, d + 1);
    Ok(raise_unchecked(&g, d - 1, RaiseMode::Certified, 3)?.complex)
}
