//! Cell complexes whose 1-skeleton is a simple graph, the dimension-raising
//! construction, region attachment, closedness checks and hyper ear
//! decompositions.
//!
//! Cells are stored per dimension. A cell is its sorted vertex set plus the
//! indices of its boundary cells one dimension down. The 0-cell with index
//! `v` is vertex `v`; 1-cells are the skeleton edges.

mod ears;
mod io;
pub mod named;
mod raise;
mod regions;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use ears::{verify_hyper_ear_decomposition, HyperEarCheck, HyperEarViolation};
pub use io::{parse_complex, ComplexJson};
pub use raise::{
    build_bipartite_witness, build_complete_witness, raise_dimension, FillRecord, RaiseMode,
    RaiseReport, StopReason,
};
pub use regions::{planar_regions, regions, RegionData};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub vertices: Vec<Vertex>,
    pub boundary: Vec<usize>,
}

/// A cell addressed by dimension and index within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

impl CellId {
    pub fn new(dim: usize, index: usize) -> Self {
        CellId { dim, index }
    }
}

impl std::fmt::Display for CellId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.dim, self.index)
    }
}

/// Cell counts `[|A_0|, ..., |A_x|]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceVector(pub Vec<usize>);

impl FaceVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<Vec<Cell>>,
    skeleton: Graph,
}

/// Outcome of [`CellComplex::is_closed`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedReport {
    pub closed: bool,
    pub top_dim: usize,
    /// Facets of top cells that lie in fewer than two top cells.
    pub pendant_facets: Vec<CellId>,
    /// Top cells owning a pendant facet.
    pub pendant_cells: Vec<CellId>,
}

impl CellComplex {
    /// The graph as a 1-dimensional complex.
    pub fn from_graph(g: &Graph) -> Self {
        let mut cells = vec![vertex_cells(g.n()), Vec::new()];
        cells[1] = g
            .edges()
            .map(|e| Cell {
                vertices: vec![e.0, e.1],
                boundary: vec![e.0, e.1],
            })
            .collect();
        CellComplex {
            cells,
            skeleton: g.clone(),
        }
    }

    /// Validates raw per-dimension cell lists.
    pub fn from_cells(cells: Vec<Vec<Cell>>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::BadCell("complex has no dimension levels".into()));
        }
        for (i, c) in cells[0].iter().enumerate() {
            if c.vertices != [i] || !c.boundary.is_empty() {
                return Err(Error::BadCell(format!(
                    "0-cell {i} must have vertex set [{i}] and empty boundary"
                )));
            }
        }
        let n = cells[0].len();
        for (dim, level) in cells.iter().enumerate().skip(1) {
            for (i, c) in level.iter().enumerate() {
                let id = CellId::new(dim, i);
                if c.vertices.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::BadCell(format!(
                        "cell {id}: vertex list must be strictly increasing (no repeated vertices)"
                    )));
                }
                if let Some(&v) = c.vertices.iter().find(|&&v| v >= n) {
                    return Err(Error::BadCell(format!("cell {id}: unknown vertex {v}")));
                }
                let lower = &cells[dim - 1];
                let mut seen = BTreeSet::new();
                for &b in &c.boundary {
                    if b >= lower.len() {
                        return Err(Error::BadCell(format!(
                            "cell {id}: boundary references missing cell {}",
                            CellId::new(dim - 1, b)
                        )));
                    }
                    if !seen.insert(b) {
                        return Err(Error::BadCell(format!("cell {id}: repeated boundary cell {b}")));
                    }
                }
                if dim == 1 && (c.boundary.len() != 2 || c.vertices.len() != 2) {
                    return Err(Error::BadCell(format!("cell {id}: an edge has two endpoints")));
                }
                let union: BTreeSet<Vertex> = c
                    .boundary
                    .iter()
                    .flat_map(|&b| lower[b].vertices.iter().copied())
                    .collect();
                if !union.iter().eq(c.vertices.iter()) {
                    return Err(Error::BadCell(format!(
                        "cell {id}: vertex set differs from the union of its boundary"
                    )));
                }
            }
        }
        let mut skeleton = Graph::empty(n);
        if let Some(edges) = cells.get(1) {
            for (i, c) in edges.iter().enumerate() {
                skeleton = skeleton
                    .with_edge(c.vertices[0], c.vertices[1])
                    .map_err(|_| Error::BadCell(format!("cell 1:{i}: duplicate edge")))?;
            }
        }
        Ok(CellComplex { cells, skeleton })
    }

    /// Simplicial complex generated by `facets` on vertices `0..n`. Faces
    /// of each dimension are indexed in lexicographic vertex order.
    pub fn simplicial(n: usize, facets: &[Vec<Vertex>]) -> Result<Self> {
        let mut faces: Vec<BTreeSet<Vec<Vertex>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) || f.iter().any(|&v| v >= n) || f.is_empty() {
                return Err(Error::BadCell(format!("invalid facet {f:?}")));
            }
            for mask in 1u64..(1 << f.len()) {
                let face: Vec<Vertex> =
                    (0..f.len()).filter(|&i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                let d = face.len() - 1;
                if faces.len() <= d {
                    faces.resize(d + 1, BTreeSet::new());
                }
                faces[d].insert(face);
            }
        }
        if faces.is_empty() {
            faces.push(BTreeSet::new());
        }
        faces[0] = (0..n).map(|v| vec![v]).collect();
        let index: Vec<BTreeMap<&Vec<Vertex>, usize>> = faces
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(faces.len());
        for (d, level) in faces.iter().enumerate() {
            let mut out = Vec::with_capacity(level.len());
            for f in level {
                let boundary = if d == 0 {
                    Vec::new()
                } else {
                    (0..f.len())
                        .map(|skip| {
                            let sub: Vec<Vertex> = f
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != skip)
                                .map(|(_, &v)| v)
                                .collect();
                            index[d - 1][&sub]
                        })
                        .collect()
                };
                out.push(Cell {
                    vertices: f.clone(),
                    boundary,
                });
            }
            cells.push(out);
        }
        CellComplex::from_cells(cells)
    }

    /// Top dimension, counting empty top levels.
    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        self.cells.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn cell(&self, id: CellId) -> Result<&Cell> {
        self.cells
            .get(id.dim)
            .and_then(|l| l.get(id.index))
            .ok_or_else(|| Error::BadCell(format!("no cell {id}")))
    }

    pub fn cell_ids(&self) -> impl Iterator<Item = CellId> + '_ {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(d, l)| (0..l.len()).map(move |i| CellId::new(d, i)))
    }

    pub fn face_vector(&self) -> FaceVector {
        FaceVector(self.cells.iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.face_vector().euler_characteristic()
    }

    /// Appends a cell and returns its id. Validation is the caller's job.
    pub(crate) fn push_cell(&mut self, dim: usize, vertices: Vec<Vertex>, boundary: Vec<usize>) -> CellId {
        while self.cells.len() <= dim {
            self.cells.push(Vec::new());
        }
        self.cells[dim].push(Cell { vertices, boundary });
        CellId::new(dim, self.cells[dim].len() - 1)
    }

    /// Pads the complex with empty levels up to `dim`.
    pub(crate) fn ensure_dim(&mut self, dim: usize) {
        while self.cells.len() <= dim {
            self.cells.push(Vec::new());
        }
    }

    /// For each cell of dimension `dim`, the indices of the `dim + 1` cells
    /// having it on their boundary.
    pub fn cofacets(&self, dim: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cells(dim).len()];
        for (i, c) in self.cells(dim + 1).iter().enumerate() {
            for &b in &c.boundary {
                out[b].push(i);
            }
        }
        out
    }

    /// Indices of all `j`-dimensional faces in the closure of `id` (`j` at
    /// most the cell's dimension; `j` equal to it yields the cell itself).
    pub fn faces(&self, id: CellId, j: usize) -> Result<BTreeSet<usize>> {
        self.cell(id)?;
        if j > id.dim {
            return Err(Error::InvalidArgument(format!("face dimension {j} exceeds {}", id.dim)));
        }
        let mut current: BTreeSet<usize> = [id.index].into();
        for d in (j + 1..=id.dim).rev() {
            current = current
                .iter()
                .flat_map(|&i| self.cells[d][i].boundary.iter().copied())
                .collect();
        }
        Ok(current)
    }

    /// Indices of all `j`-cells whose closure contains `id` (`j` at least
    /// the cell's dimension).
    pub fn cofaces(&self, id: CellId, j: usize) -> Result<BTreeSet<usize>> {
        self.cell(id)?;
        if j < id.dim || j > self.dim() {
            return Err(Error::InvalidArgument(format!(
                "coface dimension {j} outside {}..={}",
                id.dim,
                self.dim()
            )));
        }
        let mut current: BTreeSet<usize> = [id.index].into();
        for d in id.dim..j {
            let up = self.cofacets(d);
            current = current.iter().flat_map(|&i| up[i].iter().copied()).collect();
        }
        Ok(current)
    }

    /// The `j`-dimensional degree of a cell: for `j` below or above its
    /// dimension, the number of incident `j`-cells (faces or cofaces); for
    /// `j` equal to it, the number of other cells sharing a facet (a
    /// shared edge, for vertices).
    pub fn incidence_degree(&self, id: CellId, j: usize) -> Result<usize> {
        self.cell(id)?;
        if j > self.dim() {
            return Err(Error::InvalidArgument(format!(
                "dimension {j} exceeds complex dimension {}",
                self.dim()
            )));
        }
        if j < id.dim {
            return Ok(self.faces(id, j)?.len());
        }
        if j > id.dim {
            return Ok(self.cofaces(id, j)?.len());
        }
        if id.dim == 0 {
            return Ok(self.skeleton.degree(id.index));
        }
        let up = self.cofacets(id.dim - 1);
        let adjacent: BTreeSet<usize> = self.cells[id.dim][id.index]
            .boundary
            .iter()
            .flat_map(|&b| up[b].iter().copied())
            .filter(|&c| c != id.index)
            .collect();
        Ok(adjacent.len())
    }

    /// Closedness relative to an ambient dimension: every facet of every
    /// `(ambient_d - 1)`-cell must be shared with another such cell.
    pub fn is_closed(&self, ambient_d: usize) -> ClosedReport {
        let top = ambient_d.saturating_sub(1);
        let mut report = ClosedReport {
            closed: top >= 1 && top <= self.dim(),
            top_dim: top,
            pendant_facets: Vec::new(),
            pendant_cells: Vec::new(),
        };
        if !report.closed {
            return report;
        }
        let up = self.cofacets(top - 1);
        let mut owners = BTreeSet::new();
        for (f, tops) in up.iter().enumerate() {
            if tops.len() == 1 {
                report.pendant_facets.push(CellId::new(top - 1, f));
                owners.insert(tops[0]);
            }
        }
        report.pendant_cells = owners.into_iter().map(|i| CellId::new(top, i)).collect();
        report.closed = report.pendant_facets.is_empty();
        report
    }

    /// Downward closure of a set of cells.
    pub fn closure(&self, ids: &BTreeSet<CellId>) -> Result<BTreeSet<CellId>> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<CellId> = ids.iter().copied().collect();
        while let Some(id) = stack.pop() {
            let c = self.cell(id)?;
            if out.insert(id) && id.dim > 0 {
                stack.extend(c.boundary.iter().map(|&b| CellId::new(id.dim - 1, b)));
            }
        }
        Ok(out)
    }

    /// Cells of dimension at most `max_dim` whose vertices all lie in `w`.
    pub fn induced_cells(&self, w: &BTreeSet<Vertex>, max_dim: usize) -> BTreeSet<CellId> {
        self.cell_ids()
            .filter(|id| id.dim <= max_dim)
            .filter(|&id| self.cells[id.dim][id.index].vertices.iter().all(|v| w.contains(v)))
            .collect()
    }

    /// The subcomplex formed by `ids`, relabelled densely. Returns it with
    /// the old vertex ids and, per dimension, the old cell indices.
    pub fn subcomplex(&self, ids: &BTreeSet<CellId>) -> Result<(CellComplex, Vec<Vertex>, Vec<Vec<usize>>)> {
        for &id in ids {
            let c = self.cell(id)?;
            if id.dim > 0 {
                if let Some(&b) = c.boundary.iter().find(|&&b| !ids.contains(&CellId::new(id.dim - 1, b))) {
                    return Err(Error::NotSubcomplex(format!(
                        "cell {id} has boundary cell {} outside the set",
                        CellId::new(id.dim - 1, b)
                    )));
                }
            }
        }
        let top = ids.iter().map(|id| id.dim).max().unwrap_or(0);
        let mut old: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
        for id in ids {
            old[id.dim].push(id.index);
        }
        let new_index: Vec<BTreeMap<usize, usize>> = old
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &o)| (o, i)).collect())
            .collect();
        let vertex_map = &new_index[0];
        let cells: Vec<Vec<Cell>> = old
            .iter()
            .enumerate()
            .map(|(d, level)| {
                level
                    .iter()
                    .map(|&o| {
                        let c = &self.cells[d][o];
                        Cell {
                            vertices: c.vertices.iter().map(|v| vertex_map[v]).collect(),
                            boundary: if d == 0 {
                                Vec::new()
                            } else {
                                c.boundary.iter().map(|b| new_index[d - 1][b]).collect()
                            },
                        }
                    })
                    .collect()
            })
            .collect();
        let sub = CellComplex::from_cells(cells)?;
        let vertices = old[0].clone();
        Ok((sub, vertices, old))
    }

    /// The subcomplex induced on a vertex set, keeping cells up to
    /// `max_dim`.
    pub fn induced_subcomplex(&self, w: &BTreeSet<Vertex>, max_dim: usize) -> Result<CellComplex> {
        Ok(self.subcomplex(&self.induced_cells(w, max_dim))?.0)
    }

    /// Pairs of cells of equal dimension with identical vertex sets. Empty
    /// for complexes without multiple hyperedges.
    pub fn duplicate_vertex_sets(&self) -> Vec<(CellId, CellId)> {
        let mut out = Vec::new();
        for (d, level) in self.cells.iter().enumerate() {
            let mut first: BTreeMap<&[Vertex], usize> = BTreeMap::new();
            for (i, c) in level.iter().enumerate() {
                if let Some(&j) = first.get(c.vertices.as_slice()) {
                    out.push((CellId::new(d, j), CellId::new(d, i)));
                } else {
                    first.insert(&c.vertices, i);
                }
            }
        }
        out
    }

    /// Whether every cell is a simplex with its full set of facets.
    pub fn is_simplicial(&self) -> bool {
        self.cells.iter().enumerate().all(|(d, level)| {
            level
                .iter()
                .all(|c| c.vertices.len() == d + 1 && (d == 0 || c.boundary.len() == d + 1))
        }) && self.duplicate_vertex_sets().is_empty()
    }

    /// Index of the first cell of dimension `dim` with this vertex set.
    pub fn find_cell(&self, dim: usize, vertices: &[Vertex]) -> Option<usize> {
        self.cells(dim).iter().position(|c| c.vertices == vertices)
    }
}

fn vertex_cells(n: usize) -> Vec<Cell> {
    (0..n)
        .map(|v| Cell {
            vertices: vec![v],
            boundary: Vec::new(),
        })
        .collect()
}
