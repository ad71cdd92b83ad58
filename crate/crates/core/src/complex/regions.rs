use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::graph::{chordless_cycles, Edge, Vertex};

/// Complement regions of an embedded complex, each given by the indices of
/// the top-dimensional cells on its boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionData {
    pub regions: Vec<Vec<usize>>,
}

/// Extends `c` (of dimension `d - 1`) by one `d`-cell per region. Without
/// region data this only works for graphs (`d = 2`), whose faces are then
/// found by [`planar_regions`].
///
/// Every `(d-1)`-cell must end up in exactly two regions.
pub fn regions(c: &CellComplex, data: Option<&RegionData>) -> Result<CellComplex> {
    let d = c.dim() + 1;
    let computed;
    let data = match data {
        Some(r) => r,
        None if d == 2 => {
            computed = planar_regions(c)?;
            &computed
        }
        None => {
            return Err(Error::RegionsUnavailable(format!(
                "regions of a {}-dimensional complex must be supplied",
                c.dim()
            )))
        }
    };
    let closed = c.is_closed(d);
    if !closed.closed {
        let list: Vec<String> = closed.pendant_facets.iter().map(CellId::to_string).collect();
        return Err(Error::NotClosedEmbedded(format!("pendant facets {}", list.join(", "))));
    }
    let facets = c.cells(d - 1);
    let mut count = vec![0usize; facets.len()];
    for (r, region) in data.regions.iter().enumerate() {
        if region.is_empty() {
            return Err(Error::BadCell(format!("region {r} is empty")));
        }
        let mut seen = BTreeSet::new();
        for &f in region {
            if f >= facets.len() {
                return Err(Error::BadCell(format!("region {r}: no cell {}", CellId::new(d - 1, f))));
            }
            if !seen.insert(f) {
                return Err(Error::BadCell(format!("region {r}: facet {f} listed twice")));
            }
            count[f] += 1;
        }
    }
    if let Some((f, &k)) = count.iter().enumerate().find(|(_, &k)| k != 2) {
        return Err(Error::NotClosedEmbedded(format!(
            "cell {} lies in {k} regions",
            CellId::new(d - 1, f)
        )));
    }
    let mut out = c.clone();
    out.ensure_dim(d);
    for region in &data.regions {
        let mut boundary = region.clone();
        boundary.sort_unstable();
        let vertices: BTreeSet<Vertex> = boundary
            .iter()
            .flat_map(|&f| facets[f].vertices.iter().copied())
            .collect();
        out.push_cell(d, vertices.into_iter().collect(), boundary);
    }
    Ok(out)
}

/// Faces of a planar graph given as a 1-dimensional complex. A cycle has
/// two faces. Otherwise the faces are taken to be the induced cycles whose
/// removal leaves the graph connected, which are exactly the faces when
/// the graph is 3-connected and planar; the result is accepted only if
/// every edge lies on two faces, every vertex sees its faces as a single
/// ring, and Euler's formula holds.
pub fn planar_regions(c: &CellComplex) -> Result<RegionData> {
    if c.dim() != 1 {
        return Err(Error::RegionsUnavailable("faces are computed for graphs only".into()));
    }
    let g = c.skeleton();
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::RegionsUnavailable("graph must be connected with at least 3 vertices".into()));
    }
    let edge_index: BTreeMap<Edge, usize> = c
        .cells(1)
        .iter()
        .enumerate()
        .map(|(i, e)| (Edge::new(e.vertices[0], e.vertices[1]), i))
        .collect();
    let all: Vec<usize> = (0..g.m()).collect();
    if g.vertices().all(|v| g.degree(v) == 2) {
        return Ok(RegionData {
            regions: vec![all.clone(), all],
        });
    }
    let faces: Vec<Vec<usize>> = chordless_cycles(g)
        .into_iter()
        .filter(|cyc| g.is_connected_avoiding(&cyc.iter().copied().collect()))
        .map(|cyc| {
            (0..cyc.len())
                .map(|i| edge_index[&Edge::new(cyc[i], cyc[(i + 1) % cyc.len()])])
                .collect()
        })
        .collect();
    let unavailable = |why: &str| Error::RegionsUnavailable(format!("no planar face structure found: {why}"));
    let mut per_edge = vec![Vec::new(); g.m()];
    for (f, face) in faces.iter().enumerate() {
        for &e in face {
            per_edge[e].push(f);
        }
    }
    if per_edge.iter().any(|fs| fs.len() != 2) {
        return Err(unavailable("an edge does not lie on exactly two faces"));
    }
    if g.n() as i64 - g.m() as i64 + faces.len() as i64 != 2 {
        return Err(unavailable("Euler's formula fails"));
    }
    for v in g.vertices() {
        // faces at v joined through the edges at v must form one ring
        let at_v: Vec<usize> = g.neighbors(v).iter().map(|&w| edge_index[&Edge::new(v, w)]).collect();
        let mut reached: BTreeSet<usize> = [per_edge[at_v[0]][0]].into();
        let mut changed = true;
        while changed {
            changed = false;
            for &e in &at_v {
                let (a, b) = (per_edge[e][0], per_edge[e][1]);
                if reached.contains(&a) != reached.contains(&b) {
                    reached.insert(a);
                    reached.insert(b);
                    changed = true;
                }
            }
        }
        let touching: BTreeSet<usize> = at_v.iter().flat_map(|&e| per_edge[e].iter().copied()).collect();
        if reached != touching {
            return Err(unavailable("faces around a vertex do not form a ring"));
        }
    }
    Ok(RegionData { regions: faces })
}
