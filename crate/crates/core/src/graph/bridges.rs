use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, Vertex};
use crate::error::{Error, Result};

/// A bridge of a cycle `C` in `G`: either a chord of `C` (trivial bridge) or
/// a component of `G - V(C)` together with the edges linking it to `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bridge {
    /// Host cycle in canonical rotation (see [`canonical_cycle`]).
    pub host: Vec<Vertex>,
    pub internal_vertices: BTreeSet<Vertex>,
    pub attachments: BTreeSet<Vertex>,
    pub edges: BTreeSet<Edge>,
}

impl Bridge {
    pub fn is_trivial(&self) -> bool {
        self.internal_vertices.is_empty()
    }

    /// Number of attachments, the `k` of a k-bridge.
    pub fn order(&self) -> usize {
        self.attachments.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BridgeRelation {
    Avoid,
    Skew,
    Equivalent3Bridges,
    OverlapOther,
}

/// Rotates and orients a cycle so it starts at its smallest vertex and
/// continues towards the smaller of that vertex's two cycle neighbours.
pub fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let k = cycle.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<Vertex> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let bwd: Vec<Vertex> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    if k > 1 && bwd[1] < fwd[1] {
        bwd
    } else {
        fwd
    }
}

fn validate_cycle(g: &Graph, cycle: &[Vertex]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!("{cycle:?} has fewer than 3 vertices")));
    }
    let distinct: BTreeSet<_> = cycle.iter().collect();
    if distinct.len() != cycle.len() {
        return Err(Error::NotACycle(format!("{cycle:?} repeats a vertex")));
    }
    for &v in cycle {
        g.check_vertex(v)?;
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !g.has_edge(a, b) {
            return Err(Error::NotACycle(format!("{a}-{b} is not an edge")));
        }
    }
    Ok(())
}

/// Partitions `E(g) \ E(c)` into the bridges of the cycle `c` (given as a
/// closed vertex sequence). Chords come first, then non-trivial bridges in
/// order of their smallest internal vertex.
pub fn bridges_of_cycle(g: &Graph, cycle: &[Vertex]) -> Result<Vec<Bridge>> {
    validate_cycle(g, cycle)?;
    let host = canonical_cycle(cycle);
    let on_cycle: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let cycle_edges: BTreeSet<Edge> = (0..cycle.len())
        .map(|i| Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();

    let mut out = Vec::new();
    for e in g.edges() {
        if on_cycle.contains(&e.0) && on_cycle.contains(&e.1) && !cycle_edges.contains(&e) {
            out.push(Bridge {
                host: host.clone(),
                internal_vertices: BTreeSet::new(),
                attachments: [e.0, e.1].into(),
                edges: [e].into(),
            });
        }
    }
    for comp in g.components_avoiding(&on_cycle) {
        let internal: BTreeSet<Vertex> = comp.into_iter().collect();
        let mut attachments = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for &u in &internal {
            for &w in g.neighbors(u) {
                edges.insert(Edge::new(u, w));
                if on_cycle.contains(&w) {
                    attachments.insert(w);
                }
            }
        }
        out.push(Bridge {
            host: host.clone(),
            internal_vertices: internal,
            attachments,
            edges,
        });
    }
    Ok(out)
}

/// Classifies two bridges of the same cycle. Bridges avoid each other when
/// all attachments of one lie in a single segment of the other; overlapping
/// bridges are skew when they have interleaved attachments `u, x, v, y`,
/// and otherwise are equivalent 3-bridges when they share the same three
/// attachments.
pub fn classify_bridge_pair(b1: &Bridge, b2: &Bridge, cycle: &[Vertex]) -> Result<BridgeRelation> {
    let host = canonical_cycle(cycle);
    if b1.host != host || b2.host != host {
        return Err(Error::DifferentHosts);
    }
    let pos = |v: Vertex| host.iter().position(|&w| w == v);
    let positions = |b: &Bridge| -> Result<Vec<usize>> {
        let mut p = b
            .attachments
            .iter()
            .map(|&v| pos(v).ok_or_else(|| Error::NotACycle(format!("attachment {v} off the cycle"))))
            .collect::<Result<Vec<_>>>()?;
        p.sort_unstable();
        Ok(p)
    };
    let (p1, p2) = (positions(b1)?, positions(b2)?);
    let k = host.len();
    if within_one_segment(&p1, &p2, k) || within_one_segment(&p2, &p1, k) {
        return Ok(BridgeRelation::Avoid);
    }
    if interleaved(&p1, &p2) {
        return Ok(BridgeRelation::Skew);
    }
    if p1.len() == 3 && p1 == p2 {
        return Ok(BridgeRelation::Equivalent3Bridges);
    }
    Ok(BridgeRelation::OverlapOther)
}

/// Whether every position in `other` lies in one closed arc between
/// cyclically consecutive positions of `own`.
fn within_one_segment(own: &[usize], other: &[usize], k: usize) -> bool {
    if own.len() <= 1 {
        return true;
    }
    (0..own.len()).any(|i| {
        let (a, b) = (own[i], own[(i + 1) % own.len()]);
        other.iter().all(|&x| {
            let off = (x + k - a) % k;
            let len = (b + k - a) % k;
            let len = if len == 0 { k } else { len };
            off <= len
        })
    })
}

/// Distinct `u, v` from the first set and `x, y` from the second in cyclic
/// order `u, x, v, y`.
fn interleaved(p1: &[usize], p2: &[usize]) -> bool {
    for (i, &u) in p1.iter().enumerate() {
        for &v in &p1[i + 1..] {
            let inside = p2.iter().any(|&x| u < x && x < v);
            let outside = p2.iter().any(|&y| y < u || y > v);
            if inside && outside {
                return true;
            }
        }
    }
    false
}
