//! Branch-and-bound over partial branch-set assignments.
//!
//! For a connected pattern `H` and a connected host component, any model can
//! be grown until its branch sets cover the whole component, so the search
//! enumerates partitions of the component into exactly `|V(H)|` connected
//! blocks and asks whether the quotient graph contains `H`. Blocks are
//! labelled in order of their first vertex (restricted growth), which
//! visits every partition once. Disconnected patterns additionally allow a
//! vertex to stay unused.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{MinorModel, MAX_PATTERN_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Returns a model of `h` in `g`, or `None` when `h` is not a minor of `g`.
/// A pattern larger than the host is simply not a minor.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "pattern has {} vertices; at most {MAX_PATTERN_VERTICES} supported",
            h.n()
        )));
    }
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(None);
    }
    if h.n() == 0 {
        return Ok(Some(MinorModel {
            pattern: h.clone(),
            branch_sets: BTreeMap::new(),
            witness_edges: BTreeMap::new(),
        }));
    }
    let adj = g.adjacency_masks()?;
    let pattern = Pattern::new(h);
    let blocks = if h.is_connected() {
        g.components()
            .into_iter()
            .filter(|c| c.len() >= h.n())
            .find_map(|comp| {
                let order = bfs_order(g, &comp);
                Engine::new(&adj, order, &pattern, false).run()
            })
    } else {
        let order: Vec<Vertex> = g
            .components()
            .iter()
            .flat_map(|comp| bfs_order(g, comp))
            .collect();
        Engine::new(&adj, order, &pattern, true).run()
    };
    Ok(blocks.map(|(blocks, phi)| build_model(g, h, &adj, &blocks, &phi)))
}

fn bfs_order(g: &Graph, comp: &[Vertex]) -> Vec<Vertex> {
    let mut seen: BTreeSet<Vertex> = [comp[0]].into();
    let mut order = vec![comp[0]];
    let mut queue = VecDeque::from([comp[0]]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if seen.insert(w) {
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    order
}

struct Pattern {
    t: usize,
    adj: Vec<u32>,
    min_degree: usize,
    /// Degrees in decreasing order.
    degrees: Vec<usize>,
    complete: bool,
}

impl Pattern {
    fn new(h: &Graph) -> Self {
        let t = h.n();
        let adj: Vec<u32> = h
            .vertices()
            .map(|v| h.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect();
        let mut degrees: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Pattern {
            t,
            min_degree: degrees.last().copied().unwrap_or(0),
            degrees,
            adj,
            complete: h.m() == t * (t.saturating_sub(1)) / 2,
        }
    }
}

const UNUSED: usize = usize::MAX;

struct Engine<'a> {
    adj: &'a [u64],
    order: Vec<Vertex>,
    pattern: &'a Pattern,
    allow_unused: bool,
    blocks: Vec<u64>,
    open: usize,
    unprocessed: u64,
}

impl<'a> Engine<'a> {
    fn new(adj: &'a [u64], order: Vec<Vertex>, pattern: &'a Pattern, allow_unused: bool) -> Self {
        let unprocessed = order.iter().fold(0u64, |m, &v| m | (1 << v));
        Engine {
            adj,
            order,
            pattern,
            allow_unused,
            blocks: vec![0; pattern.t],
            open: 0,
            unprocessed,
        }
    }

    fn run(mut self) -> Option<(Vec<u64>, Vec<usize>)> {
        self.recurse(0)
    }

    fn neighborhood(&self, mut mask: u64) -> u64 {
        let mut out = 0;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Connected component of `mask` containing its lowest vertex.
    fn component(&self, mask: u64) -> u64 {
        let mut comp = mask & mask.wrapping_neg();
        loop {
            let grown = (comp | self.neighborhood(comp)) & mask;
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    /// Whether block `b` can still end up connected with enough quotient
    /// neighbours.
    fn block_viable(&self, b: usize) -> bool {
        let mask = self.blocks[b];
        let reach = self.neighborhood(mask);
        let mut rest = mask;
        let mut pieces = 0;
        let mut stranded = false;
        while rest != 0 {
            let comp = self.component(rest);
            rest &= !comp;
            pieces += 1;
            if self.neighborhood(comp) & self.unprocessed == 0 {
                stranded = true;
            }
        }
        if pieces > 1 && stranded {
            return false;
        }
        if reach & self.unprocessed == 0 {
            // frozen: its quotient neighbourhood can no longer change
            let degree = (0..self.open)
                .filter(|&c| c != b && self.blocks[c] & reach != 0)
                .count();
            if degree < self.pattern.min_degree {
                return false;
            }
        }
        true
    }

    fn feasible(&self, v: Vertex) -> bool {
        let remaining = self.unprocessed.count_ones() as usize;
        if self.pattern.t - self.open > remaining {
            return false;
        }
        let touched = self.adj[v] | (1 << v);
        (0..self.open)
            .filter(|&b| self.blocks[b] & touched != 0)
            .all(|b| self.block_viable(b))
    }

    fn recurse(&mut self, k: usize) -> Option<(Vec<u64>, Vec<usize>)> {
        if k == self.order.len() {
            return self.leaf();
        }
        let v = self.order[k];
        let bit = 1u64 << v;
        self.unprocessed &= !bit;
        let mut choices: Vec<usize> = (0..self.open).collect();
        if self.open < self.pattern.t {
            choices.push(self.open);
        }
        if self.allow_unused {
            choices.push(UNUSED);
        }
        let mut found = None;
        for b in choices {
            let opened = b != UNUSED && b == self.open;
            if b != UNUSED {
                self.blocks[b] |= bit;
            }
            if opened {
                self.open += 1;
            }
            if self.feasible(v) {
                found = self.recurse(k + 1);
            }
            if opened {
                self.open -= 1;
            }
            if b != UNUSED {
                self.blocks[b] &= !bit;
            }
            if found.is_some() {
                break;
            }
        }
        self.unprocessed |= bit;
        found
    }

    fn leaf(&self) -> Option<(Vec<u64>, Vec<usize>)> {
        let t = self.pattern.t;
        if self.open != t {
            return None;
        }
        if (0..t).any(|b| self.component(self.blocks[b]) != self.blocks[b]) {
            return None;
        }
        let quotient: Vec<u32> = (0..t)
            .map(|b| {
                let reach = self.neighborhood(self.blocks[b]);
                (0..t)
                    .filter(|&c| c != b && self.blocks[c] & reach != 0)
                    .fold(0u32, |m, c| m | (1 << c))
            })
            .collect();
        let phi = embed_spanning(self.pattern, &quotient)?;
        Some((self.blocks.clone(), phi))
    }
}

/// Bijection `phi` from pattern vertices to quotient vertices such that every
/// pattern edge maps to a quotient edge.
fn embed_spanning(p: &Pattern, quotient: &[u32]) -> Option<Vec<usize>> {
    let t = p.t;
    if p.complete {
        let full = (1u32 << t) - 1;
        return (0..t)
            .all(|b| quotient[b] | (1 << b) == full)
            .then(|| (0..t).collect());
    }
    let mut qdeg: Vec<usize> = quotient.iter().map(|m| m.count_ones() as usize).collect();
    qdeg.sort_unstable_by(|a, b| b.cmp(a));
    if qdeg.iter().zip(&p.degrees).any(|(q, h)| q < h) {
        return None;
    }
    let mut phi = vec![usize::MAX; t];
    fn extend(p: &Pattern, quotient: &[u32], phi: &mut Vec<usize>, used: u32, i: usize) -> bool {
        if i == p.t {
            return true;
        }
        for q in 0..p.t {
            if used & (1 << q) != 0 {
                continue;
            }
            let ok = (0..i).all(|j| p.adj[i] & (1 << j) == 0 || quotient[q] & (1 << phi[j]) != 0);
            if ok {
                phi[i] = q;
                if extend(p, quotient, phi, used | (1 << q), i + 1) {
                    return true;
                }
            }
        }
        false
    }
    extend(p, quotient, &mut phi, 0, 0).then_some(phi)
}

fn build_model(g: &Graph, h: &Graph, adj: &[u64], blocks: &[u64], phi: &[usize]) -> MinorModel {
    let members = |mask: u64| -> BTreeSet<Vertex> { (0..64).filter(|&v| mask & (1 << v) != 0).collect() };
    let branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>> = h
        .vertices()
        .map(|hv| (hv, members(blocks[phi[hv]])))
        .collect();
    let witness_edges = h
        .edges()
        .map(|e| {
            let target = blocks[phi[e.1]];
            let w = branch_sets[&e.0]
                .iter()
                .find_map(|&x| {
                    let hit = adj[x] & target;
                    (hit != 0).then(|| (x, hit.trailing_zeros() as usize))
                })
                .expect("quotient edge has a host witness");
            debug_assert!(g.has_edge(w.0, w.1));
            (e, w)
        })
        .collect();
    MinorModel {
        pattern: h.clone(),
        branch_sets,
        witness_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::minor::{has_clique_minor, has_complete_bipartite_minor, verify_minor_model};

    fn assert_model(g: &Graph, m: &Option<MinorModel>) {
        let m = m.as_ref().expect("expected a model");
        assert!(verify_minor_model(g, m).unwrap().valid);
    }

    #[test]
    fn identity_models() {
        let k5 = named::complete(5);
        let m = has_minor(&k5, &k5).unwrap().unwrap();
        assert!(m.branch_sets.values().all(|s| s.len() == 1));
        let k33 = named::complete_bipartite(3, 3);
        assert_model(&k33, &has_complete_bipartite_minor(&k33, 3, 3).unwrap());
    }

    #[test]
    fn petersen_minors() {
        let p = named::petersen();
        assert_model(&p, &has_clique_minor(&p, 5).unwrap());
        assert!(has_clique_minor(&p, 6).unwrap().is_none());
        assert_model(&p, &has_complete_bipartite_minor(&p, 3, 3).unwrap());
    }

    #[test]
    fn planar_hosts_are_wagner_free() {
        let o = named::octahedron();
        assert!(has_clique_minor(&o, 5).unwrap().is_none());
        assert!(has_complete_bipartite_minor(&o, 3, 3).unwrap().is_none());
        assert!(has_clique_minor(&named::complete_bipartite(3, 3), 5).unwrap().is_none());
    }

    #[test]
    fn disconnected_pattern_and_host() {
        // two disjoint triangles inside two disjoint K_4s
        let two_k3 = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let mut edges = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let host = Graph::from_edges(8, edges).unwrap();
        assert_model(&host, &has_minor(&host, &two_k3).unwrap());
        assert!(has_minor(&named::complete(4), &two_k3).unwrap().is_none());
        // connected pattern inside the second component only
        let host2 = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)]).unwrap();
        assert_model(&host2, &has_minor(&host2, &named::cycle(4)).unwrap());
    }

    #[test]
    fn oversized_patterns() {
        assert!(has_minor(&named::complete(4), &named::complete(5)).unwrap().is_none());
        assert!(has_minor(&named::complete(12), &named::complete(9)).is_err());
    }
}
