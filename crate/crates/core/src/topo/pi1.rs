use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::graph::Edge;

pub const DEFAULT_PI1_BUDGET: usize = 10_000;

/// Relators longer than this abort simplification with an unknown verdict.
const MAX_RELATOR_LEN: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

/// Finitely presented group. Letter `+(g+1)` is generator `g`, `-(g+1)` its
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Report {
    pub verdict: Tri,
    pub generators: usize,
    pub relators: usize,
    pub remaining_generators: usize,
    pub remaining_relators: usize,
    pub steps: usize,
    pub budget: usize,
    pub budget_exhausted: bool,
    /// Free rank of the abelianization.
    pub h1_rank: usize,
    pub h1_trivial: bool,
}

/// Edge-path presentation of the fundamental group: generators are the
/// edges outside a BFS spanning tree of the skeleton, relators the
/// boundary walks of the 2-cells.
pub fn edge_path_presentation(c: &CellComplex) -> Result<Presentation> {
    let g = c.skeleton();
    let comps = g.components();
    if comps.len() != 1 {
        return Err(Error::Disconnected {
            unreachable: comps.iter().skip(1).flatten().copied().collect(),
        });
    }
    let mut tree: BTreeSet<Edge> = BTreeSet::new();
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                tree.insert(Edge::new(u, w));
                queue.push_back(w);
            }
        }
    }
    let mut gen_of: BTreeMap<Edge, i32> = BTreeMap::new();
    for e in g.edges() {
        if !tree.contains(&e) {
            let k = gen_of.len() as i32 + 1;
            gen_of.insert(e, k);
        }
    }
    let edges = c.cells(1);
    let mut relators = Vec::new();
    for (j, cell) in c.cells(2).iter().enumerate() {
        let walk = boundary_walk(cell.boundary.iter().map(|&b| (edges[b].vertices[0], edges[b].vertices[1])))
            .ok_or_else(|| Error::InconsistentBoundary(format!("{} (boundary is not a cycle)", CellId::new(2, j))))?;
        let mut word = Vec::new();
        for w in walk.windows(2) {
            if let Some(&k) = gen_of.get(&Edge::new(w[0], w[1])) {
                word.push(if w[0] < w[1] { k } else { -k });
            }
        }
        relators.push(word);
    }
    Ok(Presentation {
        generators: gen_of.len(),
        relators,
    })
}

/// Closed vertex walk around a set of edges forming one cycle, starting at
/// the smallest vertex toward its smaller neighbour.
fn boundary_walk(edges: impl Iterator<Item = (usize, usize)>) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut count = 0;
    for (u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
        count += 1;
    }
    if count < 2 || adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let (&start, nb) = adj.iter().next()?;
    let mut walk = vec![start, *nb.iter().min()?];
    while walk.len() <= count {
        let (prev, cur) = (walk[walk.len() - 2], walk[walk.len() - 1]);
        let next = adj[&cur].iter().copied().find(|&x| x != prev).unwrap_or(prev);
        walk.push(next);
        if next == start {
            break;
        }
    }
    (walk.len() == count + 1 && *walk.last()? == start).then_some(walk)
}

fn reduce(word: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let (mut i, mut j) = (0, out.len());
    while j - i >= 2 && out[i] == -out[j - 1] {
        i += 1;
        j -= 1;
    }
    *word = out[i..j].to_vec();
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&x| -x).collect()
}

/// Tietze-style simplification. Returns the reduced presentation, the step
/// count and whether the budget ran out.
pub fn simplify(p: &Presentation, budget: usize) -> (Presentation, usize, bool) {
    let mut alive: BTreeSet<i32> = (1..=p.generators as i32).collect();
    let mut rels: Vec<Vec<i32>> = p.relators.clone();
    let mut steps = 0;
    loop {
        for r in rels.iter_mut() {
            reduce(r);
        }
        rels.retain(|r| !r.is_empty());
        rels.sort_by_key(Vec::len);
        rels.dedup();
        if alive.is_empty() {
            break;
        }
        if steps >= budget {
            return (finish(&alive, rels), steps, true);
        }
        // find (relator index, generator) with the generator occurring once
        let mut pick = None;
        for (i, r) in rels.iter().enumerate() {
            let mut count: BTreeMap<i32, usize> = BTreeMap::new();
            for &x in r {
                *count.entry(x.abs()).or_default() += 1;
            }
            if let Some((&gen, _)) = count.iter().find(|(_, &n)| n == 1) {
                pick = Some((i, gen));
                break;
            }
        }
        let Some((i, gen)) = pick else {
            break;
        };
        steps += 1;
        let r = rels.remove(i);
        let pos = r.iter().position(|&x| x.abs() == gen).unwrap();
        // r = A x^s B, so x^s = (B A)^-1
        let mut rest: Vec<i32> = r[pos + 1..].to_vec();
        rest.extend_from_slice(&r[..pos]);
        let value = if r[pos] > 0 { invert(&rest) } else { rest };
        let value_inv = invert(&value);
        for other in rels.iter_mut() {
            if other.iter().any(|x| x.abs() == gen) {
                let mut out = Vec::with_capacity(other.len());
                for &x in other.iter() {
                    if x == gen {
                        out.extend_from_slice(&value);
                    } else if x == -gen {
                        out.extend_from_slice(&value_inv);
                    } else {
                        out.push(x);
                    }
                }
                *other = out;
            }
        }
        alive.remove(&gen);
        if rels.iter().any(|r| r.len() > MAX_RELATOR_LEN) {
            return (finish(&alive, rels), steps, true);
        }
    }
    (finish(&alive, rels), steps, false)
}

fn finish(alive: &BTreeSet<i32>, rels: Vec<Vec<i32>>) -> Presentation {
    let rename: BTreeMap<i32, i32> = alive.iter().enumerate().map(|(i, &g)| (g, i as i32 + 1)).collect();
    let relators = rels
        .into_iter()
        .map(|r| r.into_iter().map(|x| rename[&x.abs()] * x.signum()).collect())
        .collect();
    Presentation {
        generators: alive.len(),
        relators,
    }
}

/// Free rank of the abelianization and whether it is trivial, from the
/// Hermite form of the exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> (usize, bool) {
    let g = p.generators;
    let mut rows: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); g];
            for &x in r {
                row[x.unsigned_abs() as usize - 1] += x.signum();
            }
            row
        })
        .collect();
    let mut rank = 0;
    let mut unit_pivots = true;
    for col in 0..g {
        loop {
            let nonzero: Vec<usize> = (rank..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
            let Some(&best) = nonzero.iter().min_by_key(|&&r| rows[r][col].abs()) else {
                break;
            };
            if nonzero.len() == 1 {
                rows.swap(rank, best);
                if !rows[rank][col].abs().is_one() {
                    unit_pivots = false;
                }
                rank += 1;
                break;
            }
            let pivot = rows[best].clone();
            for &r in &nonzero {
                if r != best {
                    let q = &rows[r][col] / &pivot[col];
                    for (x, y) in rows[r].iter_mut().zip(&pivot) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }
    (g - rank, rank == g && unit_pivots)
}

/// Tri-state triviality of a presented group.
pub fn presentation_trivial(p: &Presentation, budget: usize) -> Pi1Report {
    let (reduced, steps, exhausted) = simplify(p, budget);
    let (h1_rank, h1_trivial) = abelianization(p);
    let verdict = if reduced.generators == 0 {
        Tri::Yes
    } else if !h1_trivial {
        Tri::No
    } else {
        Tri::Unknown
    };
    Pi1Report {
        verdict,
        generators: p.generators,
        relators: p.relators.len(),
        remaining_generators: reduced.generators,
        remaining_relators: reduced.relators.len(),
        steps,
        budget,
        budget_exhausted: exhausted,
        h1_rank,
        h1_trivial,
    }
}

/// Whether the fundamental group of a connected complex is trivial.
pub fn pi1_trivial(c: &CellComplex, budget: usize) -> Result<Pi1Report> {
    Ok(presentation_trivial(&edge_path_presentation(c)?, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::named;

    #[test]
    fn sphere_is_simply_connected() {
        let r = pi1_trivial(&named::tetrahedron_boundary(), DEFAULT_PI1_BUDGET).unwrap();
        assert_eq!(r.verdict, Tri::Yes);
        assert!(r.h1_trivial);
        let r = pi1_trivial(&named::octahedron_surface(), DEFAULT_PI1_BUDGET).unwrap();
        assert_eq!(r.verdict, Tri::Yes);
    }

    #[test]
    fn torus_is_not() {
        let r = pi1_trivial(&named::torus7(), DEFAULT_PI1_BUDGET).unwrap();
        assert_eq!(r.verdict, Tri::No);
        assert_eq!(r.h1_rank, 2);
    }

    #[test]
    fn graphs_are_free() {
        let c = CellComplex::from_graph(&crate::graph::named::petersen());
        let r = pi1_trivial(&c, DEFAULT_PI1_BUDGET).unwrap();
        assert_eq!((r.verdict, r.generators, r.h1_rank), (Tri::No, 6, 6));
    }

    #[test]
    fn budget_exhaustion_gives_unknown() {
        let r = pi1_trivial(&named::tetrahedron_boundary(), 0).unwrap();
        assert_eq!(r.verdict, Tri::Unknown);
        assert!(r.budget_exhausted);
        // <a, b | a^2 b^-3, a^3 b^-5> is trivial with trivial abelianization,
        // but no generator occurs exactly once in a relator
        let p = Presentation {
            generators: 2,
            relators: vec![vec![1, 1, -2, -2, -2], vec![1, 1, 1, -2, -2, -2, -2, -2]],
        };
        let r = presentation_trivial(&p, DEFAULT_PI1_BUDGET);
        assert_eq!(r.verdict, Tri::Unknown);
        assert!(r.h1_trivial);
    }

    #[test]
    fn torsion_detected() {
        // <a | a^2>: cyclic of order 2
        let p = Presentation { generators: 1, relators: vec![vec![1, 1]] };
        let r = presentation_trivial(&p, 100);
        assert_eq!((r.verdict, r.h1_rank, r.h1_trivial), (Tri::No, 0, false));
    }

    #[test]
    fn disconnected_errors() {
        let g = crate::graph::Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(pi1_trivial(&CellComplex::from_graph(&g), 10).is_err());
    }
}
