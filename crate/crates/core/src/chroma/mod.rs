//! Vertex coloring: degeneracy-ordered greedy, exact DSATUR branch and
//! bound, exact average degrees, and the chromatic bound checks for graphs
//! without `K_{d+3}` and `K_{3,d+1}` minors.

mod audit;
mod dsatur;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::graph::{Graph, Vertex};
use crate::minor::{has_clique_minor, has_complete_bipartite_minor};

pub use audit::{skeleton_average_degree_audit, AuditReport, LayerReport};
pub use dsatur::{exact_chromatic, EXACT_MAX_N};

/// Proper coloring with colors `1..=palette_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub(crate) fn from_assignment(assignment: Vec<usize>) -> Self {
        let mut used: Vec<usize> = assignment.clone();
        used.sort_unstable();
        used.dedup();
        Coloring {
            palette_size: used.len(),
            assignment,
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.n()
            && self.assignment.iter().all(|&c| c >= 1)
            && g.edges().all(|e| self.assignment[e.0] != self.assignment[e.1])
    }
}

/// `{"colors": {"v": c, ...}, "k": palette_size}`.
impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Colors<'a>(&'a [usize]);
        impl Serialize for Colors<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (v, c) in self.0.iter().enumerate() {
                    m.serialize_entry(&v.to_string(), c)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("colors", &Colors(&self.assignment))?;
        m.serialize_entry("k", &self.palette_size)?;
        m.end()
    }
}

/// Removal order that repeatedly takes a vertex of minimum remaining
/// degree (lowest id on ties), and the degeneracy it witnesses.
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// Greedy coloring along the reverse of the degeneracy removal order, so
/// each vertex has at most `degeneracy` colored neighbours when colored.
pub fn degeneracy_greedy(g: &Graph) -> Coloring {
    let (order, _) = degeneracy_order(g);
    let mut color = vec![0usize; g.n()];
    for &v in order.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
        color[v] = (1..).find(|c| !taken.contains(c)).unwrap();
    }
    Coloring::from_assignment(color)
}

/// `2|E| / |V|` as an exact rational.
pub fn average_degree(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(exact::ratio(2 * g.m() as i64, g.n() as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundMethod {
    Exact,
    DegeneracyGreedy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticBoundReport {
    pub d: usize,
    pub bound: usize,
    pub clique_minor_present: bool,
    pub bipartite_minor_present: bool,
    pub hypothesis_holds: bool,
    /// Names of the excluded minors that are present.
    pub failed_hypotheses: Vec<String>,
    pub method: BoundMethod,
    /// `χ(G)` for the exact method, otherwise the greedy palette size.
    pub colors: usize,
    /// `colors <= bound`, asserted only when the hypothesis holds.
    pub bound_holds: Option<bool>,
    pub coloring: Coloring,
}

/// Checks `χ(G) <= d(d+1)` for graphs without `K_{d+3}` and `K_{3,d+1}`
/// minors. When a minor is present the report records it and makes no
/// claim.
pub fn verify_chromatic_bound(g: &Graph, d: usize) -> Result<ChromaticBoundReport> {
    let clique = has_clique_minor(g, d + 3)?.is_some();
    let bipartite = has_complete_bipartite_minor(g, 3, d + 1)?.is_some();
    let mut failed = Vec::new();
    if clique {
        failed.push(format!("K_{} minor present", d + 3));
    }
    if bipartite {
        failed.push(format!("K_{{3,{}}} minor present", d + 1));
    }
    let (method, coloring) = if g.n() <= EXACT_MAX_N {
        (BoundMethod::Exact, exact_chromatic(g)?.1)
    } else {
        (BoundMethod::DegeneracyGreedy, degeneracy_greedy(g))
    };
    let bound = d * (d + 1);
    let hypothesis_holds = failed.is_empty();
    Ok(ChromaticBoundReport {
        d,
        bound,
        clique_minor_present: clique,
        bipartite_minor_present: bipartite,
        hypothesis_holds,
        failed_hypotheses: failed,
        method,
        colors: coloring.palette_size,
        bound_holds: hypothesis_holds.then_some(coloring.palette_size <= bound),
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn greedy_examples() {
        assert_eq!(degeneracy_greedy(&named::complete(4)).palette_size, 4);
        assert_eq!(degeneracy_greedy(&named::path(7)).palette_size, 2);
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(degeneracy_greedy(&star).palette_size, 2);
        let p = degeneracy_greedy(&named::petersen());
        assert!(p.is_proper(&named::petersen()));
        assert_eq!(p.palette_size, 3);
        assert_eq!(degeneracy_order(&named::petersen()).1, 3);
    }

    #[test]
    fn average_degrees() {
        let o = named::octahedron();
        assert_eq!(average_degree(&o).unwrap(), exact::int(4));
        assert_eq!(o.m(), 3 * o.n() - 6);
        assert_eq!(average_degree(&named::complete(6)).unwrap(), exact::int(5));
        assert_eq!(average_degree(&named::petersen()).unwrap(), exact::int(3));
        assert_eq!(average_degree(&named::path(3)).unwrap(), exact::ratio(4, 3));
        assert!(average_degree(&Graph::empty(0)).is_err());
    }

    #[test]
    fn bound_reports() {
        let r = verify_chromatic_bound(&named::octahedron(), 2).unwrap();
        assert!(r.hypothesis_holds);
        assert_eq!((r.colors, r.bound, r.bound_holds), (3, 6, Some(true)));
        let r = verify_chromatic_bound(&named::complete(5), 2).unwrap();
        assert!(!r.hypothesis_holds);
        assert_eq!(r.failed_hypotheses, vec!["K_5 minor present".to_string()]);
        assert_eq!(r.bound_holds, None);
        // Petersen contracts onto K_{3,4}: branch sets {0,1}, {3,8}, {7,9}
        // against 2, 4, 5, 6
        let r = verify_chromatic_bound(&named::petersen(), 3).unwrap();
        assert!(!r.clique_minor_present && r.bipartite_minor_present);
        assert_eq!((r.colors, r.bound_holds), (3, None));
        let r = verify_chromatic_bound(&named::petersen(), 4).unwrap();
        assert!(r.hypothesis_holds);
        assert_eq!((r.colors, r.bound, r.bound_holds), (3, 20, Some(true)));
    }

    #[test]
    fn coloring_json() {
        let c = degeneracy_greedy(&named::path(3));
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"colors":{"0":1,"1":2,"2":1},"k":2}"#);
    }
}
