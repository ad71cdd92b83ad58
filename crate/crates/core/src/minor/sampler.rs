use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{has_clique_minor, has_complete_bipartite_minor};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest host the sampler will generate.
pub const SAMPLER_MAX_N: usize = 14;

/// Draws Erdős–Rényi graphs on `n` vertices (edge probability itself drawn
/// from `[0.1, 0.5)` per sample) and keeps those without a `K_{d+3}` or
/// `K_{3,d+1}` minor. At most `50 * budget` candidates are drawn, so fewer
/// than `budget` graphs may come back.
///
/// The generator is ChaCha8 seeded with `seed`; candidate edges are drawn
/// in lexicographic pair order, so output is reproducible bit for bit.
pub fn minor_free_sampler(n: usize, d: usize, seed: u64, budget: usize) -> Result<Vec<Graph>> {
    if n > SAMPLER_MAX_N {
        return Err(Error::TooLarge(format!("sampler supports n <= {SAMPLER_MAX_N}, got {n}")));
    }
    if d < 2 {
        return Err(Error::InvalidArgument("sampler needs d >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..budget.saturating_mul(50) {
        if out.len() == budget {
            break;
        }
        let p: f64 = rng.gen_range(0.1..0.5);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if has_clique_minor(&g, d + 3)?.is_none()
            && has_complete_bipartite_minor(&g, 3, d + 1)?.is_none()
        {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = minor_free_sampler(8, 2, 3, 5).unwrap();
        let b = minor_free_sampler(8, 2, 3, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn small_hosts_qualify_vacuously() {
        // K_6 and K_{3,4} need at least 6 and 7 vertices
        let out = minor_free_sampler(5, 3, 11, 20).unwrap();
        assert_eq!(out.len(), 20);
        assert!(has_clique_minor(&named::complete(5), 6).unwrap().is_none());
    }

    #[test]
    fn preconditions() {
        assert!(minor_free_sampler(15, 2, 0, 1).is_err());
        assert!(minor_free_sampler(6, 1, 0, 1).is_err());
    }
}
