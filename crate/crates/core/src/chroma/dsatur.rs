use super::{degeneracy_greedy, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph [`exact_chromatic`] accepts.
pub const EXACT_MAX_N: usize = 30;

/// Exact chromatic number with an optimal coloring, by DSATUR branch and
/// bound: the upper bound starts from the degeneracy greedy coloring, the
/// lower bound is a maximum clique, and the branching vertex is the one of
/// highest saturation, then highest degree, then lowest id.
pub fn exact_chromatic(g: &Graph) -> Result<(usize, Coloring)> {
    let n = g.n();
    if n > EXACT_MAX_N {
        return Err(Error::TooLarge(format!(
            "exact coloring supports at most {EXACT_MAX_N} vertices, got {n}"
        )));
    }
    let greedy = degeneracy_greedy(g);
    if n == 0 {
        return Ok((0, greedy));
    }
    let adj = g.adjacency_masks()?;
    let lower = max_clique(&adj);
    let mut s = Search {
        g,
        best: greedy.palette_size,
        best_colors: greedy.assignment,
        colors: vec![0; n],
        seen: vec![0u64; n],
        lower,
    };
    if s.best > lower {
        s.branch(0, 0);
    }
    let k = s.best;
    Ok((k, Coloring::from_assignment(s.best_colors)))
}

struct Search<'a> {
    g: &'a Graph,
    best: usize,
    best_colors: Vec<usize>,
    colors: Vec<usize>,
    /// Bit `c` set when some neighbour has color `c`.
    seen: Vec<u64>,
    lower: usize,
}

impl Search<'_> {
    /// Returns true once an optimal coloring is known.
    fn branch(&mut self, done: usize, used: usize) -> bool {
        let n = self.g.n();
        if done == n {
            self.best = used;
            self.best_colors = self.colors.clone();
            return self.best == self.lower;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.seen[v].count_ones(), self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        for c in 1..=used + 1 {
            if c >= self.best {
                break;
            }
            if self.seen[v] >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            let saved: Vec<u64> = self.g.neighbors(v).iter().map(|&w| self.seen[w]).collect();
            for &w in self.g.neighbors(v) {
                self.seen[w] |= 1 << c;
            }
            if self.branch(done + 1, used.max(c)) {
                return true;
            }
            for (&w, s) in self.g.neighbors(v).iter().zip(saved) {
                self.seen[w] = s;
            }
            self.colors[v] = 0;
        }
        false
    }
}

fn max_clique(adj: &[u64]) -> usize {
    fn grow(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, size + 1, rest & adj[v], best);
        }
    }
    let mut best = 0;
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    grow(adj, 0, all, &mut best);
    best
}
