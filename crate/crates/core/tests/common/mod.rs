//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the search code they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use geomgraph::Graph;

/// Minor containment by trying every map `V(g) -> {unused} ∪ V(h)`.
pub fn brute_force_minor(g: &Graph, h: &Graph) -> bool {
    let (n, t) = (g.n(), h.n());
    if t == 0 {
        return true;
    }
    if t > n {
        return false;
    }
    let base = t + 1;
    let total = base.pow(n as u32);
    let mut label = vec![0usize; n];
    for code in 0..total {
        let mut c = code;
        for l in label.iter_mut() {
            *l = c % base;
            c /= base;
        }
        // label 0 = unused, label i + 1 = pattern vertex i
        let sets: Vec<BTreeSet<usize>> = (1..=t)
            .map(|i| (0..n).filter(|&v| label[v] == i).collect())
            .collect();
        if sets.iter().any(|s| s.is_empty() || !connected_in(g, s)) {
            continue;
        }
        let ok = h.edges().all(|e| {
            sets[e.0]
                .iter()
                .any(|&x| g.neighbors(x).iter().any(|y| sets[e.1].contains(y)))
        });
        if ok {
            return true;
        }
    }
    false
}

pub fn connected_in(g: &Graph, set: &BTreeSet<usize>) -> bool {
    let Some(&start) = set.iter().next() else {
        return true;
    };
    let mut seen: BTreeSet<usize> = [start].into();
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if set.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs = pair_index(n);
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for p in &perms {
            let mut image = 0usize;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    image |= 1 << index(p[u], p[v]);
                }
            }
            seen[image] = true;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        reps.push(Graph::from_edges(n, edges).unwrap());
    }
    reps
}

/// Whether `g` has a proper `k`-coloring, by trying all `k^n` assignments.
pub fn brute_force_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let total = k.pow(n as u32);
    let mut color = vec![0usize; n];
    for code in 0..total {
        let mut c = code;
        for x in color.iter_mut() {
            *x = c % k;
            c /= k;
        }
        if g.edges().all(|e| color[e.0] != color[e.1]) {
            return true;
        }
    }
    false
}

pub fn brute_force_chromatic(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| brute_force_colorable(g, k)).unwrap()
}

/// Maximum number of internally disjoint `s`–`t` paths by enumerating the
/// interior vertex sets of all simple paths and packing them exhaustively.
pub fn brute_force_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let mut interiors: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut path = vec![s];
    fn walk(g: &Graph, t: usize, path: &mut Vec<usize>, out: &mut BTreeSet<BTreeSet<usize>>) {
        let u = *path.last().unwrap();
        for &w in g.neighbors(u) {
            if w == t {
                out.insert(path[1..].iter().copied().collect());
            } else if !path.contains(&w) {
                path.push(w);
                walk(g, t, path, out);
                path.pop();
            }
        }
    }
    walk(g, t, &mut path, &mut interiors);
    let sets: Vec<BTreeSet<usize>> = interiors.into_iter().collect();
    fn pack(sets: &[BTreeSet<usize>], i: usize, used: &BTreeSet<usize>) -> usize {
        if i == sets.len() {
            return 0;
        }
        let skip = pack(sets, i + 1, used);
        if sets[i].is_disjoint(used) {
            let mut u2 = used.clone();
            u2.extend(&sets[i]);
            skip.max(1 + pack(sets, i + 1, &u2))
        } else {
            skip
        }
    }
    pack(&sets, 0, &BTreeSet::new())
}

/// Smallest vertex set whose removal disconnects `g`, or `n - 1` when none
/// exists (complete graphs).
pub fn brute_force_connectivity(g: &Graph) -> usize {
    let n = g.n();
    for size in 0..n.saturating_sub(1) {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let removed: BTreeSet<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            if g.components_avoiding(&removed).len() > 1 {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

/// Deterministic small-graph stream for randomised checks.
pub fn random_graph(n: usize, p_percent: u64, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (state >> 33) % 100 < p_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub mod corpus;
