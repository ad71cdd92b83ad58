use super::{Graph, Vertex};

/// Every chordless (induced) cycle of length at least 3, each listed once,
/// starting at its smallest vertex and oriented so the second vertex is
/// smaller than the last. Output is sorted.
pub fn chordless_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for s in g.vertices() {
        for &p in g.neighbors(s) {
            if p > s {
                let mut path = vec![s, p];
                extend(g, &mut path, &mut out);
            }
        }
    }
    out.sort();
    out
}

fn extend(g: &Graph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // w may only touch the path at its end (and at s when closing)
        if path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if g.has_edge(s, w) {
            if path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
        } else {
            path.push(w);
            extend(g, path, out);
            path.pop();
        }
    }
}
