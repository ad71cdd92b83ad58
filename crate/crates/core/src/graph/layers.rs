use std::collections::{BTreeSet, VecDeque};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Distance layers from `root`: layer `i` holds the vertices at distance
/// exactly `i`.
pub fn bfs_layers(g: &Graph, root: Vertex) -> Result<Vec<BTreeSet<Vertex>>> {
    g.check_vertex(root)?;
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut layers: Vec<BTreeSet<Vertex>> = vec![[root].into()];
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                if layers.len() <= dist[w] {
                    layers.push(BTreeSet::new());
                }
                layers[dist[w]].insert(w);
                queue.push_back(w);
            }
        }
    }
    let unreachable: Vec<Vertex> = g.vertices().filter(|&v| dist[v] == usize::MAX).collect();
    if !unreachable.is_empty() {
        return Err(Error::Disconnected { unreachable });
    }
    Ok(layers)
}
