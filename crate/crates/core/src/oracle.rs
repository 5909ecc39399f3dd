//! Exponential-time reference enumerator. Exhaustive depth-first search
//! with no pruning beyond simplicity; it shares no logic with the
//! bounded-delay traversals it is used to check, so disagreements point at
//! real bugs. Intended for graphs of a dozen vertices or so.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};
use crate::path::Path;
use crate::weight::Weight;

/// All simple paths from `s` to `t` with total weight at most `alpha`,
/// as a duplicate-free, lexicographically sorted set.
pub fn brute_force_paths(g: &Graph, s: VertexId, t: VertexId, alpha: Weight) -> Vec<Path> {
    let mut found = Vec::new();
    if !g.vertex_alive(s) || !g.vertex_alive(t) {
        return found;
    }
    let mut visited = alloc::vec![false; g.vertex_count()];
    let mut current = Path::empty(s);
    visited[s] = true;
    walk(g, t, &mut visited, &mut current, &mut found);
    found.retain(|p| p.weight() <= alpha);
    found.sort();
    found
}

fn walk(g: &Graph, t: VertexId, visited: &mut [bool], current: &mut Path, found: &mut Vec<Path>) {
    let u = current.end();
    if u == t {
        // A simple st-path cannot pass through t, so stop here.
        found.push(current.clone());
        return;
    }
    for (_, v, w) in g.out_arcs(u) {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let mark = current.mark();
        current.push(v, w);
        walk(g, t, visited, current, found);
        current.rollback(mark);
        visited[v] = false;
    }
}

/// Element-wise longest common prefix of a path set: the longest vertex
/// sequence every path starts with. `None` for the empty set.
pub fn common_prefix(paths: &[Path]) -> Option<Vec<VertexId>> {
    let first = paths.first()?;
    let mut len = first.vertices().len();
    for p in &paths[1..] {
        let verts = p.vertices();
        let mut shared = 0;
        while shared < len && shared < verts.len() && verts[shared] == first.vertices()[shared] {
            shared += 1;
        }
        len = shared;
    }
    Some(first.vertices()[..len].to_vec())
}
