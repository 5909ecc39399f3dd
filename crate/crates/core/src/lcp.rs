//! Longest common prefix of the set of weight-bounded simple st-paths in
//! an undirected graph, in O(m) plus two shortest-path-tree computations.
//!
//! The prefix is a prefix of the tree path from `s` to `t` in a
//! shortest-path tree rooted at `s`. Walking that path, the prefix ends at
//! the first vertex that admits a deviating edge: an edge `(x, z)` with
//! `z` in the subtree of the next path vertex, `x` either the current path
//! vertex or inside a sibling subtree, and `d(s,x) + w(x,z) + d(z,t)`
//! within the budget. Distances from both trees stay valid along the walk,
//! so no recomputation is needed.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};
use crate::path::Path;
use crate::shortest_paths::{sssp, Direction, ShortestPathTree};
use crate::weight::{Distance, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LcpError {
    /// No st-path fits the budget (or t is unreachable).
    EmptyPathSet,
    NotUndirected,
    InvalidVertex { v: VertexId },
    NegativeWeights { from: VertexId, to: VertexId },
}

impl fmt::Display for LcpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcpError::EmptyPathSet => write!(f, "no st-path within the budget"),
            LcpError::NotUndirected => write!(f, "prefix computation requires an undirected graph"),
            LcpError::InvalidVertex { v } => write!(f, "vertex {v} is dead or out of range"),
            LcpError::NegativeWeights { from, to } => {
                write!(f, "arc {from} -> {to} has negative weight")
            }
        }
    }
}

/// The edge that ended the prefix walk, with the tree edge it bypasses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub x: VertexId,
    pub z: VertexId,
    /// `(v_i, v_{i+1})`: the tree-path edge at the branching vertex.
    pub tree_edge: (VertexId, VertexId),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LcpStats {
    pub sssp_count: u64,
    /// Incidence-list entries examined by the deviation scan; bounded by
    /// twice the edge count because no vertex is scanned twice.
    pub endpoints_touched: u64,
}

#[derive(Clone, Debug)]
pub struct LcpResult {
    pub prefix: Path,
    pub deviation: Option<Deviation>,
    pub stats: LcpStats,
}

/// As [`longest_common_prefix`], but also reports the deviating edge and
/// the scan counters.
pub fn longest_common_prefix_detailed(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) -> Result<LcpResult, LcpError> {
    if g.is_directed() {
        return Err(LcpError::NotUndirected);
    }
    for v in [s, t] {
        if !g.vertex_alive(v) {
            return Err(LcpError::InvalidVertex { v });
        }
    }
    if g.has_negative_weights() {
        let (_, from, to, _) = g
            .alive_arcs()
            .find(|(_, _, _, w)| w.is_negative())
            .expect("negative counter is non-zero");
        return Err(LcpError::NegativeWeights { from, to });
    }
    let mut stats = LcpStats::default();
    let tree_s = sssp(g, s, Direction::Forward).expect("inputs validated");
    let tree_t = sssp(g, t, Direction::Forward).expect("inputs validated");
    stats.sssp_count = 2;
    match tree_s.dist(t) {
        Distance::Finite(d) if d <= alpha => {}
        _ => return Err(LcpError::EmptyPathSet),
    }
    let spine = tree_s
        .path_from_root(t)
        .expect("t is reachable by the check above");

    for i in 0..spine.len() - 1 {
        let found = scan_step(g, &tree_s, &tree_t, alpha, spine[i], spine[i + 1], &mut stats);
        if let Some((x, z)) = found {
            let prefix = Path::from_vertices(g, &spine[..=i]).expect("tree path arcs are alive");
            return Ok(LcpResult {
                prefix,
                deviation: Some(Deviation {
                    x,
                    z,
                    tree_edge: (spine[i], spine[i + 1]),
                }),
                stats,
            });
        }
    }
    // No step branches: the path set is the tree path alone.
    let prefix = Path::from_vertices(g, &spine).expect("tree path arcs are alive");
    Ok(LcpResult {
        prefix,
        deviation: None,
        stats,
    })
}

/// Looks for a deviating edge around tree-path vertex `vi` (successor
/// `vnext`). One pass over `vi`'s incidence list serves both the `x = vi`
/// test and the collection of sibling subtree roots, so each vertex's list
/// is touched at most once over the whole walk.
fn scan_step(
    g: &Graph,
    tree_s: &ShortestPathTree,
    tree_t: &ShortestPathTree,
    alpha: Weight,
    vi: VertexId,
    vnext: VertexId,
    stats: &mut LcpStats,
) -> Option<(VertexId, VertexId)> {
    let within_budget = |x: VertexId, w: Weight, z: VertexId| -> bool {
        match (tree_s.dist(x), tree_t.dist(z)) {
            (Distance::Finite(dx), Distance::Finite(dz)) => dx + w + dz <= alpha,
            _ => false,
        }
    };

    let mut siblings: Vec<VertexId> = Vec::new();
    for (_, y, w) in g.out_arcs(vi) {
        stats.endpoints_touched += 1;
        if y == vnext {
            // The tree edge itself; not a deviation.
            continue;
        }
        if tree_s.in_subtree(vnext, y) && within_budget(vi, w, y) {
            return Some((vi, y));
        }
        if matches!(tree_s.parent(y), Some((p, _)) if p == vi) {
            siblings.push(y);
        }
    }
    for w_root in siblings {
        let members = tree_s
            .subtree(w_root)
            .expect("tree children are reachable");
        for &x in members {
            for (_, z, w) in g.out_arcs(x) {
                stats.endpoints_touched += 1;
                if tree_s.in_subtree(vnext, z) && within_budget(x, w, z) {
                    return Some((x, z));
                }
            }
        }
    }
    None
}

/// The unique maximal path every weight-bounded st-path starts with.
/// Errors with [`LcpError::EmptyPathSet`] when no st-path fits `alpha`.
pub fn longest_common_prefix(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) -> Result<Path, LcpError> {
    longest_common_prefix_detailed(g, s, t, alpha).map(|r| r.prefix)
}
