//! Depth-first listing of all weight-bounded simple st-paths.
//!
//! The solution set is split by the first arc: paths from `u` through
//! neighbor `v` form one part, and a part is entered only when a
//! shortest-path test certifies it is non-empty, so every expanded call
//! produces at least one path. The recursion is realized with an explicit
//! frame stack plus the graph undo log; the visit order equals the
//! recursive order (children in adjacency order).

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::graph::{Graph, UndoToken, VertexId};
use crate::path::{Path, PathMark};
use crate::shortest_paths::{sssp, Direction};
use crate::stats::EnumStats;
use crate::weight::{Distance, Weight};

/// One bounded-path listing request: all simple paths from `source` to
/// `target` with total weight at most `budget`.
#[derive(Clone, Copy, Debug)]
pub struct BoundedPathQuery {
    pub source: VertexId,
    pub target: VertexId,
    pub budget: Weight,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumError {
    /// Alive negative arc; reweight before enumerating.
    NegativeWeights { from: VertexId, to: VertexId },
    InvalidVertex { v: VertexId },
    /// The prefix-merging traversal requires an undirected graph.
    NotUndirected,
    /// k-shortest queries need K >= 1.
    ZeroK,
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::NegativeWeights { from, to } => {
                write!(f, "arc {from} -> {to} has negative weight; reweight first")
            }
            EnumError::InvalidVertex { v } => write!(f, "vertex {v} is dead or out of range"),
            EnumError::NotUndirected => write!(f, "this traversal requires an undirected graph"),
            EnumError::ZeroK => write!(f, "K must be at least 1"),
        }
    }
}

pub(crate) fn validate_query(g: &Graph, q: &BoundedPathQuery) -> Result<(), EnumError> {
    for v in [q.source, q.target] {
        if !g.vertex_alive(v) {
            return Err(EnumError::InvalidVertex { v });
        }
    }
    if g.has_negative_weights() {
        let (_, from, to, _) = g
            .alive_arcs()
            .find(|(_, _, _, w)| w.is_negative())
            .expect("negative counter is non-zero");
        return Err(EnumError::NegativeWeights { from, to });
    }
    Ok(())
}

struct Child {
    v: VertexId,
    w: Weight,
    budget: Weight,
}

struct Frame {
    children: Vec<Child>,
    next: usize,
    token: UndoToken,
    mark: PathMark,
}

/// Expands one recursion node: snapshots `u`'s out-neighbors, removes `u`,
/// computes distances to the target in the residual graph, and keeps the
/// children whose parts are certifiably non-empty.
#[allow(clippy::too_many_arguments)]
fn expand(
    g: &mut Graph,
    target: VertexId,
    u: VertexId,
    budget: Weight,
    mark: PathMark,
    is_root: bool,
    stack: &mut Vec<Frame>,
    stats: &mut EnumStats,
) {
    let candidates: Vec<(VertexId, Weight)> = g.out_arcs(u).map(|(_, v, w)| (v, w)).collect();
    let token = g.remove_vertex(u).expect("expansion endpoint is alive");
    let tree = sssp(g, target, Direction::Reverse).expect("weights validated non-negative");
    stats.on_sssp();
    let children: Vec<Child> = candidates
        .into_iter()
        .filter_map(|(v, w)| {
            let child_budget = budget - w;
            match tree.dist(v) {
                Distance::Finite(d) if d <= child_budget => Some(Child {
                    v,
                    w,
                    budget: child_budget,
                }),
                _ => None,
            }
        })
        .collect();
    stats.on_internal(children.len(), is_root);
    stack.push(Frame {
        children,
        next: 0,
        token,
        mark,
    });
    stats.note_occupancy(stack.len());
}

/// Lists every simple `source -> target` path of weight at most `budget`,
/// calling `emit` once per path in the depth-first order induced by
/// adjacency order. The graph is restored to its entry state on return,
/// including when `emit` breaks off the enumeration.
pub fn list_bounded_directed<F>(
    g: &mut Graph,
    query: &BoundedPathQuery,
    mut emit: F,
) -> Result<EnumStats, EnumError>
where
    F: FnMut(&Path) -> ControlFlow<()>,
{
    validate_query(g, query)?;
    let mut stats = EnumStats::new();
    let (s, t) = (query.source, query.target);
    if s == t {
        if query.budget >= Weight::zero() {
            stats.on_emit();
            let _ = emit(&Path::empty(s));
        }
        stats.finish();
        return Ok(stats);
    }

    let mut prefix = Path::empty(s);
    let mut stack: Vec<Frame> = Vec::new();
    expand(g, t, s, query.budget, prefix.mark(), true, &mut stack, &mut stats);

    'walk: while let Some(top) = stack.last_mut() {
        if top.next == top.children.len() {
            let frame = stack.pop().expect("stack is non-empty");
            g.restore(frame.token).expect("frames restore in LIFO order");
            prefix.rollback(frame.mark);
            continue;
        }
        let Child { v, w, budget } = top.children[top.next];
        top.next += 1;
        let mark = prefix.mark();
        prefix.push(v, w);
        if v == t {
            stats.on_emit();
            let flow = emit(&prefix);
            prefix.rollback(mark);
            if flow.is_break() {
                break 'walk;
            }
        } else {
            expand(g, t, v, budget, mark, false, &mut stack, &mut stats);
        }
    }
    // Normal termination leaves an empty stack; early termination unwinds
    // whatever remains so the caller gets the graph back untouched.
    while let Some(frame) = stack.pop() {
        g.restore(frame.token).expect("frames restore in LIFO order");
        prefix.rollback(frame.mark);
    }
    stats.finish();
    Ok(stats)
}
