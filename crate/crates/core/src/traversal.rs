//! Container-parameterized traversal of the enumeration recursion tree.
//!
//! Frames hold only the prefix path; the residual graph is rebuilt at pop
//! time by removing the prefix's non-terminal vertices and is unwound
//! before the next pop. With a LIFO container the traversal emits the
//! bounded paths in the exact reverse order of [`list_bounded_directed`]
//! and never holds more than `m` frames. With a min-key container (key
//! `w(prefix) + d(u, t)` in the frame's residual graph, an exact
//! estimate of the cheapest completion) it emits paths in non-decreasing
//! weight order, which [`k_shortest`] truncates after `K` paths.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use crate::directed::{validate_query, BoundedPathQuery, EnumError};
use crate::graph::{Graph, VertexId};
use crate::path::Path;
use crate::shortest_paths::{sssp, Direction};
use crate::stats::EnumStats;
use crate::weight::{Distance, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContainerKind {
    /// Pop the most recently pushed frame (iterative depth-first).
    Lifo,
    /// Pop a frame of minimal key; ties go to the earliest push.
    MinKey,
}

/// One pending recursion-tree node: endpoint, owned prefix, remaining
/// budget, and the priority key fixed at push time.
struct Frame {
    u: VertexId,
    prefix: Path,
    budget: Weight,
    key: Weight,
}

struct Prioritized {
    key: Weight,
    seq: u64,
    frame: Frame,
}

impl PartialEq for Prioritized {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.seq == other.seq
    }
}

impl Eq for Prioritized {}

impl PartialOrd for Prioritized {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Prioritized {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed so the max-heap pops the minimal (key, seq).
        other
            .key
            .cmp(&self.key)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

enum Container {
    Lifo(Vec<Frame>),
    MinKey { heap: BinaryHeap<Prioritized>, seq: u64 },
}

impl Container {
    fn new(kind: ContainerKind) -> Self {
        match kind {
            ContainerKind::Lifo => Container::Lifo(Vec::new()),
            ContainerKind::MinKey => Container::MinKey {
                heap: BinaryHeap::new(),
                seq: 0,
            },
        }
    }

    fn push(&mut self, frame: Frame) {
        match self {
            Container::Lifo(stack) => stack.push(frame),
            Container::MinKey { heap, seq } => {
                heap.push(Prioritized {
                    key: frame.key,
                    seq: *seq,
                    frame,
                });
                *seq += 1;
            }
        }
    }

    fn pop(&mut self) -> Option<Frame> {
        match self {
            Container::Lifo(stack) => stack.pop(),
            Container::MinKey { heap, .. } => heap.pop().map(|p| p.frame),
        }
    }

    fn len(&self) -> usize {
        match self {
            Container::Lifo(stack) => stack.len(),
            Container::MinKey { heap, .. } => heap.len(),
        }
    }
}

/// Lists the same path set as [`list_bounded_directed`] by driving the
/// recursion tree through an explicit container. See the module docs for
/// the per-container guarantees.
pub fn list_iterative<F>(
    g: &mut Graph,
    query: &BoundedPathQuery,
    kind: ContainerKind,
    mut emit: F,
) -> Result<EnumStats, EnumError>
where
    F: FnMut(&Path) -> ControlFlow<()>,
{
    validate_query(g, query)?;
    let mut stats = EnumStats::new();
    let (s, t) = (query.source, query.target);
    if s == t && query.budget < Weight::zero() {
        stats.finish();
        return Ok(stats);
    }

    let root_tree = sssp(g, t, Direction::Reverse).expect("weights validated non-negative");
    stats.on_sssp();
    let root_key = match root_tree.dist(s) {
        Distance::Finite(d) => d,
        // Unreachable target: the root still gets visited and finds no
        // feasible child; its key is never compared against another.
        Distance::Unreachable => Weight::zero(),
    };
    let mut container = Container::new(kind);
    container.push(Frame {
        u: s,
        prefix: Path::empty(s),
        budget: query.budget,
        key: root_key,
    });
    stats.note_occupancy(container.len());

    let mut last_popped_key: Option<Weight> = None;
    while let Some(frame) = container.pop() {
        if matches!(kind, ContainerKind::MinKey) {
            debug_assert!(
                last_popped_key.is_none_or(|k| k <= frame.key),
                "min-key pops must be monotone"
            );
            last_popped_key = Some(frame.key);
        }
        if frame.u == t {
            stats.on_emit();
            if emit(&frame.prefix).is_break() {
                break;
            }
            continue;
        }

        // Rebuild the frame's residual graph: the prefix minus its endpoint
        // is gone, then the endpoint itself for the child tests.
        let interior = &frame.prefix.vertices()[..frame.prefix.vertices().len() - 1];
        let mut tokens = Vec::with_capacity(interior.len() + 1);
        for &x in interior {
            tokens.push(g.remove_vertex(x).expect("prefix vertices are alive"));
        }
        let candidates: Vec<(VertexId, Weight)> =
            g.out_arcs(frame.u).map(|(_, v, w)| (v, w)).collect();
        tokens.push(g.remove_vertex(frame.u).expect("frame endpoint is alive"));
        let tree = sssp(g, t, Direction::Reverse).expect("weights validated non-negative");
        stats.on_sssp();

        let mut children = 0usize;
        for (v, w) in candidates {
            let child_budget = frame.budget - w;
            let d = match tree.dist(v) {
                Distance::Finite(d) if d <= child_budget => d,
                _ => continue,
            };
            let mut prefix = frame.prefix.clone();
            prefix.push(v, w);
            let key = prefix.weight() + d;
            debug_assert!(key >= prefix.weight());
            debug_assert!(key >= frame.key, "child keys never undercut the parent");
            container.push(Frame {
                u: v,
                prefix,
                budget: child_budget,
                key,
            });
            children += 1;
        }
        stats.on_internal(children, frame.prefix.is_empty());
        stats.note_occupancy(container.len());

        while let Some(token) = tokens.pop() {
            g.restore(token).expect("tokens restore in LIFO order");
        }
    }
    stats.finish();
    Ok(stats)
}

/// Emits the `k` lightest simple `s -> t` paths in non-decreasing weight
/// order (fewer if fewer exist) and stops the traversal right after the
/// k-th. Runs the min-key traversal with a budget no simple path can
/// exceed, so feasibility degenerates to reachability.
pub fn k_shortest<F>(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    k: usize,
    mut emit: F,
) -> Result<EnumStats, EnumError>
where
    F: FnMut(&Path) -> ControlFlow<()>,
{
    if k == 0 {
        return Err(EnumError::ZeroK);
    }
    // One above the sum of all positive edge weights: unreachable by any
    // simple path.
    let mut bound = Weight::one();
    for (_, tail, head, w) in g.alive_arcs() {
        if g.is_undirected() && tail > head {
            continue;
        }
        if !w.is_negative() {
            bound += w;
        }
    }
    let query = BoundedPathQuery {
        source: s,
        target: t,
        budget: bound,
    };
    let mut remaining = k;
    list_iterative(g, &query, ContainerKind::MinKey, |p| {
        let flow = emit(p);
        remaining -= 1;
        if flow.is_break() || remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
}
