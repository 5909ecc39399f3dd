//! Bounded-path listing for undirected graphs with amortized cost
//! O(m + t(n,m)) per path.
//!
//! Each call first computes the longest common prefix of its remaining
//! path set and appends it in one step. Consecutive single-child recursion
//! nodes collapse away, so every internal node branches at least twice and
//! the recursion tree has fewer internal nodes than leaves.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::directed::{validate_query, BoundedPathQuery, EnumError};
use crate::graph::{Graph, UndoToken, VertexId};
use crate::lcp::{longest_common_prefix_detailed, LcpError};
use crate::path::{Path, PathMark};
use crate::shortest_paths::{sssp, Direction};
use crate::stats::EnumStats;
use crate::weight::{Distance, Weight};

struct Child {
    v: VertexId,
    w: Weight,
    budget: Weight,
}

struct Frame {
    children: Vec<Child>,
    next: usize,
    /// Removals for the prefix extension, restored in reverse on exit.
    tokens: Vec<UndoToken>,
    mark: PathMark,
}

enum Entered {
    Pushed,
    Finished(ControlFlow<()>),
}

/// One recursion node at endpoint `u`: extend by the longest common prefix
/// of the remaining path set; emit if it reaches the target, otherwise
/// remove its vertices and branch on the new endpoint's neighbors.
#[allow(clippy::too_many_arguments)]
fn enter<F>(
    g: &mut Graph,
    target: VertexId,
    u: VertexId,
    budget: Weight,
    mark: PathMark,
    is_root: bool,
    prefix: &mut Path,
    stack: &mut Vec<Frame>,
    stats: &mut EnumStats,
    emit: &mut F,
) -> Entered
where
    F: FnMut(&Path) -> ControlFlow<()>,
{
    let lcp = match longest_common_prefix_detailed(g, u, target, budget) {
        Ok(r) => r,
        Err(LcpError::EmptyPathSet) => {
            // Only the root can be infeasible; recursive calls are guarded
            // by the feasibility test.
            debug_assert!(is_root, "guarded call found an empty path set");
            stats.on_sssp();
            stats.on_sssp();
            prefix.rollback(mark);
            return Entered::Finished(ControlFlow::Continue(()));
        }
        Err(e) => unreachable!("inputs validated before the walk: {e:?}"),
    };
    stats.on_sssp();
    stats.on_sssp();

    if lcp.prefix.end() == target {
        prefix.extend(&lcp.prefix);
        stats.on_emit();
        let flow = emit(prefix);
        prefix.rollback(mark);
        return Entered::Finished(flow);
    }

    let tip = lcp.prefix.end();
    let interior = &lcp.prefix.vertices()[..lcp.prefix.vertices().len() - 1];
    let mut tokens: Vec<UndoToken> = Vec::with_capacity(interior.len() + 1);
    for &x in interior {
        tokens.push(g.remove_vertex(x).expect("prefix vertices are alive"));
    }
    let candidates: Vec<(VertexId, Weight)> = g.out_arcs(tip).map(|(_, v, w)| (v, w)).collect();
    tokens.push(g.remove_vertex(tip).expect("prefix tip is alive"));
    let tree = sssp(g, target, Direction::Reverse).expect("weights validated non-negative");
    stats.on_sssp();

    let remaining = budget - lcp.prefix.weight();
    let children: Vec<Child> = candidates
        .into_iter()
        .filter_map(|(v, w)| {
            let child_budget = remaining - w;
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
    prefix.extend(&lcp.prefix);
    stack.push(Frame {
        children,
        next: 0,
        tokens,
        mark,
    });
    stats.note_occupancy(stack.len());
    Entered::Pushed
}

fn exit_frame(g: &mut Graph, prefix: &mut Path, mut frame: Frame) {
    while let Some(token) = frame.tokens.pop() {
        g.restore(token).expect("frames restore in LIFO order");
    }
    prefix.rollback(frame.mark);
}

/// Lists every simple `source -> target` path of weight at most `budget`
/// in a connected undirected graph, one `emit` call per path. The graph is
/// restored on return. An infeasible budget yields zero emissions.
pub fn list_bounded_undirected<F>(
    g: &mut Graph,
    query: &BoundedPathQuery,
    mut emit: F,
) -> Result<EnumStats, EnumError>
where
    F: FnMut(&Path) -> ControlFlow<()>,
{
    if g.is_directed() {
        return Err(EnumError::NotUndirected);
    }
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
    let root = enter(
        g,
        t,
        s,
        query.budget,
        prefix.mark(),
        true,
        &mut prefix,
        &mut stack,
        &mut stats,
        &mut emit,
    );
    if matches!(root, Entered::Finished(_)) {
        stats.finish();
        return Ok(stats);
    }

    'walk: while let Some(top) = stack.last_mut() {
        if top.next == top.children.len() {
            let frame = stack.pop().expect("stack is non-empty");
            exit_frame(g, &mut prefix, frame);
            continue;
        }
        let Child { v, w, budget } = top.children[top.next];
        top.next += 1;
        let mark = prefix.mark();
        prefix.push(v, w);
        match enter(
            g,
            t,
            v,
            budget,
            mark,
            false,
            &mut prefix,
            &mut stack,
            &mut stats,
            &mut emit,
        ) {
            Entered::Pushed => {}
            Entered::Finished(ControlFlow::Continue(())) => {}
            Entered::Finished(ControlFlow::Break(())) => break 'walk,
        }
    }
    while let Some(frame) = stack.pop() {
        exit_frame(g, &mut prefix, frame);
    }
    stats.finish();
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{collect_undirected as collect, u1};

    fn w(n: i64) -> Weight {
        Weight::from_int(n)
    }

    #[test]
    fn u1_tight_budget_lists_one_path_without_branching() {
        let mut g = u1();
        let before = g.clone();
        let (paths, stats) = collect(&mut g, 0, 3, w(3));
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices(), &[0, 1, 2, 3]);
        assert_eq!(paths[0].weight(), w(3));
        assert_eq!(stats.internal_nodes, 0);
        assert_eq!(stats.leaves, 1);
        assert_eq!(g, before);
    }

    #[test]
    fn u1_wide_budget_branches_once_into_two() {
        let mut g = u1();
        let (mut paths, stats) = collect(&mut g, 0, 3, w(11));
        paths.sort();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].vertices(), &[0, 1, 2, 3]);
        assert_eq!(paths[1].vertices(), &[0, 1, 3]);
        assert_eq!(paths[1].weight(), w(11));
        assert_eq!(stats.internal_nodes, 1);
        assert_eq!(stats.single_child_internal, 0);
        assert_eq!(stats.dead_calls, 0);
    }

    #[test]
    fn unit_cycle_has_two_symmetric_paths() {
        let mut g = Graph::undirected(4);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            g.add_edge(u, v, Weight::one()).unwrap();
        }
        let (mut paths, _) = collect(&mut g, 0, 2, w(2));
        paths.sort();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].vertices(), &[0, 1, 2]);
        assert_eq!(paths[1].vertices(), &[0, 3, 2]);
    }

    #[test]
    fn infeasible_root_is_zero_emissions_not_an_error() {
        let mut g = u1();
        let (paths, stats) = collect(&mut g, 0, 3, w(2));
        assert!(paths.is_empty());
        assert_eq!(stats.paths_emitted, 0);
    }

    #[test]
    fn source_equals_target_emits_empty_path_only() {
        let mut g = u1();
        let (paths, _) = collect(&mut g, 1, 1, w(0));
        assert_eq!(paths.len(), 1);
        assert!(paths[0].is_empty());
    }

    #[test]
    fn directed_input_is_rejected() {
        let mut g = crate::testutil::d1();
        let err = list_bounded_undirected(
            &mut g,
            &BoundedPathQuery {
                source: 0,
                target: 3,
                budget: w(4),
            },
            |_| ControlFlow::Continue(()),
        )
        .unwrap_err();
        assert_eq!(err, EnumError::NotUndirected);
    }
}
