//! Shared fixtures for the unit tests.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::directed::{list_bounded_directed, BoundedPathQuery};
use crate::graph::{Graph, VertexId};
use crate::path::Path;
use crate::stats::EnumStats;
use crate::traversal::{list_iterative, ContainerKind};
use crate::undirected::list_bounded_undirected;
use crate::weight::Weight;

fn w(n: i64) -> Weight {
    Weight::from_int(n)
}

/// Arcs 1->2:1, 2->4:1, 1->3:2, 3->4:2, 1->4:5, 2->3:1 in file ids
/// (0-based here).
pub(crate) fn d1() -> Graph {
    let mut g = Graph::directed(4);
    g.add_edge(0, 1, w(1)).unwrap();
    g.add_edge(1, 3, w(1)).unwrap();
    g.add_edge(0, 2, w(2)).unwrap();
    g.add_edge(2, 3, w(2)).unwrap();
    g.add_edge(0, 3, w(5)).unwrap();
    g.add_edge(1, 2, w(1)).unwrap();
    g
}

/// Edges 1-2:1, 2-3:1, 3-4:1, 2-4:10 in file ids (0-based here).
pub(crate) fn u1() -> Graph {
    let mut g = Graph::undirected(4);
    g.add_edge(0, 1, w(1)).unwrap();
    g.add_edge(1, 2, w(1)).unwrap();
    g.add_edge(2, 3, w(1)).unwrap();
    g.add_edge(1, 3, w(10)).unwrap();
    g
}

fn query(s: VertexId, t: VertexId, alpha: Weight) -> BoundedPathQuery {
    BoundedPathQuery {
        source: s,
        target: t,
        budget: alpha,
    }
}

pub(crate) fn collect_directed(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) -> (Vec<Path>, EnumStats) {
    let mut out = Vec::new();
    let stats = list_bounded_directed(g, &query(s, t, alpha), |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })
    .unwrap();
    (out, stats)
}

pub(crate) fn collect_undirected(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
) -> (Vec<Path>, EnumStats) {
    let mut out = Vec::new();
    let stats = list_bounded_undirected(g, &query(s, t, alpha), |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })
    .unwrap();
    (out, stats)
}

pub(crate) fn collect_iterative(
    g: &mut Graph,
    s: VertexId,
    t: VertexId,
    alpha: Weight,
    kind: ContainerKind,
) -> (Vec<Path>, EnumStats) {
    let mut out = Vec::new();
    let stats = list_iterative(g, &query(s, t, alpha), kind, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })
    .unwrap();
    (out, stats)
}
