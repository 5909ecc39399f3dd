//! Single-source shortest paths, shortest-path trees with O(1) subtree
//! membership, and potential-based reweighting for graphs with negative
//! arcs but no negative cycle.

use alloc::collections::BinaryHeap;
use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::graph::{ArcId, Graph, VertexId};
use crate::weight::{Distance, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// Distances from the root along out-arcs.
    Forward,
    /// Distances to the root along in-arcs.
    Reverse,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SsspError {
    InvalidRoot { v: VertexId },
    /// An alive arc has negative weight; reweight first.
    NegativeWeight { from: VertexId, to: VertexId },
    /// Subtree or path query on an unreachable vertex.
    Unreachable { v: VertexId },
    NegativeCycle { on: VertexId },
}

impl fmt::Display for SsspError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SsspError::InvalidRoot { v } => write!(f, "root vertex {v} is dead or out of range"),
            SsspError::NegativeWeight { from, to } => {
                write!(f, "negative arc weight on {from} -> {to}")
            }
            SsspError::Unreachable { v } => write!(f, "vertex {v} is unreachable in this tree"),
            SsspError::NegativeCycle { on } => {
                write!(f, "negative cycle through vertex {on}")
            }
        }
    }
}

const NO_SLOT: usize = usize::MAX;

/// Shortest-path tree: exact distances, parent arcs, and Euler-tour
/// intervals granting O(1) subtree membership tests.
#[derive(Clone, Debug)]
pub struct ShortestPathTree {
    root: VertexId,
    direction: Direction,
    dist: Vec<Distance>,
    parent: Vec<Option<(VertexId, ArcId)>>,
    enter: Vec<usize>,
    exit: Vec<usize>,
    /// Reachable vertices in Euler (preorder) visit order; the subtree of
    /// `v` is the slice `order[enter[v]..exit[v]]`.
    order: Vec<VertexId>,
}

impl ShortestPathTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn dist(&self, v: VertexId) -> Distance {
        self.dist[v]
    }

    /// Parent of `v` in the tree as `(next vertex toward the root, arc id)`.
    pub fn parent(&self, v: VertexId) -> Option<(VertexId, ArcId)> {
        self.parent[v]
    }

    /// True iff `z` lies in the subtree rooted at `v`. O(1). Errors on
    /// unreachable arguments.
    pub fn subtree_contains(&self, v: VertexId, z: VertexId) -> Result<bool, SsspError> {
        if self.enter[v] == NO_SLOT {
            return Err(SsspError::Unreachable { v });
        }
        if self.enter[z] == NO_SLOT {
            return Err(SsspError::Unreachable { v: z });
        }
        Ok(self.enter[v] <= self.enter[z] && self.enter[z] < self.exit[v])
    }

    /// Infallible variant: unreachable vertices are in no subtree.
    pub fn in_subtree(&self, v: VertexId, z: VertexId) -> bool {
        self.subtree_contains(v, z).unwrap_or(false)
    }

    /// Reachable members of `v`'s subtree, `v` first.
    pub fn subtree(&self, v: VertexId) -> Result<&[VertexId], SsspError> {
        if self.enter[v] == NO_SLOT {
            return Err(SsspError::Unreachable { v });
        }
        Ok(&self.order[self.enter[v]..self.exit[v]])
    }

    /// Tree path from the root to `v` (inclusive), or `None` if `v` is
    /// unreachable.
    pub fn path_from_root(&self, v: VertexId) -> Option<Vec<VertexId>> {
        if !self.dist[v].is_finite() {
            return None;
        }
        let mut path = alloc::vec![v];
        let mut cur = v;
        while let Some((next, _)) = self.parent[cur] {
            path.push(next);
            cur = next;
        }
        debug_assert_eq!(cur, self.root);
        path.reverse();
        Some(path)
    }

    fn from_relaxation(
        g: &Graph,
        root: VertexId,
        direction: Direction,
        dist: Vec<Distance>,
        parent: Vec<Option<(VertexId, ArcId)>>,
    ) -> Self {
        let n = g.vertex_count();
        let mut children: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); n];
        for (v, link) in parent.iter().enumerate() {
            if let Some((p, _)) = link {
                children[*p].push(v);
            }
        }
        let mut enter = alloc::vec![NO_SLOT; n];
        let mut exit = alloc::vec![NO_SLOT; n];
        let mut order = Vec::new();
        if dist[root].is_finite() {
            // Iterative preorder; children are visited in ascending id so
            // the Euler layout is deterministic.
            let mut stack = alloc::vec![(root, false)];
            while let Some((v, done)) = stack.pop() {
                if done {
                    exit[v] = order.len();
                    continue;
                }
                enter[v] = order.len();
                order.push(v);
                stack.push((v, true));
                for &c in children[v].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        ShortestPathTree {
            root,
            direction,
            dist,
            parent,
            enter,
            exit,
            order,
        }
    }
}

fn arcs_from(
    g: &Graph,
    v: VertexId,
    direction: Direction,
) -> impl Iterator<Item = (ArcId, VertexId, Weight)> + '_ {
    let fwd = matches!(direction, Direction::Forward);
    let mut out = g.out_arcs(v);
    let mut inc = g.in_arcs(v);
    core::iter::from_fn(move || if fwd { out.next() } else { inc.next() })
}

/// Single-source shortest paths from (or, with [`Direction::Reverse`], to)
/// `root` over the alive part of `g`. All alive weights must be
/// non-negative. Uses breadth-first search when every alive arc weighs
/// exactly 1, otherwise a binary-heap label-setting pass with ties broken
/// by `(distance, vertex id)`.
pub fn sssp(g: &Graph, root: VertexId, direction: Direction) -> Result<ShortestPathTree, SsspError> {
    if !g.vertex_alive(root) {
        return Err(SsspError::InvalidRoot { v: root });
    }
    if g.has_negative_weights() {
        let (_, from, to, _) = g
            .alive_arcs()
            .find(|(_, _, _, w)| w.is_negative())
            .expect("negative counter is non-zero");
        return Err(SsspError::NegativeWeight { from, to });
    }
    let n = g.vertex_count();
    let mut dist = alloc::vec![Distance::Unreachable; n];
    let mut parent: Vec<Option<(VertexId, ArcId)>> = alloc::vec![None; n];
    dist[root] = Distance::Finite(Weight::zero());

    if g.all_unit_weights() {
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for (arc, v, w) in arcs_from(g, u, direction) {
                if !dist[v].is_finite() {
                    dist[v] = du + w;
                    parent[v] = Some((u, arc));
                    queue.push_back(v);
                }
            }
        }
    } else {
        let mut heap: BinaryHeap<Reverse<(Weight, VertexId)>> = BinaryHeap::new();
        let mut settled = alloc::vec![false; n];
        heap.push(Reverse((Weight::zero(), root)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if settled[u] {
                continue;
            }
            settled[u] = true;
            for (arc, v, w) in arcs_from(g, u, direction) {
                if settled[v] {
                    continue;
                }
                let cand = d + w;
                if Distance::Finite(cand) < dist[v] {
                    dist[v] = Distance::Finite(cand);
                    parent[v] = Some((u, arc));
                    heap.push(Reverse((cand, v)));
                }
            }
        }
    }
    Ok(ShortestPathTree::from_relaxation(g, root, direction, dist, parent))
}

/// Result of the potential-based reweighting: `graph` carries weights
/// `w'(u,v) = w(u,v) + h(u) - h(v) >= 0`, and every path from the
/// designated source to the designated target is shifted by the same
/// `constant = h(s) - h(t)`.
#[derive(Clone, Debug)]
pub struct ReweightResult {
    pub potentials: Vec<Weight>,
    pub graph: Graph,
    pub constant: Weight,
}

/// Computes vertex potentials with a Bellman-Ford pass over a virtual
/// zero-weight source attached to every vertex, then returns the
/// reweighted graph and the additive constant for `(s, t)` paths. O(mn).
pub fn johnson_reweight(g: &Graph, s: VertexId, t: VertexId) -> Result<ReweightResult, SsspError> {
    let n = g.vertex_count();
    // Virtual source: every vertex starts at distance 0.
    let mut h = alloc::vec![Weight::zero(); n];
    let mut pred: Vec<Option<VertexId>> = alloc::vec![None; n];
    let mut changed = true;
    let mut rounds = 0usize;
    let mut last_improved = None;
    while changed && rounds < n + 1 {
        changed = false;
        for (_, u, v, w) in g.alive_arcs() {
            let cand = h[u] + w;
            if cand < h[v] {
                h[v] = cand;
                pred[v] = Some(u);
                last_improved = Some(v);
                changed = true;
            }
        }
        rounds += 1;
    }
    if changed {
        // Still improving after n+1 full rounds. A vertex improved in the
        // final round has a defined predecessor chain for at least n steps
        // (a round-k improvement implies its predecessor improved in round
        // k-1 or later), so the walk revisits a vertex before it can fall
        // off a root, and that vertex lies on a predecessor cycle, which
        // is a negative cycle of the graph.
        let mut x = last_improved.expect("an improving round names a vertex");
        let mut seen = alloc::vec![false; n];
        loop {
            if seen[x] {
                return Err(SsspError::NegativeCycle { on: x });
            }
            seen[x] = true;
            x = pred[x].expect("final-round updates have live predecessor chains");
        }
    }
    let graph = g.map_weights(|u, v, w| w + h[u] - h[v]);
    debug_assert!(!graph.has_negative_weights());
    let constant = h[s] - h[t];
    Ok(ReweightResult {
        potentials: h,
        graph,
        constant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{d1, u1};

    fn w(n: i64) -> Weight {
        Weight::from_int(n)
    }

    fn fin(n: i64) -> Distance {
        Distance::Finite(w(n))
    }

    #[test]
    fn reverse_distances_on_d1() {
        let g = d1();
        let tree = sssp(&g, 3, Direction::Reverse).unwrap();
        assert_eq!(tree.dist(3), fin(0));
        assert_eq!(tree.dist(1), fin(1));
        assert_eq!(tree.dist(2), fin(2));
        assert_eq!(tree.dist(0), fin(2));
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::directed(1);
        let tree = sssp(&g, 0, Direction::Forward).unwrap();
        assert_eq!(tree.dist(0), fin(0));
        assert_eq!(tree.parent(0), None);
        assert_eq!(tree.path_from_root(0).unwrap(), alloc::vec![0]);
    }

    #[test]
    fn unit_cycle_uses_bfs_distances() {
        let mut g = Graph::directed(4);
        g.add_edge(0, 1, w(1)).unwrap();
        g.add_edge(1, 2, w(1)).unwrap();
        g.add_edge(2, 3, w(1)).unwrap();
        g.add_edge(3, 0, w(1)).unwrap();
        assert!(g.all_unit_weights());
        let tree = sssp(&g, 0, Direction::Forward).unwrap();
        for (v, d) in [(0, 0), (1, 1), (2, 2), (3, 3)] {
            assert_eq!(tree.dist(v), fin(d));
        }
    }

    #[test]
    fn unreachable_vertices_are_flagged() {
        let mut g = Graph::directed(3);
        g.add_edge(0, 1, w(2)).unwrap();
        let tree = sssp(&g, 0, Direction::Forward).unwrap();
        assert_eq!(tree.dist(2), Distance::Unreachable);
        assert!(matches!(
            tree.subtree_contains(0, 2),
            Err(SsspError::Unreachable { v: 2 })
        ));
        assert!(!tree.in_subtree(0, 2));
    }

    #[test]
    fn negative_arc_is_a_contract_violation() {
        let mut g = Graph::directed(2);
        g.add_edge(0, 1, w(-1)).unwrap();
        assert!(matches!(
            sssp(&g, 0, Direction::Forward),
            Err(SsspError::NegativeWeight { from: 0, to: 1 })
        ));
    }

    #[test]
    fn subtree_queries_on_u1() {
        let g = u1();
        let tree = sssp(&g, 0, Direction::Forward).unwrap();
        // Tree arcs are 0-1, 1-2, 2-3; 1-3 costs 11 via the heavy edge.
        assert_eq!(tree.dist(3), fin(3));
        assert!(tree.subtree_contains(2, 3).unwrap());
        assert!(!tree.subtree_contains(3, 2).unwrap());
        assert!(tree.subtree_contains(3, 3).unwrap());
        for z in 0..4 {
            assert!(tree.subtree_contains(0, z).unwrap());
        }
        assert_eq!(tree.path_from_root(3).unwrap(), alloc::vec![0, 1, 2, 3]);
        assert_eq!(tree.subtree(2).unwrap(), &[2, 3]);
    }

    #[test]
    fn relaxation_optimality_on_d1() {
        let g = d1();
        let tree = sssp(&g, 0, Direction::Forward).unwrap();
        for (_, u, v, w) in g.alive_arcs() {
            assert!(tree.dist(v) <= tree.dist(u) + w);
        }
        for v in 1..4 {
            let (p, arc) = tree.parent(v).unwrap();
            let (_, _, _, w) = g.alive_arcs().find(|&(id, ..)| id == arc).unwrap();
            assert_eq!(tree.dist(v), tree.dist(p) + w);
        }
    }

    #[test]
    fn reweight_identity_when_nonnegative() {
        let g = d1();
        let r = johnson_reweight(&g, 0, 3).unwrap();
        assert!(r.potentials.iter().all(|h| *h == Weight::zero()));
        assert_eq!(r.constant, Weight::zero());
        assert_eq!(r.graph, g);
    }

    #[test]
    fn reweight_shifts_every_st_path_by_the_constant() {
        let mut g = Graph::directed(3);
        g.add_edge(0, 1, w(-1)).unwrap();
        g.add_edge(1, 2, w(2)).unwrap();
        g.add_edge(0, 2, w(2)).unwrap();
        let r = johnson_reweight(&g, 0, 2).unwrap();
        // Virtual-source pass by hand: h = (0, -1, 0).
        assert_eq!(r.potentials, alloc::vec![w(0), w(-1), w(0)]);
        assert_eq!(r.constant, w(0));
        let wp = |u, v| r.graph.alive_arc_between(u, v).unwrap().1;
        assert_eq!(wp(0, 1), w(0));
        assert_eq!(wp(1, 2), w(1));
        assert_eq!(wp(0, 2), w(2));
        assert!(!r.graph.has_negative_weights());
        // Both st-paths shift by exactly C.
        assert_eq!(wp(0, 1) + wp(1, 2), w(1) + r.constant);
        assert_eq!(wp(0, 2), w(2) + r.constant);
    }

    #[test]
    fn negative_cycle_is_reported() {
        let mut g = Graph::directed(2);
        g.add_edge(0, 1, w(1)).unwrap();
        g.add_edge(1, 0, w(-2)).unwrap();
        match johnson_reweight(&g, 0, 1) {
            Err(SsspError::NegativeCycle { on }) => assert!(on < 2),
            other => panic!("expected negative cycle, got {other:?}"),
        }
    }
}
