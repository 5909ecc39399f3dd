//! Adjacency-list graph with lazy, reversible vertex and arc removal.
//!
//! Removal marks alive-flags instead of compacting, so a restore puts the
//! structure back bit-identically and costs O(1) per arc. An undirected
//! edge is stored as two mutually linked arcs of equal weight; killing one
//! kills both.

use alloc::vec::Vec;
use core::fmt;

use crate::path::Path;
use crate::weight::Weight;

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Arc {
    tail: VertexId,
    head: VertexId,
    weight: Weight,
    twin: Option<ArcId>,
    alive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum UndoRecord {
    Vertex { v: VertexId, killed: Vec<ArcId> },
    Edge { killed: Vec<ArcId> },
}

/// Receipt for one reversible mutation. Restores must happen in strict
/// reverse order of creation.
#[derive(Debug)]
#[must_use = "dropping a token makes the mutation permanent for this scope"]
pub struct UndoToken {
    depth: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphError {
    VertexOutOfRange { v: VertexId, n: usize },
    DeadVertex { v: VertexId },
    SelfLoop { v: VertexId },
    ParallelArc { from: VertexId, to: VertexId },
    /// Adding arcs after removals would corrupt the undo log.
    MutatedGraph,
    /// Restore called out of LIFO order.
    RestoreOrder,
    MissingArc { from: VertexId, to: VertexId },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range (n = {n})")
            }
            GraphError::DeadVertex { v } => write!(f, "vertex {v} has been removed"),
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::ParallelArc { from, to } => write!(f, "duplicate arc {from} -> {to}"),
            GraphError::MutatedGraph => write!(f, "cannot add arcs while removals are pending"),
            GraphError::RestoreOrder => write!(f, "restore called out of LIFO order"),
            GraphError::MissingArc { from, to } => write!(f, "no alive arc {from} -> {to}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<ArcId>>,
    in_adj: Vec<Vec<ArcId>>,
    vertex_alive: Vec<bool>,
    alive_arc_records: usize,
    non_unit_alive: usize,
    negative_alive: usize,
    undo: Vec<UndoRecord>,
}

impl Graph {
    pub fn directed(n: usize) -> Self {
        Self::new(n, true)
    }

    pub fn undirected(n: usize) -> Self {
        Self::new(n, false)
    }

    fn new(n: usize, directed: bool) -> Self {
        Graph {
            directed,
            arcs: Vec::new(),
            out_adj: alloc::vec![Vec::new(); n],
            in_adj: alloc::vec![Vec::new(); n],
            vertex_alive: alloc::vec![true; n],
            alive_arc_records: 0,
            non_unit_alive: 0,
            negative_alive: 0,
            undo: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_alive.len()
    }

    /// Logical edge count m: alive arcs for a directed graph, alive edges
    /// for an undirected one.
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.alive_arc_records
        } else {
            self.alive_arc_records / 2
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_undirected(&self) -> bool {
        !self.directed
    }

    pub fn vertex_alive(&self, v: VertexId) -> bool {
        v < self.vertex_alive.len() && self.vertex_alive[v]
    }

    pub fn has_negative_weights(&self) -> bool {
        self.negative_alive > 0
    }

    /// True when every alive arc has weight exactly 1 (BFS-friendly).
    pub fn all_unit_weights(&self) -> bool {
        self.non_unit_alive == 0
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v >= self.vertex_alive.len() {
            return Err(GraphError::VertexOutOfRange {
                v,
                n: self.vertex_alive.len(),
            });
        }
        if !self.vertex_alive[v] {
            return Err(GraphError::DeadVertex { v });
        }
        Ok(())
    }

    /// Adds an arc (directed) or an edge as a twin arc pair (undirected).
    /// Self-loops and parallel arcs are rejected.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        if !self.undo.is_empty() {
            return Err(GraphError::MutatedGraph);
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        if self.out_adj[u].iter().any(|&a| self.arcs[a].head == v) {
            return Err(GraphError::ParallelArc { from: u, to: v });
        }
        let id = self.push_arc(u, v, w, None);
        if !self.directed {
            let back = self.push_arc(v, u, w, Some(id));
            self.arcs[id].twin = Some(back);
        }
        Ok(())
    }

    fn push_arc(&mut self, tail: VertexId, head: VertexId, weight: Weight, twin: Option<ArcId>) -> ArcId {
        let id = self.arcs.len();
        self.arcs.push(Arc {
            tail,
            head,
            weight,
            twin,
            alive: true,
        });
        self.out_adj[tail].push(id);
        self.in_adj[head].push(id);
        self.alive_arc_records += 1;
        if !weight.is_one() {
            self.non_unit_alive += 1;
        }
        if weight.is_negative() {
            self.negative_alive += 1;
        }
        id
    }

    /// Alive out-arcs of `v` as `(arc id, head, weight)`, in insertion order.
    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = (ArcId, VertexId, Weight)> + '_ {
        self.out_adj[v].iter().filter_map(move |&a| {
            let arc = &self.arcs[a];
            arc.alive.then_some((a, arc.head, arc.weight))
        })
    }

    /// Alive in-arcs of `v` as `(arc id, tail, weight)`, in insertion order.
    pub fn in_arcs(&self, v: VertexId) -> impl Iterator<Item = (ArcId, VertexId, Weight)> + '_ {
        self.in_adj[v].iter().filter_map(move |&a| {
            let arc = &self.arcs[a];
            arc.alive.then_some((a, arc.tail, arc.weight))
        })
    }

    /// All alive arc records as `(arc id, tail, head, weight)`.
    pub fn alive_arcs(&self) -> impl Iterator<Item = (ArcId, VertexId, VertexId, Weight)> + '_ {
        self.arcs.iter().enumerate().filter_map(|(id, arc)| {
            arc.alive.then_some((id, arc.tail, arc.head, arc.weight))
        })
    }

    pub fn alive_arc_between(&self, u: VertexId, v: VertexId) -> Option<(ArcId, Weight)> {
        if u >= self.out_adj.len() {
            return None;
        }
        self.out_adj[u].iter().find_map(|&a| {
            let arc = &self.arcs[a];
            (arc.alive && arc.head == v).then_some((a, arc.weight))
        })
    }

    fn kill_arc(&mut self, id: ArcId, killed: &mut Vec<ArcId>) {
        let arc = &mut self.arcs[id];
        if !arc.alive {
            return;
        }
        arc.alive = false;
        self.alive_arc_records -= 1;
        if !self.arcs[id].weight.is_one() {
            self.non_unit_alive -= 1;
        }
        if self.arcs[id].weight.is_negative() {
            self.negative_alive -= 1;
        }
        killed.push(id);
    }

    /// Marks `v` and every incident arc dead. Cost O(deg(v)).
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<UndoToken, GraphError> {
        self.check_vertex(v)?;
        let mut killed = Vec::new();
        let out: Vec<ArcId> = self.out_adj[v].clone();
        for a in out {
            self.kill_arc(a, &mut killed);
        }
        let inc: Vec<ArcId> = self.in_adj[v].clone();
        for a in inc {
            self.kill_arc(a, &mut killed);
        }
        self.vertex_alive[v] = false;
        self.undo.push(UndoRecord::Vertex { v, killed });
        Ok(UndoToken {
            depth: self.undo.len(),
        })
    }

    /// Removes the arc `u -> v`; in an undirected graph the twin arc dies
    /// with it.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<UndoToken, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (id, _) = self
            .alive_arc_between(u, v)
            .ok_or(GraphError::MissingArc { from: u, to: v })?;
        let mut killed = Vec::new();
        self.kill_arc(id, &mut killed);
        if let Some(twin) = self.arcs[id].twin {
            self.kill_arc(twin, &mut killed);
        }
        self.undo.push(UndoRecord::Edge { killed });
        Ok(UndoToken {
            depth: self.undo.len(),
        })
    }

    /// Undoes the mutation behind `token`. Tokens must come back in strict
    /// reverse order of creation.
    pub fn restore(&mut self, token: UndoToken) -> Result<(), GraphError> {
        if token.depth != self.undo.len() {
            return Err(GraphError::RestoreOrder);
        }
        let record = self.undo.pop().expect("token depth checked above");
        let killed = match record {
            UndoRecord::Vertex { v, killed } => {
                self.vertex_alive[v] = true;
                killed
            }
            UndoRecord::Edge { killed } => killed,
        };
        for id in killed {
            let arc = &mut self.arcs[id];
            debug_assert!(!arc.alive);
            arc.alive = true;
            self.alive_arc_records += 1;
            if !arc.weight.is_one() {
                self.non_unit_alive += 1;
            }
            if arc.weight.is_negative() {
                self.negative_alive += 1;
            }
        }
        Ok(())
    }

    /// Exact sum of the arc weights along `p`, recomputed from the current
    /// graph. Errors if an arc of the path is missing or dead.
    pub fn path_weight(&self, p: &Path) -> Result<Weight, GraphError> {
        self.check_vertex(p.start())?;
        let mut total = Weight::zero();
        for pair in p.vertices().windows(2) {
            let (_, w) = self
                .alive_arc_between(pair[0], pair[1])
                .ok_or(GraphError::MissingArc {
                    from: pair[0],
                    to: pair[1],
                })?;
            total += w;
        }
        Ok(total)
    }

    /// Sorted alive arc set, for structural comparisons in tests.
    pub fn arc_set(&self) -> Vec<(VertexId, VertexId, Weight)> {
        let mut set: Vec<_> = self
            .alive_arcs()
            .map(|(_, u, v, w)| (u, v, w))
            .collect();
        set.sort();
        set
    }

    /// Copy with identical topology and per-arc weights given by `f(tail,
    /// head, weight)`. Used by reweighting; preserves arc ids and adjacency
    /// order.
    pub(crate) fn map_weights(&self, mut f: impl FnMut(VertexId, VertexId, Weight) -> Weight) -> Graph {
        let mut g = self.clone();
        g.non_unit_alive = 0;
        g.negative_alive = 0;
        for arc in g.arcs.iter_mut() {
            arc.weight = f(arc.tail, arc.head, arc.weight);
            if arc.alive {
                if !arc.weight.is_one() {
                    g.non_unit_alive += 1;
                }
                if arc.weight.is_negative() {
                    g.negative_alive += 1;
                }
            }
        }
        g
    }
}
