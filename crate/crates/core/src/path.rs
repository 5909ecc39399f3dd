//! Simple paths with a cached exact total weight.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};
use crate::weight::Weight;

/// A simple path identified by its vertex sequence (the graph holds at most
/// one arc per ordered pair, so the sequence determines the arcs). The empty
/// path at a vertex has one vertex, zero edges and weight 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Path {
    verts: Vec<VertexId>,
    weight: Weight,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathError {
    Empty,
    MissingArc { from: VertexId, to: VertexId },
    RepeatedVertex { v: VertexId },
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Empty => write!(f, "a path needs at least a start vertex"),
            PathError::MissingArc { from, to } => write!(f, "no alive arc {from} -> {to}"),
            PathError::RepeatedVertex { v } => write!(f, "vertex {v} repeats"),
        }
    }
}

impl Path {
    pub fn empty(start: VertexId) -> Self {
        Path {
            verts: alloc::vec![start],
            weight: Weight::zero(),
        }
    }

    /// Builds a path from a vertex sequence, validating that consecutive
    /// arcs are alive in `g` and that no vertex repeats.
    pub fn from_vertices(g: &Graph, verts: &[VertexId]) -> Result<Self, PathError> {
        let mut path = Path::empty(*verts.first().ok_or(PathError::Empty)?);
        for pair in verts.windows(2) {
            let (_, w) = g
                .alive_arc_between(pair[0], pair[1])
                .ok_or(PathError::MissingArc {
                    from: pair[0],
                    to: pair[1],
                })?;
            path.push(pair[1], w);
        }
        for (i, &v) in verts.iter().enumerate() {
            if verts[..i].contains(&v) {
                return Err(PathError::RepeatedVertex { v });
            }
        }
        Ok(path)
    }

    pub fn start(&self) -> VertexId {
        self.verts[0]
    }

    pub fn end(&self) -> VertexId {
        *self.verts.last().expect("paths are never vertex-empty")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn edge_count(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }

    /// Appends one arc `(end, v)` of weight `w`.
    pub fn push(&mut self, v: VertexId, w: Weight) {
        debug_assert!(!self.verts.contains(&v), "path must stay simple");
        self.verts.push(v);
        self.weight += w;
    }

    /// Appends `tail`, whose start must equal this path's end.
    pub fn extend(&mut self, tail: &Path) {
        debug_assert_eq!(self.end(), tail.start());
        self.verts.extend_from_slice(&tail.verts[1..]);
        self.weight += tail.weight;
    }

    /// Snapshot of the current length and weight, for exact rollback.
    pub fn mark(&self) -> PathMark {
        PathMark {
            len: self.verts.len(),
            weight: self.weight,
        }
    }

    /// Rolls back to a previously taken snapshot.
    pub fn rollback(&mut self, mark: PathMark) {
        debug_assert!(mark.len <= self.verts.len());
        self.verts.truncate(mark.len);
        self.weight = mark.weight;
    }

    /// True iff `other`'s vertex sequence begins with this path's.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.verts.len() >= self.verts.len() && other.verts[..self.verts.len()] == self.verts[..]
    }
}

/// Saved `(length, weight)` pair from [`Path::mark`].
#[derive(Clone, Copy, Debug)]
pub struct PathMark {
    len: usize,
    weight: Weight,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t", self.weight)?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
