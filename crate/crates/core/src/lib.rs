//! Listing of weight-bounded simple st-paths in weighted directed and
//! undirected graphs, with polynomial delay and memory linear in the input.
//!
//! The same recursion tree can be walked three ways:
//!
//! * [`list_bounded_directed`] — depth-first recursion with a per-node
//!   shortest-path feasibility test (works on directed and undirected
//!   graphs);
//! * [`list_bounded_undirected`] — the undirected refinement that prepends
//!   the longest common prefix of the remaining path set at every call, so
//!   every internal node branches;
//! * [`list_iterative`] — a container-parameterized traversal: a LIFO
//!   container reproduces the recursive output in reverse order with at
//!   most `m` pending frames, while a min-key priority queue emits paths in
//!   non-decreasing weight order, which [`k_shortest`] truncates after `K`
//!   paths.
//!
//! Weights are exact rationals; graphs with negative arcs (but no negative
//! cycle) can be shifted to non-negative weights with [`johnson_reweight`]
//! before enumeration.
//!
//! The crate is `no_std` (it requires `alloc`); file formats and the
//! command-line front end live in the companion `pathlist-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod directed;
pub mod graph;
pub mod lcp;
pub mod oracle;
pub mod path;
pub mod shortest_paths;
pub mod stats;
#[cfg(test)]
mod testutil;
pub mod traversal;
pub mod undirected;
pub mod weight;

pub use directed::{list_bounded_directed, BoundedPathQuery, EnumError};
pub use graph::{ArcId, Graph, GraphError, UndoToken, VertexId};
pub use lcp::{longest_common_prefix, longest_common_prefix_detailed, LcpError};
pub use oracle::brute_force_paths;
pub use path::{Path, PathError};
pub use shortest_paths::{
    johnson_reweight, sssp, Direction, ReweightResult, ShortestPathTree, SsspError,
};
pub use stats::EnumStats;
pub use traversal::{k_shortest, list_iterative, ContainerKind};
pub use undirected::list_bounded_undirected;
pub use weight::{Distance, ParseWeightError, Weight};
