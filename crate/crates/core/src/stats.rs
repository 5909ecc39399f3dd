//! Enumeration counters that make the complexity bounds observable.

use alloc::vec::Vec;

/// Counters collected by one enumeration run.
///
/// `sssp_segments[0]` counts shortest-path-tree computations before the
/// first emission, `sssp_segments[i]` those between emissions `i-1` and
/// `i`; a final segment is flushed when the run ends. The delay and
/// occupancy bounds of the traversals are asserted from these fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Number of paths handed to the consumer (gamma).
    pub paths_emitted: u64,
    /// Total single-source shortest-path computations.
    pub sssp_total: u64,
    /// Maximum of `sssp_segments`.
    pub sssp_max_between_emissions: u64,
    /// Per-segment shortest-path computation counts (see type docs).
    pub sssp_segments: Vec<u64>,
    /// Peak number of pending frames in the container or recursion stack.
    pub container_peak: usize,
    /// Recursion-tree nodes that were expanded (non-leaf calls).
    pub internal_nodes: u64,
    /// Recursion-tree leaves; always equals `paths_emitted`.
    pub leaves: u64,
    /// Non-root expanded nodes that produced no feasible child. The
    /// feasibility tests make these impossible; tests assert zero.
    pub dead_calls: u64,
    /// Expanded nodes with exactly one feasible child. Must be zero for
    /// the prefix-merging undirected traversal.
    pub single_child_internal: u64,
    current_segment: u64,
}

impl EnumStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn on_sssp(&mut self) {
        self.sssp_total += 1;
        self.current_segment += 1;
    }

    pub(crate) fn on_emit(&mut self) {
        self.paths_emitted += 1;
        self.leaves += 1;
        self.close_segment();
    }

    pub(crate) fn on_internal(&mut self, children: usize, is_root: bool) {
        self.internal_nodes += 1;
        if children == 0 && !is_root {
            self.dead_calls += 1;
        }
        if children == 1 {
            self.single_child_internal += 1;
        }
    }

    pub(crate) fn note_occupancy(&mut self, len: usize) {
        if len > self.container_peak {
            self.container_peak = len;
        }
    }

    fn close_segment(&mut self) {
        self.sssp_segments.push(self.current_segment);
        if self.current_segment > self.sssp_max_between_emissions {
            self.sssp_max_between_emissions = self.current_segment;
        }
        self.current_segment = 0;
    }

    /// Flushes the trailing segment; called once when a run finishes.
    pub(crate) fn finish(&mut self) {
        self.close_segment();
    }
}
