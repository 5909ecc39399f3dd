//! Machine-readable run reports.

use pathlist_core::EnumStats;

/// Summary of one enumeration run: the query echo, the counters, graph
/// dimensions, and wall-clock figures. Rendered as a flat `key = value`
/// document.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub source: usize,
    pub target: usize,
    /// Budget (for bounded listing) or K (for top-k), as given.
    pub query: String,
    pub mode: String,
    pub n: usize,
    pub m: usize,
    pub stats: EnumStats,
    pub wall_total_ms: u128,
    pub wall_max_gap_ms: u128,
}

impl RunReport {
    pub fn render(&self) -> String {
        let s = &self.stats;
        format!(
            "n = {}\nm = {}\ngamma = {}\nsssp_total = {}\nsssp_max_between_emissions = {}\n\
             container_peak = {}\ninternal_nodes = {}\nleaves = {}\nwall_total_ms = {}\n\
             wall_max_gap_ms = {}\n",
            self.n,
            self.m,
            s.paths_emitted,
            s.sssp_total,
            s.sssp_max_between_emissions,
            s.container_peak,
            s.internal_nodes,
            s.leaves,
            self.wall_total_ms,
            self.wall_max_gap_ms,
        )
    }
}
