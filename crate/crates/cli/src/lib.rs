//! File formats, run reports, and the command-line surface for the
//! bounded-path and k-shortest-path listers in `pathlist-core`.

pub mod app;
pub mod dimacs;
pub mod report;

pub use app::run;
pub use dimacs::{parse_graph, serialize_graph, ParseError, ParseErrorKind};
pub use report::RunReport;
