//! Reading graphs and writing reports.

pub mod dot;
pub mod edgelist;
pub mod graph6;
pub mod scan;

pub use dot::{to_dot, write_dot};
pub use edgelist::parse_edgelist;
pub use graph6::{parse_graph6, to_graph6};
pub use scan::{scan_corpus, ScanOptions, ScanRecord, ScanReport, ScanSummary};
