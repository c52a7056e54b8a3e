//! Burning number of graphs: exact computation, constructive upper bounds
//! with machine-checked ignition schedules, and the extremal classification
//! for binary trees.

pub mod error;
pub mod exact;
pub mod graph;
pub mod schedule;
pub mod tree;

pub use error::{Error, Result};
pub use exact::SearchLimits;
pub use graph::{Dist, Graph, GraphMetrics};
pub use schedule::{BurnTrace, CoverAssignment, Schedule, ScheduleReport};
pub use tree::RootedTree;
