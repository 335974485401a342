//! Turán numbers, extremal graphs and exact search for linear forests.

pub mod error;
pub mod forest;
pub mod formulas;
pub mod graph;
pub mod io;

pub use error::{Error, Result};
pub use forest::PathForest;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
