//! Grouped Stirling complexes of graphs: cell enumeration, closed-form
//! counts, 1-skeleton connectivity and constructive motion planning.

pub mod cli;
pub mod complex;
pub mod error;
pub mod graph;
pub mod planner;
pub mod skeleton;

pub use complex::{Cell, CellElement, ColorVector, ComplexSpec, FVector, Separation};
pub use error::{Error, Result};
pub use graph::{GraphFamily, NamedGraph, SimpleGraph, Vertex, VertexPath};
pub use planner::{Move, MovePlan};
