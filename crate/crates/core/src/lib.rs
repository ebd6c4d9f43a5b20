//! Isolation numbers of graphs for clique, regular, chromatic and cycle
//! families: exact solving, a constructive bounded algorithm, the extremal
//! special graphs and an exhaustive verification harness.

pub mod construct;
pub mod detect;
pub mod error;
pub mod graph;
pub mod solver;
pub mod special;
pub mod verify;

pub use detect::{contains_family, FamilySpec, Witness, WitnessKind};
pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, VertexSet};
