//! Cut problems on partitioned probe graphs: d-cuts, matching cuts, perfect
//! and maximum matching cuts.
//!
//! The polynomial-time solvers live in [`solvers`], exhaustive reference
//! solvers in [`oracle`] and the hardness constructions in [`reductions`].

pub mod branch;
pub mod cograph;
pub mod colouring;
pub mod completion;
pub mod error;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod pattern;
pub mod probe;
pub mod process;
pub mod reductions;
pub mod solvers;

pub use colouring::{Colour, Colouring, CutCertificate, PrecolouredPair, Violation};
pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::Pattern;
pub use probe::{PartitionedProbeGraph, ProbeCertificate};
