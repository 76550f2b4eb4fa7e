//! Constructions from the hardness reductions. Each emits a partitioned probe
//! graph together with a certificate `F` for its claimed pattern class.

use std::collections::BTreeMap;

use crate::probe::{PartitionedProbeGraph, ProbeCertificate};

pub mod moshi;
pub mod sat;
pub mod sat4p1;
pub mod split;
pub mod subdivide;

pub use moshi::moshi_double;
pub use sat::{validate_sat_shape, SatInstance, ShapeReport};
pub use sat4p1::sat_to_4p1;
pub use split::bipartite_to_split;
pub use subdivide::{rotation_is_planar, subdivide4};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub ppg: PartitionedProbeGraph,
    pub certificate: ProbeCertificate,
    pub metadata: BTreeMap<String, String>,
}

impl ReductionOutput {
    fn new(ppg: PartitionedProbeGraph, certificate: ProbeCertificate, construction: &str) -> Self {
        let mut metadata = BTreeMap::new();
        metadata.insert("construction".to_string(), construction.to_string());
        ReductionOutput {
            ppg,
            certificate,
            metadata,
        }
    }
}
