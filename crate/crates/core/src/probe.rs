//! Partitioned probe graphs and their certificates.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, Pattern};

/// A graph together with a partition of its vertices into probes `P` and
/// non-probes `N`, where `N` is independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedProbeGraph {
    graph: Graph,
    probes: Vec<usize>,
    nonprobes: Vec<usize>,
    is_probe: Vec<bool>,
}

impl PartitionedProbeGraph {
    pub fn new(graph: Graph, probes: &[usize], nonprobes: &[usize]) -> Result<Self> {
        let n = graph.n();
        let mut seen = vec![false; n];
        let mut is_probe = vec![false; n];
        for (&v, probe) in probes
            .iter()
            .map(|v| (v, true))
            .chain(nonprobes.iter().map(|v| (v, false)))
        {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
            seen[v] = true;
            is_probe[v] = probe;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is neither probe nor non-probe"
            )));
        }
        let probes: Vec<usize> = (0..n).filter(|&v| is_probe[v]).collect();
        let nonprobes: Vec<usize> = (0..n).filter(|&v| !is_probe[v]).collect();
        for &u in &nonprobes {
            if let Some(&w) = graph.neighbours(u).iter().find(|&&w| !is_probe[w]) {
                return Err(Error::InvalidPartition(format!(
                    "non-probes {u} and {w} are adjacent"
                )));
            }
        }
        Ok(PartitionedProbeGraph {
            graph,
            probes,
            nonprobes,
            is_probe,
        })
    }

    /// Every vertex is a probe.
    pub fn all_probes(graph: Graph) -> Self {
        let probes: Vec<usize> = (0..graph.n()).collect();
        PartitionedProbeGraph::new(graph, &probes, &[]).expect("all-probe partition is valid")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn probes(&self) -> &[usize] {
        &self.probes
    }

    pub fn nonprobes(&self) -> &[usize] {
        &self.nonprobes
    }

    #[inline]
    pub fn is_probe(&self, v: usize) -> bool {
        self.is_probe[v]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// An edge set `F` inside `N` claimed to make `G + F` free of some pattern.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProbeCertificate {
    f_edges: BTreeSet<(usize, usize)>,
}

impl ProbeCertificate {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        ProbeCertificate {
            f_edges: pairs
                .into_iter()
                .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
                .collect(),
        }
    }

    pub fn empty() -> Self {
        ProbeCertificate::default()
    }

    /// Pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.f_edges.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.f_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f_edges.is_empty()
    }

    /// Checks the structural invariants against a partitioned graph: pairs lie
    /// within `N` and are not already edges.
    pub fn check(&self, ppg: &PartitionedProbeGraph) -> Result<()> {
        for &(u, v) in &self.f_edges {
            if u == v || v >= ppg.n() {
                return Err(Error::InvalidCertificate(format!("bad pair ({u}, {v})")));
            }
            if ppg.is_probe(u) || ppg.is_probe(v) {
                return Err(Error::InvalidCertificate(format!(
                    "pair ({u}, {v}) has a probe endpoint"
                )));
            }
            if ppg.graph().has_edge(u, v) {
                return Err(Error::InvalidCertificate(format!(
                    "pair ({u}, {v}) is already an edge"
                )));
            }
        }
        Ok(())
    }

    /// `G + F`.
    pub fn apply(&self, ppg: &PartitionedProbeGraph) -> Result<Graph> {
        self.check(ppg)?;
        ppg.graph().with_edges(&self.edges())
    }
}

/// True iff `G + F` contains no induced copy of `h`.
pub fn verify_probe_certificate(
    ppg: &PartitionedProbeGraph,
    cert: &ProbeCertificate,
    h: &Pattern,
) -> Result<bool> {
    let filled = cert.apply(ppg)?;
    Ok(find_induced(&filled, h)?.is_none())
}

/// Like [`verify_probe_certificate`], for a set of patterns at once.
pub fn verify_probe_certificate_all(
    ppg: &PartitionedProbeGraph,
    cert: &ProbeCertificate,
    patterns: &[Pattern],
) -> Result<bool> {
    let filled = cert.apply(ppg)?;
    for h in patterns {
        if find_induced(&filled, h)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3_with_end_nonprobes() -> PartitionedProbeGraph {
        PartitionedProbeGraph::new(Graph::path(3), &[1], &[0, 2]).unwrap()
    }

    #[test]
    fn triangle_certificate_is_2p2_free() {
        let ppg = p3_with_end_nonprobes();
        let cert = ProbeCertificate::new([(2, 0)]);
        assert!(verify_probe_certificate(&ppg, &cert, &Pattern::TwoP2).unwrap());
    }

    #[test]
    fn empty_certificate_tests_raw_graph() {
        let ppg = PartitionedProbeGraph::all_probes(Graph::path(4));
        let empty = ProbeCertificate::empty();
        assert!(!verify_probe_certificate(&ppg, &empty, &Pattern::Path(4)).unwrap());
        assert!(verify_probe_certificate(&ppg, &empty, &Pattern::Claw).unwrap());
    }

    #[test]
    fn invalid_certificates() {
        let ppg = p3_with_end_nonprobes();
        let probe_pair = ProbeCertificate::new([(0, 1)]);
        assert!(matches!(
            verify_probe_certificate(&ppg, &probe_pair, &Pattern::TwoP2),
            Err(Error::InvalidCertificate(_))
        ));
    }

    #[test]
    fn partition_must_be_valid() {
        assert!(matches!(
            PartitionedProbeGraph::new(Graph::path(2), &[], &[0, 1]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            PartitionedProbeGraph::new(Graph::path(3), &[0, 1], &[1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            PartitionedProbeGraph::new(Graph::path(3), &[0], &[2]),
            Err(Error::InvalidPartition(_))
        ));
    }
}
