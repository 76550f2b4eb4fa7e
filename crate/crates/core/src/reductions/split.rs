//! Bipartite graphs are probe split: making one side a clique gives a split
//! graph.

use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probe::{PartitionedProbeGraph, ProbeCertificate};

pub fn bipartite_to_split(g: &Graph, side: &[usize]) -> Result<ReductionOutput> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut side = side.to_vec();
    side.sort_unstable();
    side.dedup();
    if let Some(&v) = side.iter().find(|&&v| v >= g.n()) {
        return Err(Error::NotBipartite(format!("vertex {v} out of range")));
    }
    let rest: Vec<usize> = (0..g.n()).filter(|v| side.binary_search(v).is_err()).collect();
    for (name, class) in [("side", &side), ("other class", &rest)] {
        if !g.is_independent(class) {
            return Err(Error::NotBipartite(format!("{name} is not independent")));
        }
    }
    let mut f = Vec::new();
    for (i, &u) in side.iter().enumerate() {
        for &v in &side[i + 1..] {
            f.push((u, v));
        }
    }
    let ppg = PartitionedProbeGraph::new(g.clone(), &rest, &side)?;
    Ok(ReductionOutput::new(ppg, ProbeCertificate::new(f), "split"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Pattern;
    use crate::probe::verify_probe_certificate_all;

    fn is_split(out: &ReductionOutput) -> bool {
        verify_probe_certificate_all(&out.ppg, &out.certificate, &Pattern::split_forbidden()).unwrap()
    }

    #[test]
    fn p3_to_triangle() {
        let out = bipartite_to_split(&Graph::path(3), &[0, 2]).unwrap();
        assert_eq!(out.certificate.edges(), vec![(0, 2)]);
        assert!(is_split(&out));
    }

    #[test]
    fn k2_unchanged() {
        let out = bipartite_to_split(&Graph::path(2), &[1]).unwrap();
        assert!(out.certificate.is_empty());
        assert!(is_split(&out));
    }

    #[test]
    fn c6_is_split_after_f() {
        let out = bipartite_to_split(&Graph::cycle(6), &[0, 2, 4]).unwrap();
        assert_eq!(out.certificate.len(), 3);
        assert!(is_split(&out));
    }

    #[test]
    fn rejects_non_bipartition() {
        assert!(matches!(
            bipartite_to_split(&Graph::cycle(3), &[0]),
            Err(Error::NotBipartite(_))
        ));
        assert!(matches!(
            bipartite_to_split(&Graph::path(3), &[0, 1]),
            Err(Error::NotBipartite(_))
        ));
    }
}
