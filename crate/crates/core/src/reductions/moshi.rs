//! Edge doubling: every edge `uv` becomes two vertices adjacent to both `u`
//! and `v`. Matching-cut existence is preserved and the result is probe
//! claw-free.

use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probe::{PartitionedProbeGraph, ProbeCertificate};

/// Vertices `0..n` are the originals; the `i`-th edge `(u, v)` (in sorted
/// order) gets the intermediates `n + 2i` and `n + 2i + 1`. `F` joins every
/// two intermediates with a common original neighbour.
pub fn moshi_double(g: &Graph) -> Result<ReductionOutput> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let n = g.n();
    let total = n + 2 * edges.len();
    let mut out = Graph::empty(total);
    // Intermediates incident to each original vertex.
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        for x in [n + 2 * i, n + 2 * i + 1] {
            out.insert_edge(u, x);
            out.insert_edge(v, x);
            around[u].push(x);
            around[v].push(x);
        }
    }
    let mut f = Vec::new();
    for xs in &around {
        for (a, &x) in xs.iter().enumerate() {
            for &y in &xs[a + 1..] {
                f.push((x, y));
            }
        }
    }
    let probes: Vec<usize> = (0..n).collect();
    let nonprobes: Vec<usize> = (n..total).collect();
    let ppg = PartitionedProbeGraph::new(out, &probes, &nonprobes)?;
    Ok(ReductionOutput::new(ppg, ProbeCertificate::new(f), "moshi"))
}
