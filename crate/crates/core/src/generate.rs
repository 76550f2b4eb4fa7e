//! Seeded generation of certified partitioned probe H-free instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, Pattern};
use crate::probe::{PartitionedProbeGraph, ProbeCertificate};

/// Total number of sampled graphs before giving up.
pub const GENERATION_BUDGET: usize = 10_000;

/// Samples an `h`-free graph `G*` with edge probability `density`, picks a
/// random set `N'` and deletes every edge inside it. The deleted edges form
/// the certificate `F`, so `G + F = G*` is `h`-free by construction. Attempts
/// whose `G` is disconnected are discarded.
pub fn random_probe_hfree(
    n: usize,
    h: &Pattern,
    density: f64,
    seed: u64,
) -> Result<(PartitionedProbeGraph, ProbeCertificate)> {
    if n < 2 {
        return Err(Error::PreconditionViolation("need n >= 2".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::PreconditionViolation(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..n).collect();
    for _ in 0..GENERATION_BUDGET {
        let mut full = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    full.insert_edge(u, v);
                }
            }
        }
        if !full.is_connected() || find_induced(&full, h)?.is_some() {
            continue;
        }
        vertices.shuffle(&mut rng);
        let k = rng.gen_range(0..=n);
        let mut nonprobes = vertices[..k].to_vec();
        nonprobes.sort_unstable();
        let mut deleted = Vec::new();
        let mut graph = Graph::empty(n);
        for (u, v) in full.edges() {
            if nonprobes.binary_search(&u).is_ok() && nonprobes.binary_search(&v).is_ok() {
                deleted.push((u, v));
            } else {
                graph.insert_edge(u, v);
            }
        }
        if !graph.is_connected() {
            continue;
        }
        let probes: Vec<usize> = (0..n).filter(|v| nonprobes.binary_search(v).is_err()).collect();
        let ppg = PartitionedProbeGraph::new(graph, &probes, &nonprobes)?;
        return Ok((ppg, ProbeCertificate::new(deleted)));
    }
    Err(Error::GenerationTimeout(GENERATION_BUDGET))
}

/// A connected G(n, p) graph, resampled until connected.
pub fn random_connected(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&density) {
        return Err(Error::PreconditionViolation(format!(
            "need n >= 1 and density in [0, 1], got n = {n}, density = {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_BUDGET {
        let g = sample(n, density, &mut rng, |_, _| true);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationTimeout(GENERATION_BUDGET))
}

/// A connected bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_connected_bipartite(a: usize, b: usize, density: f64, seed: u64) -> Result<Graph> {
    if a == 0 || b == 0 || !(0.0..=1.0).contains(&density) {
        return Err(Error::PreconditionViolation(format!(
            "need non-empty sides and density in [0, 1], got {a}, {b}, {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_BUDGET {
        let g = sample(a + b, density, &mut rng, |u, v| u < a && v >= a);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationTimeout(GENERATION_BUDGET))
}

/// A connected simple cubic graph from the pairing model.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::PreconditionViolation(format!(
            "cubic graphs need an even n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..GENERATION_BUDGET {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks(2) {
            if pair[0] == pair[1] || g.has_edge(pair[0], pair[1]) {
                continue 'attempt;
            }
            g.insert_edge(pair[0], pair[1]);
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationTimeout(GENERATION_BUDGET))
}

fn sample(n: usize, density: f64, rng: &mut ChaCha8Rng, allowed: impl Fn(usize, usize) -> bool) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if allowed(u, v) && rng.gen_bool(density) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probe::verify_probe_certificate;

    #[test]
    fn k2_from_full_density() {
        let (ppg, cert) = random_probe_hfree(2, &Pattern::Path(4), 1.0, 3).unwrap();
        assert_eq!(ppg.graph().edges(), vec![(0, 1)]);
        assert!(ppg.nonprobes().len() <= 1);
        assert!(cert.is_empty());
    }

    #[test]
    fn deterministic_in_seed() {
        let h = Pattern::IsolatedPlusP4(1);
        let a = random_probe_hfree(8, &h, 0.5, 1).unwrap();
        let b = random_probe_hfree(8, &h, 0.5, 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn outputs_are_certified() {
        let h = Pattern::IsolatedPlusP4(1);
        for seed in 0..20 {
            let (ppg, cert) = random_probe_hfree(7, &h, 0.6, seed).unwrap();
            assert!(ppg.graph().is_connected());
            assert!(ppg.graph().is_independent(ppg.nonprobes()));
            assert!(verify_probe_certificate(&ppg, &cert, &h).unwrap());
        }
    }

    #[test]
    fn impossible_requests_time_out() {
        // Every connected graph on 3 vertices has an edge.
        assert_eq!(
            random_probe_hfree(3, &Pattern::Path(2), 0.5, 0),
            Err(Error::GenerationTimeout(GENERATION_BUDGET))
        );
    }

    #[test]
    fn source_graphs() {
        let g = random_connected(7, 0.4, 2).unwrap();
        assert!(g.is_connected());
        let b = random_connected_bipartite(3, 4, 0.6, 2).unwrap();
        assert!(b.is_connected());
        assert!(b.edges().iter().all(|&(u, v)| u < 3 && v >= 3));
        for seed in 0..10 {
            let c = random_cubic(8, seed).unwrap();
            assert!(c.is_connected());
            assert!((0..8).all(|v| c.degree(v) == 3));
        }
        assert!(random_cubic(5, 0).is_err());
    }
}
