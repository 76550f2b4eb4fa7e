//! Restricted 3-SAT to d-Cut on probe 4P1-free graphs.
//!
//! Layout: variables `x_h` are `0..n`, positive clauses `C_i` are
//! `n..n+p`, negative clauses `D_j` are `n+p..n+2p`. For `d >= 3` the sets
//! `L_h` (in the positive clique) and then `L'_h` (in the negative clique)
//! follow, `d - 3` vertices each.

use super::sat::{validate_sat_shape, SatInstance};
use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probe::{PartitionedProbeGraph, ProbeCertificate};

/// Cliques below this size are not guaranteed monochromatic in a 2-cut.
pub const MONOCHROMATIC_CLIQUE_SIZE: usize = 5;

pub fn sat_to_4p1(inst: &SatInstance, d: usize) -> Result<ReductionOutput> {
    if d < 2 {
        return Err(Error::UnsupportedD(format!("d = {d}; the construction needs d >= 2")));
    }
    let shape = validate_sat_shape(inst);
    if !shape.valid {
        return Err(Error::InvalidSatInstance(shape.violations.join("; ")));
    }
    let n = inst.n_vars;
    let p = inst.positive.len();
    let extra = d.saturating_sub(3);
    if d >= 3 && d - 2 > p {
        return Err(Error::InvalidSatInstance(format!(
            "{p} clauses per sign cannot give each clause {} cross neighbours",
            d - 2
        )));
    }
    let k = |i: usize| n + i;
    let k_prime = |j: usize| n + p + j;
    let l = |h: usize, t: usize| n + 2 * p + h * extra + t;
    let l_prime = |h: usize, t: usize| n + 2 * p + n * extra + h * extra + t;
    let total = n + 2 * p + 2 * n * extra;
    let mut g = Graph::empty(total);

    let mut positive_clique: Vec<usize> = (0..p).map(k).collect();
    let mut negative_clique: Vec<usize> = (0..p).map(k_prime).collect();
    for h in 0..n {
        for t in 0..extra {
            positive_clique.push(l(h, t));
            negative_clique.push(l_prime(h, t));
            g.insert_edge(h, l(h, t));
            g.insert_edge(h, l_prime(h, t));
        }
    }
    for clique in [&positive_clique, &negative_clique] {
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                g.insert_edge(u, v);
            }
        }
    }
    for (i, clause) in inst.positive.iter().enumerate() {
        for &x in clause {
            g.insert_edge(x, k(i));
        }
    }
    for (j, clause) in inst.negative.iter().enumerate() {
        for &x in clause {
            g.insert_edge(x, k_prime(j));
        }
    }
    if d >= 3 {
        for i in 0..p {
            for shift in 0..d - 2 {
                g.insert_edge(k(i), k_prime((i + shift) % p));
            }
        }
    }

    let nonprobes: Vec<usize> = (0..n).collect();
    let probes: Vec<usize> = (n..total).collect();
    let mut f = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            f.push((u, v));
        }
    }
    let ppg = PartitionedProbeGraph::new(g, &probes, &nonprobes)?;
    let mut out = ReductionOutput::new(ppg, ProbeCertificate::new(f), "sat4p1");
    out.metadata.insert("d".into(), d.to_string());
    out.metadata.insert(
        "brute_force_regime".into(),
        (p < MONOCHROMATIC_CLIQUE_SIZE).to_string(),
    );
    Ok(out)
}
