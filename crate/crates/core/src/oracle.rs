//! Exhaustive reference solvers.
//!
//! The colouring oracles walk the full tree of red-blue assignments in vertex
//! id order with vertex 0 fixed red (swapping colours preserves validity).
//! A branch is cut only when a vertex already has more than `d` opposite
//! neighbours, or, for perfect cuts, when a vertex whose neighbourhood is
//! fully coloured has a count other than `d`. Leaves are checked with the
//! same validation used everywhere else.

use std::ops::ControlFlow;

use crate::colouring::{validate_total, Colour, CutCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, Pattern};
use crate::probe::{PartitionedProbeGraph, ProbeCertificate};
use crate::reductions::sat::SatInstance;

/// Scale guards for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest graph the colouring oracles accept.
    pub max_vertices: usize,
    /// Largest non-probe set the certificate search accepts.
    pub max_nonprobes: usize,
    pub max_sat_vars: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 24,
            max_nonprobes: 8,
            max_sat_vars: 24,
        }
    }
}

fn guard(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::OracleScaleExceeded { size, limit })
    } else {
        Ok(())
    }
}

struct Search<'a, F> {
    g: &'a Graph,
    d: usize,
    perfect: bool,
    colours: Vec<Colour>,
    opposite: Vec<usize>,
    /// Largest neighbour id of each vertex (its neighbourhood is fully
    /// coloured once the search passes it).
    last_neighbour: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[Colour]) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, v: usize) -> ControlFlow<()> {
        let n = self.g.n();
        if v == n {
            return (self.visit)(&self.colours);
        }
        let choices: &[Colour] = if v == 0 { &[Colour::Red] } else { &[Colour::Red, Colour::Blue] };
        for &col in choices {
            self.colours[v] = col;
            let mut touched = Vec::new();
            for &w in self.g.neighbours(v) {
                if w < v && self.colours[w] != col {
                    self.opposite[w] += 1;
                    self.opposite[v] += 1;
                    touched.push(w);
                }
            }
            if self.consistent(v) {
                self.run(v + 1)?;
            }
            for w in touched {
                self.opposite[w] -= 1;
                self.opposite[v] -= 1;
            }
        }
        ControlFlow::Continue(())
    }

    fn consistent(&self, v: usize) -> bool {
        let ok = |w: usize| {
            let count = self.opposite[w];
            count <= self.d && !(self.perfect && self.last_neighbour[w] <= v && count != self.d)
        };
        ok(v) && self.g.neighbours(v).iter().all(|&w| w > v || ok(w))
    }
}

/// Calls `visit` on every valid red-blue `d`-colouring with vertex 0 red, in
/// lexicographic order (red before blue).
fn for_each_valid_colouring(
    g: &Graph,
    d: usize,
    perfect: bool,
    visit: impl FnMut(&[Colour]) -> ControlFlow<()>,
) {
    let n = g.n();
    if n < 2 {
        return;
    }
    let last_neighbour = (0..n)
        .map(|v| g.neighbours(v).last().copied().unwrap_or(0).max(v))
        .collect();
    let mut search = Search {
        g,
        d,
        perfect,
        colours: vec![Colour::Red; n],
        opposite: vec![0; n],
        last_neighbour,
        visit,
    };
    let _ = search.run(0);
}

fn first_valid(g: &Graph, d: usize, perfect: bool) -> Option<CutCertificate> {
    let mut found = None;
    for_each_valid_colouring(g, d, perfect, |colours| match validate_total(g, colours, d, perfect) {
        Ok(cert) => {
            found = Some(cert);
            ControlFlow::Break(())
        }
        Err(_) => ControlFlow::Continue(()),
    });
    found
}

pub fn brute_dcut(g: &Graph, d: usize) -> Result<Option<CutCertificate>> {
    brute_dcut_with(g, d, &OracleLimits::default())
}

pub fn brute_dcut_with(g: &Graph, d: usize, limits: &OracleLimits) -> Result<Option<CutCertificate>> {
    guard(g.n(), limits.max_vertices)?;
    Ok(first_valid(g, d, false))
}

pub fn brute_pmc(g: &Graph) -> Result<Option<CutCertificate>> {
    brute_pmc_with(g, &OracleLimits::default())
}

pub fn brute_pmc_with(g: &Graph, limits: &OracleLimits) -> Result<Option<CutCertificate>> {
    guard(g.n(), limits.max_vertices)?;
    Ok(first_valid(g, 1, true))
}

/// A maximum matching cut: the first valid 1-colouring (in search order)
/// among those cutting the most edges.
pub fn brute_mmc(g: &Graph) -> Result<Option<CutCertificate>> {
    brute_mmc_with(g, &OracleLimits::default())
}

pub fn brute_mmc_with(g: &Graph, limits: &OracleLimits) -> Result<Option<CutCertificate>> {
    guard(g.n(), limits.max_vertices)?;
    let mut best: Option<CutCertificate> = None;
    for_each_valid_colouring(g, 1, false, |colours| {
        if let Ok(cert) = validate_total(g, colours, 1, false) {
            if best.as_ref().is_none_or(|b| cert.size > b.size) {
                best = Some(cert);
            }
        }
        ControlFlow::Continue(())
    });
    Ok(best)
}

/// Calls `visit` on every valid (perfect) red-blue `d`-colouring with
/// vertex 0 red, in lexicographic order.
pub fn visit_valid_colourings(
    g: &Graph,
    d: usize,
    perfect: bool,
    limits: &OracleLimits,
    mut visit: impl FnMut(&CutCertificate) -> ControlFlow<()>,
) -> Result<()> {
    guard(g.n(), limits.max_vertices)?;
    for_each_valid_colouring(g, d, perfect, |colours| match validate_total(g, colours, d, perfect) {
        Ok(cert) => visit(&cert),
        Err(_) => ControlFlow::Continue(()),
    });
    Ok(())
}

/// Counts valid red-blue colourings (both colour orientations).
pub fn count_valid_colourings(g: &Graph, d: usize, perfect: bool) -> Result<u64> {
    guard(g.n(), OracleLimits::default().max_vertices)?;
    let mut count = 0u64;
    for_each_valid_colouring(g, d, perfect, |colours| {
        if validate_total(g, colours, d, perfect).is_ok() {
            count += 2;
        }
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// A satisfying assignment (`true` = variable set true), trying assignments
/// in binary counter order with variable 0 as the least significant bit.
pub fn brute_sat(inst: &SatInstance) -> Result<Option<Vec<bool>>> {
    brute_sat_with(inst, &OracleLimits::default())
}

pub fn brute_sat_with(inst: &SatInstance, limits: &OracleLimits) -> Result<Option<Vec<bool>>> {
    guard(inst.n_vars, limits.max_sat_vars)?;
    for code in 0u64..(1u64 << inst.n_vars) {
        let value = |x: usize| code >> x & 1 == 1;
        let pos_ok = inst.positive.iter().all(|c| c.iter().any(|&x| value(x)));
        let neg_ok = inst.negative.iter().all(|c| c.iter().any(|&x| !value(x)));
        if pos_ok && neg_ok {
            return Ok(Some((0..inst.n_vars).map(value).collect()));
        }
    }
    Ok(None)
}

/// Searches for `F` inside `N` making `G + F` free of `h`.
pub fn brute_probe_certificate(
    ppg: &PartitionedProbeGraph,
    h: &Pattern,
) -> Result<Option<ProbeCertificate>> {
    brute_probe_certificate_all(ppg, std::slice::from_ref(h), &OracleLimits::default())
}

/// Decides the pairs of the `k`-th non-probe with all earlier non-probes at
/// once, then requires the graph induced by the probes and the first `k + 1`
/// non-probes to be pattern-free: that subgraph is final from then on.
pub fn brute_probe_certificate_all(
    ppg: &PartitionedProbeGraph,
    patterns: &[Pattern],
    limits: &OracleLimits,
) -> Result<Option<ProbeCertificate>> {
    let nonprobes = ppg.nonprobes().to_vec();
    guard(nonprobes.len(), limits.max_nonprobes)?;
    for h in patterns {
        find_induced(&Graph::empty(0), h)?;
    }
    let base = ppg.graph().induced(ppg.probes());
    for h in patterns {
        if find_induced(&base, h)?.is_some() {
            return Ok(None);
        }
    }
    let mut graph = ppg.graph().clone();
    let mut chosen = Vec::new();
    let found = certificate_search(ppg.probes(), &nonprobes, 0, patterns, &mut graph, &mut chosen);
    Ok(found.then(|| ProbeCertificate::new(chosen)))
}

fn certificate_search(
    probes: &[usize],
    nonprobes: &[usize],
    k: usize,
    patterns: &[Pattern],
    graph: &mut Graph,
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    if k == nonprobes.len() {
        return true;
    }
    let v = nonprobes[k];
    let earlier = &nonprobes[..k];
    let mut window: Vec<usize> = probes.iter().copied().chain(nonprobes[..=k].iter().copied()).collect();
    window.sort_unstable();
    for mask in 0u32..(1u32 << k) {
        let added: Vec<(usize, usize)> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (earlier[i], v))
            .collect();
        let mut trial = graph.clone();
        for &(a, b) in &added {
            trial.insert_edge(a, b);
        }
        let sub = trial.induced(&window);
        let free = patterns
            .iter()
            .all(|h| find_induced(&sub, h).expect("checked above").is_none());
        if !free {
            continue;
        }
        let before = chosen.len();
        chosen.extend(added);
        let saved = std::mem::replace(graph, trial);
        if certificate_search(probes, nonprobes, k + 1, patterns, graph, chosen) {
            return true;
        }
        *graph = saved;
        chosen.truncate(before);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dcut_examples() {
        assert!(brute_dcut(&Graph::cycle(4), 1).unwrap().is_some());
        assert!(brute_dcut(&Graph::cycle(3), 1).unwrap().is_none());
        assert!(brute_dcut(&Graph::path(2), 1).unwrap().is_some());
        assert!(brute_dcut(&Graph::complete(5), 2).unwrap().is_none());
        assert!(brute_dcut(&Graph::star(4), 2).unwrap().is_some());
    }

    #[test]
    fn pmc_examples() {
        assert!(brute_pmc(&Graph::path(2)).unwrap().is_some());
        assert_eq!(brute_pmc(&Graph::path(4)).unwrap().unwrap().size, 2);
        assert!(brute_pmc(&Graph::path(3)).unwrap().is_none());
        assert!(brute_pmc(&Graph::star(3)).unwrap().is_none());
        assert!(brute_pmc(&Graph::cycle(3)).unwrap().is_none());
    }

    #[test]
    fn mmc_examples() {
        assert_eq!(brute_mmc(&Graph::path(2)).unwrap().unwrap().size, 1);
        assert_eq!(brute_mmc(&Graph::path(4)).unwrap().unwrap().size, 2);
        assert!(brute_mmc(&Graph::cycle(3)).unwrap().is_none());
    }

    #[test]
    fn scale_guard() {
        assert_eq!(
            brute_dcut(&Graph::path(25), 1),
            Err(Error::OracleScaleExceeded { size: 25, limit: 24 })
        );
    }

    #[test]
    fn first_found_is_lexicographic() {
        let cert = brute_dcut(&Graph::path(4), 1).unwrap().unwrap();
        use Colour::*;
        assert_eq!(cert.colouring, vec![Red, Red, Red, Blue]);
    }

    #[test]
    fn sat_examples() {
        let one = SatInstance {
            n_vars: 3,
            positive: vec![[0, 1, 2]],
            negative: vec![],
        };
        assert!(brute_sat(&one).unwrap().is_some());
        let fig = SatInstance::figure();
        let a = brute_sat(&fig).unwrap().unwrap();
        assert!(fig.satisfied_by(&a));
        let mut x1x5 = vec![false; 6];
        x1x5[0] = true;
        x1x5[4] = true;
        assert!(fig.satisfied_by(&x1x5));
    }

    #[test]
    fn contradictory_sat() {
        // Clause "x" and clause "not x", padded to the oracle's 3-set format
        // by repeating the variable.
        let inst = SatInstance {
            n_vars: 1,
            positive: vec![[0, 0, 0]],
            negative: vec![[0, 0, 0]],
        };
        assert_eq!(brute_sat(&inst).unwrap(), None);
    }

    #[test]
    fn certificate_search() {
        let p3 = PartitionedProbeGraph::new(Graph::path(3), &[1], &[0, 2]).unwrap();
        let cert = brute_probe_certificate(&p3, &Pattern::TwoP2).unwrap().unwrap();
        assert!(cert.is_empty() || cert.edges() == vec![(0, 2)]);
        let found = brute_probe_certificate(&p3, &Pattern::Path(3)).unwrap().unwrap();
        assert_eq!(found.edges(), vec![(0, 2)]);
        let all = PartitionedProbeGraph::all_probes(Graph::path(4));
        assert_eq!(brute_probe_certificate(&all, &Pattern::Path(4)).unwrap(), None);
        assert_eq!(
            brute_probe_certificate(&all, &Pattern::Claw).unwrap(),
            Some(ProbeCertificate::empty())
        );
    }
}
