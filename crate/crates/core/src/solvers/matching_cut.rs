//! Maximum and perfect matching cuts on probe (sP1+P4)-free graphs.
//!
//! Pick a seed set `S` whose closed neighbourhood leaves only an independent
//! set uncovered. Branching over all 1-colourings of `N[S]` and
//! colour-processing leaves an independent set of uncoloured vertices, each
//! with at most one red and one blue neighbour, which the matching-based
//! completions finish exactly. Since every valid colouring agrees with one
//! of the branches, a single seed set suffices.

use std::ops::ControlFlow;

use super::SolveReport;
use crate::branch::for_each_branch;
use crate::colouring::{Colouring, CutCertificate};
use crate::completion::{complete_independent_max_cut, complete_independent_perfect};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probe::PartitionedProbeGraph;

/// Vertex sets `S` with `1 <= |S| <= k` such that `V \ N[S]` is independent,
/// by size and then lexicographically.
pub struct SeedSets<'g> {
    graph: &'g Graph,
    k: usize,
    size: usize,
    current: Option<Vec<usize>>,
}

pub fn seed_sets(ppg: &PartitionedProbeGraph, k: usize) -> SeedSets<'_> {
    SeedSets {
        graph: ppg.graph(),
        k,
        size: 0,
        current: None,
    }
}

impl SeedSets<'_> {
    /// The next candidate set, without the coverage test.
    fn advance(&mut self) -> Option<Vec<usize>> {
        let n = self.graph.n();
        if let Some(idx) = self.current.as_mut() {
            let size = idx.len();
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i > 0 {
                idx[i - 1] += 1;
                for j in i..size {
                    idx[j] = idx[j - 1] + 1;
                }
                return Some(idx.clone());
            }
        }
        self.size += 1;
        if self.size > self.k || self.size > n {
            self.current = None;
            return None;
        }
        let first: Vec<usize> = (0..self.size).collect();
        self.current = Some(first.clone());
        Some(first)
    }
}

impl Iterator for SeedSets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while let Some(s) = self.advance() {
            let covered = self.graph.closed_neighbourhood_of(&s);
            let mut inside = vec![false; self.graph.n()];
            for v in covered {
                inside[v] = true;
            }
            let rest: Vec<usize> = (0..self.graph.n()).filter(|&v| !inside[v]).collect();
            if self.graph.is_independent(&rest) {
                return Some(s);
            }
        }
        None
    }
}

enum Goal {
    Maximum,
    Perfect,
}

fn solve(ppg: &PartitionedProbeGraph, s: usize, goal: Goal) -> Result<SolveReport> {
    let g = ppg.graph();
    let mut report = SolveReport::new();
    if g.n() < 2 {
        report.trace("too-small");
        return Ok(report);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let Some(seed) = seed_sets(ppg, s + 4).next() else {
        report.trace("no-seed-set");
        return Ok(report);
    };
    report.trace("seed-set");
    let frontier = g.closed_neighbourhood_of(&seed);
    let mut best: Option<CutCertificate> = None;
    let mut failure = None;
    let _ = for_each_branch::<()>(g, &Colouring::uncoloured(g.n()), &frontier, 1, &mut |c| {
        report.branches_explored += 1;
        let pair = c.to_pair();
        let done = match goal {
            Goal::Maximum => complete_independent_max_cut(g, &pair),
            Goal::Perfect => complete_independent_perfect(g, &pair),
        };
        match done {
            Ok(Some(cert)) => match goal {
                Goal::Perfect => {
                    best = Some(cert);
                    ControlFlow::Break(())
                }
                Goal::Maximum => {
                    if best.as_ref().is_none_or(|b| cert.size > b.size) {
                        best = Some(cert);
                    }
                    ControlFlow::Continue(())
                }
            },
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(report.found(best))
}

/// A maximum matching cut, or "no" if the graph has no matching cut.
pub fn solve_mmc(ppg: &PartitionedProbeGraph, s: usize) -> Result<SolveReport> {
    solve(ppg, s, Goal::Maximum)
}

pub fn solve_pmc(ppg: &PartitionedProbeGraph, s: usize) -> Result<SolveReport> {
    solve(ppg, s, Goal::Perfect)
}
