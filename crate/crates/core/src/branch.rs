//! Branching over red-blue assignments of a frontier set.

use std::ops::ControlFlow;

use crate::colouring::{Colour, Colouring, PrecolouredPair};
use crate::graph::Graph;
use crate::process::process_in_place;

/// True if no coloured vertex has more than `d` opposite-coloured coloured
/// neighbours.
pub fn locally_valid(g: &Graph, c: &Colouring, d: usize) -> bool {
    (0..g.n()).all(|v| match c.get(v) {
        None => true,
        Some(col) => c.count_neighbours(g, v, col.other()) <= d,
    })
}

/// Iterator over the assignments of the uncoloured frontier vertices that
/// keep the colouring locally valid. The first frontier vertex is the most
/// significant digit and red comes before blue.
pub struct SeedColourings<'g> {
    graph: &'g Graph,
    base: Colouring,
    free: Vec<usize>,
    d: usize,
    next: u64,
    end: u64,
}

impl Iterator for SeedColourings<'_> {
    type Item = PrecolouredPair;

    fn next(&mut self) -> Option<PrecolouredPair> {
        let k = self.free.len();
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let mut c = self.base.clone();
            for (i, &v) in self.free.iter().enumerate() {
                let bit = code >> (k - 1 - i) & 1;
                c.set(v, if bit == 0 { Colour::Red } else { Colour::Blue });
            }
            if locally_valid(self.graph, &c, self.d) {
                return Some(c.to_pair());
            }
        }
        None
    }
}

pub fn enumerate_seed_colourings<'g>(
    g: &'g Graph,
    base: &PrecolouredPair,
    frontier: &[usize],
    d: usize,
) -> SeedColourings<'g> {
    let base = Colouring::from_pair(g.n(), base);
    let mut free: Vec<usize> = frontier
        .iter()
        .copied()
        .filter(|&v| base.get(v).is_none())
        .collect();
    free.sort_unstable();
    free.dedup();
    assert!(free.len() < 64, "frontier too large to enumerate");
    SeedColourings {
        graph: g,
        end: 1u64 << free.len(),
        base,
        free,
        d,
        next: 0,
    }
}

/// Depth-first enumeration used by the solvers: colour-processes after every
/// assignment and prunes locally invalid or rejected prefixes. Each leaf has
/// every frontier vertex coloured and is colour-processed.
pub(crate) fn for_each_branch<T>(
    g: &Graph,
    base: &Colouring,
    frontier: &[usize],
    d: usize,
    visit: &mut dyn FnMut(Colouring) -> ControlFlow<T>,
) -> ControlFlow<T> {
    let mut c = base.clone();
    if !process_in_place(g, &mut c, d) || !locally_valid(g, &c, d) {
        return ControlFlow::Continue(());
    }
    match frontier.iter().copied().find(|&v| c.get(v).is_none()) {
        None => visit(c),
        Some(v) => {
            for colour in [Colour::Red, Colour::Blue] {
                let mut next = c.clone();
                next.set(v, colour);
                for_each_branch(g, &next, frontier, d, visit)?;
            }
            ControlFlow::Continue(())
        }
    }
}
