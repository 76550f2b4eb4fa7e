//! Polynomial-time solvers on partitioned probe graphs.
//!
//! Every answer is validated before it is reported, so a "yes" is always
//! correct. A "no" is only guaranteed when the input belongs to the promised
//! class; the class is never checked here.

use crate::colouring::{Colour, Colouring, CutCertificate};
use crate::graph::Graph;

pub mod dcut;
pub mod matching_cut;

pub use dcut::{classify_nonprobe, find_p_dominating_pair, solve_dcut, NonProbeType};
pub use matching_cut::{seed_sets, solve_mmc, solve_pmc, SeedSets};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub answer: bool,
    pub certificate: Option<CutCertificate>,
    /// Complete colourings handed to validation.
    pub branches_explored: u64,
    /// Branches abandoned with vertices still uncoloured.
    pub stranded_branches: u64,
    pub case_trace: Vec<String>,
}

impl SolveReport {
    pub(crate) fn new() -> Self {
        SolveReport {
            answer: false,
            certificate: None,
            branches_explored: 0,
            stranded_branches: 0,
            case_trace: Vec::new(),
        }
    }

    pub(crate) fn trace(&mut self, label: &str) {
        self.case_trace.push(label.to_string());
    }

    pub(crate) fn found(mut self, cert: Option<CutCertificate>) -> Self {
        self.answer = cert.is_some();
        self.certificate = cert;
        self
    }
}

/// All subsets of `items` with between `min` and `max` elements, by size and
/// then lexicographically by position.
pub(crate) fn subsets(items: &[usize], min: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in min..=max.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i]).collect());
            // Advance to the next combination.
            let mut i = size;
            while i > 0 && idx[i - 1] == items.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// Colours `v`, reporting a clash with an existing different colour.
pub(crate) fn assign(c: &mut Colouring, v: usize, colour: Colour) -> bool {
    match c.get(v) {
        Some(existing) => existing == colour,
        None => {
            c.set(v, colour);
            true
        }
    }
}

/// Gives every uncoloured vertex whose neighbours are all coloured alike the
/// same colour; this never raises anyone's count of opposite neighbours.
pub(crate) fn fill_monochromatic(g: &Graph, c: &mut Colouring) {
    for v in c.uncoloured_vertices() {
        let mut colours = g.neighbours(v).iter().map(|&w| c.get(w));
        if let Some(Some(first)) = colours.next() {
            if colours.all(|col| col == Some(first)) {
                c.set(v, first);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_order() {
        let s = subsets(&[3, 5, 7], 0, 2);
        assert_eq!(
            s,
            vec![vec![], vec![3], vec![5], vec![7], vec![3, 5], vec![3, 7], vec![5, 7]]
        );
        assert_eq!(subsets(&[1, 2], 1, 5).len(), 3);
        assert_eq!(subsets(&[], 1, 3), Vec::<Vec<usize>>::new());
        assert_eq!(subsets(&(0..10).collect::<Vec<_>>(), 0, 3).len(), 1 + 10 + 45 + 120);
    }

    #[test]
    fn fill_only_monochromatic() {
        let g = Graph::star(2);
        let mut c = Colouring::uncoloured(3);
        c.set(1, Colour::Red);
        c.set(2, Colour::Blue);
        fill_monochromatic(&g, &mut c);
        assert_eq!(c.get(0), None);
        c.set(2, Colour::Red);
        fill_monochromatic(&g, &mut c);
        assert_eq!(c.get(0), Some(Colour::Red));
    }
}
