//! Cograph (P4-free graph) recognition by recursive complement
//! decomposition, plus the join structure of connected cographs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, Pattern};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CographCheck {
    Cograph,
    /// An induced P4, listed in path order.
    P4Witness([usize; 4]),
}

impl CographCheck {
    pub fn is_cograph(&self) -> bool {
        matches!(self, CographCheck::Cograph)
    }
}

/// Decides whether `g` is P4-free. Every induced subgraph of a cograph on at
/// least two vertices is disconnected or has a disconnected complement; the
/// recursion stops at the first set that is neither.
pub fn is_p4_free(g: &Graph) -> CographCheck {
    let all: Vec<usize> = (0..g.n()).collect();
    match first_prime_set(g, &all) {
        None => CographCheck::Cograph,
        Some(set) => {
            let sub = g.induced(&set);
            let occ = find_induced(&sub, &Pattern::Path(4))
                .expect("P4 is a supported pattern")
                .expect("a set that is connected and co-connected contains a P4");
            CographCheck::P4Witness([set[occ[0]], set[occ[1]], set[occ[2]], set[occ[3]]])
        }
    }
}

fn first_prime_set(g: &Graph, set: &[usize]) -> Option<Vec<usize>> {
    if set.len() < 2 {
        return None;
    }
    let comps = g.components_within(set);
    let parts = if comps.len() > 1 {
        comps
    } else {
        let co = g.co_components_within(set);
        if co.len() == 1 {
            return Some(set.to_vec());
        }
        co
    };
    parts.iter().find_map(|part| first_prime_set(g, part))
}

fn require_connected_cograph(g: &Graph) -> Result<()> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_p4_free(g).is_cograph() {
        return Err(Error::NotACograph);
    }
    Ok(())
}

/// The top-level join of a connected cograph: `S1` is the co-component
/// containing the least vertex, `S2` the union of the others.
pub fn join_split(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    require_connected_cograph(g)?;
    let all: Vec<usize> = (0..g.n()).collect();
    let mut co = g.co_components_within(&all);
    debug_assert!(co.len() >= 2);
    let first = co.remove(0);
    let mut rest: Vec<usize> = co.into_iter().flatten().collect();
    rest.sort_unstable();
    Ok((first, rest))
}

/// A dominating edge of a connected cograph, taken across the top-level join.
pub fn dominating_edge(g: &Graph) -> Result<(usize, usize)> {
    let (s1, s2) = join_split(g)?;
    Ok((s1[0], s2[0]))
}
