//! Small fixed patterns and induced-subgraph search.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern `find_induced` accepts.
pub const MAX_PATTERN_VERTICES: usize = 8;

/// A forbidden induced subgraph `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Path on `t` vertices.
    Path(usize),
    /// Cycle on `r >= 3` vertices.
    Cycle(usize),
    /// `K_{1,3}`.
    Claw,
    /// `K_4` minus an edge.
    Diamond,
    /// `k` isolated vertices.
    Independent(usize),
    /// Two disjoint edges.
    TwoP2,
    /// A `P_4` plus `s` isolated vertices.
    IsolatedPlusP4(usize),
    Custom { name: String, graph: Graph },
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        match self {
            Pattern::Path(t) => Graph::path(*t),
            Pattern::Cycle(r) => Graph::cycle(*r),
            Pattern::Claw => Graph::star(3),
            Pattern::Diamond => {
                Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
            }
            Pattern::Independent(k) => Graph::empty(*k),
            Pattern::TwoP2 => Graph::new(4, &[(0, 1), (2, 3)]).unwrap(),
            Pattern::IsolatedPlusP4(s) => {
                Graph::new(4 + s, &[(0, 1), (1, 2), (2, 3)]).unwrap()
            }
            Pattern::Custom { graph, .. } => graph.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Pattern::Path(t) => *t,
            Pattern::Cycle(r) => *r,
            Pattern::Claw | Pattern::Diamond | Pattern::TwoP2 => 4,
            Pattern::Independent(k) => *k,
            Pattern::IsolatedPlusP4(s) => 4 + s,
            Pattern::Custom { graph, .. } => graph.n(),
        }
    }

    /// The forbidden subgraphs characterising split graphs.
    pub fn split_forbidden() -> Vec<Pattern> {
        vec![Pattern::TwoP2, Pattern::Cycle(4), Pattern::Cycle(5)]
    }

    /// Parses a single pattern name or the set name `split`.
    pub fn parse_set(name: &str) -> Result<Vec<Pattern>> {
        if name.eq_ignore_ascii_case("split") {
            return Ok(Pattern::split_forbidden());
        }
        name.split(',')
            .map(|part| part.trim().parse::<Pattern>())
            .collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(t) => write!(f, "P{t}"),
            Pattern::Cycle(r) => write!(f, "C{r}"),
            Pattern::Claw => write!(f, "K13"),
            Pattern::Diamond => write!(f, "diamond"),
            Pattern::Independent(k) => write!(f, "{k}P1"),
            Pattern::TwoP2 => write!(f, "2P2"),
            Pattern::IsolatedPlusP4(0) => write!(f, "P4"),
            Pattern::IsolatedPlusP4(1) => write!(f, "P1+P4"),
            Pattern::IsolatedPlusP4(s) => write!(f, "{s}P1+P4"),
            Pattern::Custom { name, .. } => write!(f, "{name}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PreconditionViolation(format!("unknown pattern name `{s}`"));
        let lower = s.trim().to_ascii_lowercase();
        let pattern = match lower.as_str() {
            "k13" | "k1,3" | "claw" => Pattern::Claw,
            "diamond" => Pattern::Diamond,
            "2p2" => Pattern::TwoP2,
            _ => {
                if let Some(prefix) = lower.strip_suffix("p1+p4") {
                    let k = if prefix.is_empty() {
                        1
                    } else {
                        prefix.parse().map_err(|_| bad())?
                    };
                    Pattern::IsolatedPlusP4(k)
                } else if let Some(prefix) = lower.strip_suffix("p1") {
                    Pattern::Independent(prefix.parse().map_err(|_| bad())?)
                } else if let Some(t) = lower.strip_prefix('p') {
                    Pattern::Path(t.parse().map_err(|_| bad())?)
                } else if let Some(r) = lower.strip_prefix('c') {
                    let r: usize = r.parse().map_err(|_| bad())?;
                    if r < 3 {
                        return Err(bad());
                    }
                    Pattern::Cycle(r)
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(pattern)
    }
}

/// Finds an induced copy of `h` in `g`. The returned vector maps pattern
/// vertex `i` to `g` vertex `occ[i]`; among all occurrences the
/// lexicographically least map is returned.
pub fn find_induced(g: &Graph, h: &Pattern) -> Result<Option<Vec<usize>>> {
    let k = h.vertex_count();
    if k > MAX_PATTERN_VERTICES {
        return Err(Error::UnsupportedPattern(k));
    }
    Ok(find_induced_graph(g, &h.graph()))
}

pub(crate) fn find_induced_graph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; g.n()];
    if extend(g, h, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == h.n() {
        return true;
    }
    let need = h.degree(i);
    for cand in 0..g.n() {
        if used[cand] || g.degree(cand) < need {
            continue;
        }
        let consistent = map
            .iter()
            .enumerate()
            .all(|(j, &w)| h.has_edge(i, j) == g.has_edge(cand, w));
        if !consistent {
            continue;
        }
        used[cand] = true;
        map.push(cand);
        if extend(g, h, map, used) {
            return true;
        }
        map.pop();
        used[cand] = false;
    }
    false
}

/// True if `g` contains none of `patterns` as an induced subgraph.
pub fn is_free_of(g: &Graph, patterns: &[Pattern]) -> Result<bool> {
    for h in patterns {
        if find_induced(g, h)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_in_p4() {
        let occ = find_induced(&Graph::path(4), &Pattern::Path(4)).unwrap();
        assert_eq!(occ, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn star_has_no_p4() {
        assert_eq!(find_induced(&Graph::star(3), &Pattern::Path(4)).unwrap(), None);
    }

    #[test]
    fn c5_is_2p2_free() {
        // Exhaustive over all 4-subsets: any four vertices of C5 induce a P4.
        let g = Graph::cycle(5);
        for skip in 0..5 {
            let sub: Vec<usize> = (0..5).filter(|&v| v != skip).collect();
            assert_eq!(g.induced(&sub).edge_count(), 3);
        }
        assert_eq!(find_induced(&g, &Pattern::TwoP2).unwrap(), None);
        assert!(find_induced(&Graph::cycle(6), &Pattern::TwoP2).unwrap().is_some());
    }

    #[test]
    fn too_large_pattern_rejected() {
        assert_eq!(
            find_induced(&Graph::path(3), &Pattern::Path(9)),
            Err(Error::UnsupportedPattern(9))
        );
    }

    #[test]
    fn names_round_trip() {
        for name in ["P4", "C5", "K13", "diamond", "4P1", "2P2", "P1+P4", "3P1+P4"] {
            let p: Pattern = name.parse().unwrap();
            assert_eq!(p.to_string(), name);
        }
        assert_eq!("P4".parse::<Pattern>().unwrap(), Pattern::Path(4));
        assert_eq!(Pattern::parse_set("split").unwrap().len(), 3);
        assert!("Q7".parse::<Pattern>().is_err());
    }
}
