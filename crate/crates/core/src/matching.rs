//! Maximum bipartite matching by augmenting paths.

use std::collections::HashMap;

/// Incremental matcher over dense indices. Left vertices are augmented in the
/// order the caller requests; neighbours are tried in ascending order.
pub(crate) struct Matcher {
    adj: Vec<Vec<usize>>,
    match_left: Vec<Option<usize>>,
    match_right: Vec<Option<usize>>,
}

impl Matcher {
    pub(crate) fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); left];
        for &(l, r) in edges {
            adj[l].push(r);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Matcher {
            adj,
            match_left: vec![None; left],
            match_right: vec![None; right],
        }
    }

    /// Tries to match the free left vertex `l`, rerouting earlier matches.
    /// Already matched left vertices stay matched.
    pub(crate) fn augment(&mut self, l: usize) -> bool {
        if self.match_left[l].is_some() {
            return true;
        }
        let mut visited = vec![false; self.match_right.len()];
        self.dfs(l, &mut visited)
    }

    fn dfs(&mut self, l: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match self.match_right[r] {
                None => true,
                Some(other) => self.dfs(other, visited),
            };
            if free {
                self.match_left[l] = Some(r);
                self.match_right[r] = Some(l);
                return true;
            }
        }
        false
    }

    pub(crate) fn partner_of_left(&self, l: usize) -> Option<usize> {
        self.match_left[l]
    }

    pub(crate) fn size(&self) -> usize {
        self.match_left.iter().flatten().count()
    }
}

/// Maximum-cardinality matching between `left` and `right` using only
/// `edges` (each `(l, r)` with `l` in `left`, `r` in `right`). Returned pairs
/// are `(l, r)` sorted by `l`.
pub fn max_bipartite_matching(
    left: &[usize],
    right: &[usize],
    edges: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut left_sorted = left.to_vec();
    left_sorted.sort_unstable();
    left_sorted.dedup();
    let mut right_sorted = right.to_vec();
    right_sorted.sort_unstable();
    right_sorted.dedup();
    let li: HashMap<usize, usize> = left_sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ri: HashMap<usize, usize> = right_sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let dense: Vec<(usize, usize)> = edges
        .iter()
        .filter_map(|(l, r)| Some((*li.get(l)?, *ri.get(r)?)))
        .collect();
    let mut m = Matcher::new(left_sorted.len(), right_sorted.len(), &dense);
    for l in 0..left_sorted.len() {
        m.augment(l);
    }
    (0..left_sorted.len())
        .filter_map(|l| m.partner_of_left(l).map(|r| (left_sorted[l], right_sorted[r])))
        .collect()
}
