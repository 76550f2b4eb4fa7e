//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected simple graph with sorted adjacency lists and an adjacency
/// matrix for constant-time edge queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range ids are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v, "endpoint out of range"));
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop"));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Adds `uv` if absent. Panics on self-loops or out-of-range ids.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n() && v < self.n());
        if self.matrix[u * self.n() + v] {
            return;
        }
        let n = self.n();
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    /// Returns a copy of the graph with the given extra edges.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in extra {
            if u >= g.n() || v >= g.n() {
                return Err(Error::InvalidEdge(u, v, "endpoint out of range"));
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop"));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n() + v]
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A single vertex counts as connected; the empty graph does not.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n()).collect();
        self.components_within(&all)
    }

    /// Connected components of the subgraph induced by `vertices`.
    pub fn components_within(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.n()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Components of the complement of the subgraph induced by `vertices`.
    pub fn co_components_within(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let mut unvisited: BTreeSet<usize> = sorted.iter().copied().collect();
        let mut comps = Vec::new();
        while let Some(&s) = unvisited.iter().next() {
            unvisited.remove(&s);
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let next: Vec<usize> = unvisited
                    .iter()
                    .copied()
                    .filter(|&w| !self.has_edge(u, w))
                    .collect();
                for w in next {
                    unvisited.remove(&w);
                    comp.push(w);
                    stack.push(w);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n());
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Open neighbourhood of a set, excluding the set itself. Sorted.
    pub fn neighbourhood_of(&self, set: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.n()];
        for &v in set {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        for &v in set {
            mark[v] = false;
        }
        (0..self.n()).filter(|&v| mark[v]).collect()
    }

    /// Closed neighbourhood of a set. Sorted.
    pub fn closed_neighbourhood_of(&self, set: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.n()];
        for &v in set {
            mark[v] = true;
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        (0..self.n()).filter(|&v| mark[v]).collect()
    }

    /// True if `v` is adjacent to every vertex of `set`.
    pub fn is_complete_to(&self, v: usize, set: &[usize]) -> bool {
        set.iter().all(|&w| self.has_edge(v, w))
    }

    pub fn is_anticomplete_to(&self, v: usize, set: &[usize]) -> bool {
        set.iter().all(|&w| !self.has_edge(v, w))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
