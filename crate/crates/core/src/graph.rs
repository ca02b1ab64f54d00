//! Undirected simple graphs with unweighted shortest-path distances.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Distance entry for vertices in a different component than the source.
pub const UNREACHABLE: usize = usize::MAX;

/// An undirected simple graph on the dense vertex ids `0..vertex_count`.
///
/// Neighbor lists are sorted and free of duplicates, so every traversal visits
/// vertices in a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Single-source distances; `dist[v] == UNREACHABLE` when `v` is in another component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either orientation)
    /// collapse to one.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
            degree_sum += nbrs.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: degree_sum / 2,
        })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph edges are valid")
    }

    /// The star `K_{1,m}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let n = part_of.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]);
        Self::new(n, edges.collect::<Vec<_>>()).expect("multipartite edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::input(format!(
                "vertex {v} outside 0..{}",
                self.vertex_count()
            )));
        }
        Ok(())
    }

    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        Ok(DistanceRow {
            source,
            dist: self.multi_source_distances(std::iter::once(source)),
        })
    }

    /// Distance from every vertex to the nearest of `sources`.
    pub fn multi_source_distances(&self, sources: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `d(v, S) = min { d(v, s) : s in S }`.
    pub fn distance_to_set(&self, v: usize, set: &[usize]) -> Result<usize> {
        self.check_vertex(v)?;
        if set.is_empty() {
            return Err(Error::input("distance to an empty vertex set"));
        }
        for &s in set {
            self.check_vertex(s)?;
        }
        let d = self.multi_source_distances(set.iter().copied())[v];
        if d == UNREACHABLE {
            return Err(Error::Connectivity(format!(
                "no vertex of the set is reachable from {v}"
            )));
        }
        Ok(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return false;
        }
        self.multi_source_distances(std::iter::once(0))
            .iter()
            .all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(Vec::len)
            .max()
            .ok_or_else(|| Error::input("maximum degree of the empty graph"))
    }

    /// Smallest id among the vertices of maximum degree.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        let delta = self.max_degree().ok()?;
        (0..self.vertex_count()).find(|&v| self.degree(v) == delta)
    }

    /// Longest shortest path, by one BFS per vertex.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Connectivity("diameter is undefined".into()));
        }
        let mut best = 0;
        for v in 0..self.vertex_count() {
            let far = self
                .multi_source_distances(std::iter::once(v))
                .into_iter()
                .max()
                .unwrap_or(0);
            best = best.max(far);
        }
        Ok(best)
    }

    /// The graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation of the vertex ids"));
            }
        }
        Graph::new(n, self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>())
    }
}
