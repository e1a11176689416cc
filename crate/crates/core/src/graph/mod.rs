//! Simple undirected graphs and their combinatorial structure.

mod bipartite;
mod distance;
mod enumerate;
pub mod graph6;
mod named;
mod walks;

pub use bipartite::{bipartition, Bipartition};
pub use distance::{
    bfs, distance_matrices, distance_regularity, DistanceInfo, DistanceMatrix, IntersectionArray,
    LevelCounts,
};
pub use enumerate::{enumerate_connected, ConnectedGraphs, MAX_ENUMERATION_ORDER};
pub use named::{generate_named, Family};
pub use walks::{IntMatrix, WalkPowers};

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// The adjacency pattern is stored twice: as a dense boolean matrix for
/// constant-time lookups and as sorted neighbor lists for traversal. Both are
/// fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, adjacency: vec![false; n * n], neighbors: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![false; n * n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            adjacency[u * n + v] = true;
            adjacency[v * n + u] = true;
        }
        Ok(Self::from_adjacency(n, adjacency))
    }

    /// Builds a graph from a symmetric, loop-free dense pattern.
    pub(crate) fn from_adjacency(n: usize, adjacency: Vec<bool>) -> Self {
        debug_assert_eq!(adjacency.len(), n * n);
        let neighbors: Vec<Vec<usize>> =
            (0..n).map(|u| (0..n).filter(|&v| adjacency[u * n + v]).collect()).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { n, adjacency, neighbors, edge_count }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// The common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|nb| nb.len() == first).then_some(first)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    /// Fails with [`Error::Disconnected`] naming the lowest unreachable vertex.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Precondition("graph has no vertices".into()));
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(unreachable) => Err(Error::Disconnected { from: 0, unreachable }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.ensure_connected().is_ok()
    }

    /// Multiplies the adjacency matrix by a vector.
    pub fn apply<T>(&self, x: &[T]) -> Vec<T>
    where
        T: Copy + std::iter::Sum<T>,
    {
        self.neighbors.iter().map(|nb| nb.iter().map(|&v| x[v]).sum()).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_and_symmetry() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Precondition(_))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn connectivity_names_unreachable_vertex() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.ensure_connected(), Err(Error::Disconnected { unreachable: 2, .. })));
        assert!(Graph::empty(1).is_connected());
    }
}
