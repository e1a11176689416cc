use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every connected labeled graph on `n` vertices.
///
/// Edge subsets are visited as bitmasks in ascending order, bit `k` standing
/// for the `k`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ..`.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::EnumerationRange { n });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(ConnectedGraphs { n, end: 1u64 << pairs.len(), pairs, next: 0 })
}

#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn connected(&self, mask: u64) -> bool {
        // bitset flood fill over at most 7 vertices
        let mut adj = [0u8; MAX_ENUMERATION_ORDER];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let all = ((1u16 << self.n) - 1) as u8;
        let mut seen = 1u8;
        loop {
            let grown = (0..self.n).filter(|&v| seen >> v & 1 == 1).fold(seen, |s, v| s | adj[v]);
            if grown == seen {
                return seen == all;
            }
            seen = grown;
        }
    }

    fn build(&self, mask: u64) -> Graph {
        let n = self.n;
        let mut adjacency = vec![false; n * n];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adjacency[u * n + v] = true;
                adjacency[v * n + u] = true;
            }
        }
        Graph::from_adjacency(n, adjacency)
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.connected(mask) {
                return Some(self.build(mask));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn order_three_contents() {
        let graphs: Vec<_> = enumerate_connected(3).unwrap().collect();
        let edge_counts: Vec<_> = graphs.iter().map(Graph::edge_count).collect();
        assert_eq!(edge_counts, vec![2, 2, 2, 3]);
        assert!(graphs.iter().all(Graph::is_connected));
    }

    #[test]
    fn range_guard() {
        assert!(matches!(enumerate_connected(0), Err(Error::EnumerationRange { n: 0 })));
        assert!(matches!(enumerate_connected(8), Err(Error::EnumerationRange { n: 8 })));
    }
}
