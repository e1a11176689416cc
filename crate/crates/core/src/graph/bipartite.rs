use super::Graph;
use crate::error::Result;

/// A proper 2-coloring of a connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    /// `parts[0]` contains vertex 0.
    pub parts: [Vec<usize>; 2],
    /// Sorted degree multiset of each part.
    pub degrees: [Vec<usize>; 2],
    /// `Some((δ1, δ2))` when each part has constant degree.
    pub biregular: Option<(usize, usize)>,
    /// Which part each vertex belongs to.
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn is_biregular(&self) -> bool {
        self.biregular.is_some()
    }
}

/// The 2-coloring of `g`, or `None` when `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Result<Option<Bipartition>> {
    g.ensure_connected()?;
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if side[v] == u8::MAX {
                side[v] = 1 - side[u];
                stack.push(v);
            } else if side[v] == side[u] {
                return Ok(None);
            }
        }
    }
    let parts: [Vec<usize>; 2] = [0, 1].map(|s| (0..n).filter(|&v| side[v] == s).collect());
    let degrees = [0, 1].map(|s| {
        let mut d: Vec<usize> = parts[s].iter().map(|&v| g.degree(v)).collect();
        d.sort_unstable();
        d
    });
    let constant = |d: &[usize]| match d {
        [] => None,
        [first, ..] => d.iter().all(|x| x == first).then_some(*first),
    };
    let biregular = match (constant(&degrees[0]), constant(&degrees[1])) {
        (Some(a), Some(b)) => Some((a, b)),
        // K_1 has an empty second part.
        (Some(a), None) if degrees[1].is_empty() => Some((a, 0)),
        _ => None,
    };
    Ok(Some(Bipartition { parts, degrees, biregular, side }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    #[test]
    fn odd_cycle_has_no_bipartition() {
        let c5 = generate_named("cycle", &[5]).unwrap();
        assert!(bipartition(&c5).unwrap().is_none());
    }

    #[test]
    fn complete_bipartite_is_biregular() {
        let g = generate_named("complete_bipartite", &[2, 3]).unwrap();
        let b = bipartition(&g).unwrap().unwrap();
        assert_eq!(b.parts[0].len(), 2);
        assert_eq!(b.parts[1].len(), 3);
        assert_eq!(b.biregular, Some((3, 2)));
    }

    #[test]
    fn path_is_bipartite_not_biregular() {
        let g = generate_named("path", &[4]).unwrap();
        let b = bipartition(&g).unwrap().unwrap();
        assert_eq!(b.parts, [vec![0, 2], vec![1, 3]]);
        assert_eq!(b.degrees, [vec![1, 2], vec![1, 2]]);
        assert!(!b.is_biregular());
    }
}
