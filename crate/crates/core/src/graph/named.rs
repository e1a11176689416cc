use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Graph families available from [`generate_named`].
///
/// Vertex labels:
/// - `path(n)`: `0 - 1 - .. - n-1`.
/// - `cycle(n)`: the path plus the edge `n-1 - 0`.
/// - `complete(n)`: all pairs.
/// - `complete_bipartite(a, b)`: parts `0..a` and `a..a+b`.
/// - `hypercube(k)`: vertices are `k`-bit words, adjacent when they differ in one bit.
/// - `petersen`: outer 5-cycle `0..5`, inner pentagram `5..10` with `5+i ~ 5+(i+2)%5`,
///   spokes `i ~ 5+i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Hypercube,
    Petersen,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }

    pub fn build(self, params: &[usize]) -> Result<Graph> {
        let invalid = |reason: String| Error::InvalidParams { family: self.name().into(), reason };
        if params.len() != self.arity() {
            return Err(invalid(format!("expected {} parameter(s), got {}", self.arity(), params.len())));
        }
        match self {
            Family::Path => {
                let n = params[0];
                if n < 1 {
                    return Err(invalid("path needs at least 1 vertex".into()));
                }
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Cycle => {
                let n = params[0];
                if n < 3 {
                    return Err(invalid(format!("cycle length must be at least 3, got {n}")));
                }
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Complete => {
                let n = params[0];
                if n < 1 {
                    return Err(invalid("complete graph needs at least 1 vertex".into()));
                }
                let edges: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
                Graph::from_edges(n, &edges)
            }
            Family::CompleteBipartite => {
                let (a, b) = (params[0], params[1]);
                if a < 1 || b < 1 {
                    return Err(invalid("both parts must be non-empty".into()));
                }
                let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
                Graph::from_edges(a + b, &edges)
            }
            Family::Hypercube => {
                let k = params[0];
                if k > 10 {
                    return Err(invalid(format!("dimension {k} too large (max 10)")));
                }
                let n = 1usize << k;
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (0..k).map(move |bit| (u, u ^ (1 << bit))))
                    .filter(|&(u, v)| u < v)
                    .collect();
                Graph::from_edges(n, &edges)
            }
            Family::Petersen => {
                let edges: Vec<_> = (0..5)
                    .flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)])
                    .collect();
                Graph::from_edges(10, &edges)
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Builds a catalog graph by family name.
pub fn generate_named(family: &str, params: &[usize]) -> Result<Graph> {
    family.parse::<Family>()?.build(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic() {
        let g = generate_named("petersen", &[]).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.regular_degree()), (10, 15, Some(3)));
        // girth 5: no triangles, no 4-cycles
        for u in 0..10 {
            for v in 0..10 {
                let common = (0..10).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
                if u != v {
                    assert!(common <= 1);
                }
            }
        }
    }

    #[test]
    fn family_shapes() {
        let mut d = generate_named("complete_bipartite", &[2, 3]).unwrap().degrees();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 2, 3, 3]);
        let c4 = generate_named("cycle", &[4]).unwrap();
        assert_eq!((c4.n(), c4.regular_degree()), (4, Some(2)));
        let q3 = generate_named("hypercube", &[3]).unwrap();
        assert_eq!((q3.n(), q3.edge_count(), q3.regular_degree()), (8, 12, Some(3)));
        assert_eq!(generate_named("path", &[1]).unwrap().n(), 1);
        assert_eq!(generate_named("complete", &[4]).unwrap().edge_count(), 6);
    }

    #[test]
    fn bad_requests() {
        assert!(matches!(generate_named("wheel", &[5]), Err(Error::UnknownFamily(_))));
        assert!(matches!(generate_named("cycle", &[2]), Err(Error::InvalidParams { .. })));
        assert!(matches!(generate_named("petersen", &[1]), Err(Error::InvalidParams { .. })));
        assert!(matches!(generate_named("complete_bipartite", &[0, 3]), Err(Error::InvalidParams { .. })));
    }
}
