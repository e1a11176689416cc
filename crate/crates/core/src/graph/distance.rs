use std::collections::VecDeque;
use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Hop distances from one vertex and the induced distance partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceInfo {
    pub source: usize,
    pub dist: Vec<usize>,
    pub ecc: usize,
    /// `cells[i]` holds the vertices at distance `i`, in ascending order.
    pub cells: Vec<Vec<usize>>,
}

impl DistanceInfo {
    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }
}

/// Breadth-first search from `u`. Fails on disconnected graphs, naming the
/// lowest unreachable vertex.
pub fn bfs(g: &Graph, u: usize) -> Result<DistanceInfo> {
    g.check_vertex(u)?;
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    while let Some(w) = queue.pop_front() {
        for &v in g.neighbors(w) {
            if dist[v] == usize::MAX {
                dist[v] = dist[w] + 1;
                queue.push_back(v);
            }
        }
    }
    if let Some(unreachable) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(Error::Disconnected { from: u, unreachable });
    }
    let ecc = dist.iter().copied().max().unwrap_or(0);
    let mut cells = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        cells[d].push(v);
    }
    Ok(DistanceInfo { source: u, dist, ecc, cells })
}

/// A 0/1 matrix marking pairs at one fixed distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }

    pub fn row_count(&self, u: usize) -> usize {
        self.bits[u * self.n..(u + 1) * self.n].iter().filter(|&&b| b).count()
    }
}

/// The distance-`i` matrices `A_0, .., A_D` where `D` is the diameter.
pub fn distance_matrices(g: &Graph) -> Result<Vec<DistanceMatrix>> {
    let n = g.n();
    let infos = (0..n).map(|u| bfs(g, u)).collect::<Result<Vec<_>>>()?;
    let diameter = infos.iter().map(|d| d.ecc).max().unwrap_or(0);
    let mut out = vec![DistanceMatrix { n, bits: vec![false; n * n] }; diameter + 1];
    for info in &infos {
        for (v, &d) in info.dist.iter().enumerate() {
            out[d].bits[info.source * n + v] = true;
        }
    }
    Ok(out)
}

/// Unweighted neighbor counts of a level of a distance partition: a vertex at
/// distance `i` has `c` neighbors at distance `i - 1`, `a` at `i` and `b` at
/// `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LevelCounts {
    pub c: usize,
    pub a: usize,
    pub b: usize,
}

/// Checks whether the distance partition around `info.source` is regular by
/// direct counting. Returns the per-level counts when it is.
pub fn distance_regularity(g: &Graph, info: &DistanceInfo) -> Option<Vec<LevelCounts>> {
    let counts_of = |w: usize| {
        let level = info.dist[w];
        let mut counts = LevelCounts { c: 0, a: 0, b: 0 };
        for &x in g.neighbors(w) {
            match info.dist[x] {
                d if d + 1 == level => counts.c += 1,
                d if d == level => counts.a += 1,
                _ => counts.b += 1,
            }
        }
        counts
    };
    info.cells
        .iter()
        .map(|cell| {
            let first = counts_of(cell[0]);
            cell[1..].iter().all(|&w| counts_of(w) == first).then_some(first)
        })
        .collect()
}

/// `{b_0, .., b_{D-1}; c_1, .., c_D}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn from_levels(levels: &[LevelCounts]) -> Self {
        let depth = levels.len().saturating_sub(1);
        IntersectionArray {
            b: levels[..depth].iter().map(|l| l.b).collect(),
            c: levels[1..].iter().map(|l| l.c).collect(),
        }
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}
