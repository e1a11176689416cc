use super::Graph;
use crate::error::{Error, Result};

/// Dense integer matrix with overflow-checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.n();
        let data = (0..n * n).map(|k| i64::from(g.has_edge(k / n, k % n))).collect();
        IntMatrix { n, data }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> i64 {
        self.data[u * self.n + v]
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = a.checked_mul(other.data[k * n + j])?;
                    data[i * n + j] = data[i * n + j].checked_add(term)?;
                }
            }
        }
        Some(IntMatrix { n, data })
    }
}

/// Exact powers `A^0, A^1, .., A^max` of the adjacency matrix.
#[derive(Debug, Clone)]
pub struct WalkPowers {
    powers: Vec<IntMatrix>,
}

impl WalkPowers {
    pub fn new(g: &Graph, max: u32) -> Result<Self> {
        let a = IntMatrix::adjacency(g);
        let mut powers = vec![IntMatrix::identity(g.n())];
        for l in 1..=max {
            let next = powers[l as usize - 1].checked_mul(&a).ok_or(Error::WalkOverflow { l })?;
            powers.push(next);
        }
        Ok(WalkPowers { powers })
    }

    /// Number of walks of length `l` from `u` to `v`.
    pub fn count(&self, u: usize, v: usize, l: u32) -> i64 {
        self.powers[l as usize].get(u, v)
    }

    pub fn max_length(&self) -> u32 {
        (self.powers.len() - 1) as u32
    }
}
