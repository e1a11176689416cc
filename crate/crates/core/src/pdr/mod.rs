//! Pseudo-distance-regularity around a vertex.
//!
//! Vertex weights come from the Perron vector `α`. For a partition
//! `V_1 ∪ .. ∪ V_m`, the pseudo-intersection number `b*_ij(u)` of a vertex
//! `u ∈ V_i` is `(1/α_u) Σ_{v ∈ Γ(u) ∩ V_j} α_v`; the partition is
//! pseudo-regular when these do not depend on the choice of `u` inside `V_i`.
//! A graph is pseudo-distance-regular around `u` when the distance partition
//! around `u` is pseudo-regular. This is decided twice, once from the
//! definition and once from the predistance polynomials, and the two answers
//! must agree.

mod classify;

pub use classify::{classify, classify_with, Classification, NotPdrWitness, PartArray, Verdict, WalkRegularity};

use crate::error::{Error, Result};
use crate::graph::{bfs, distance_regularity, DistanceInfo, Graph};
use crate::predistance::{apply_poly_column, build_predistance, LevelNumbers, PredistanceSystem};
use crate::scalar::{Real, Tolerances};
use crate::spectral::{local_spectrum, LocalSpectrum, SpectralDecomposition};

/// Pseudo-quotient matrix `B* = (b*_ij)` of a pseudo-regular partition.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix<T> {
    pub entries: Vec<Vec<T>>,
    /// Per-level `(c*_i, a*_i, b*_i)` when `B*` is tridiagonal, as it is for
    /// distance partitions.
    pub levels: Option<Vec<LevelNumbers<T>>>,
}

impl<T: Real> QuotientMatrix<T> {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    fn from_entries(entries: Vec<Vec<T>>) -> Self {
        let m = entries.len();
        let banded = (0..m).all(|i| (0..m).all(|j| i.abs_diff(j) <= 1 || entries[i][j] == T::zero()));
        let levels = banded.then(|| {
            (0..m)
                .map(|i| LevelNumbers {
                    c: if i == 0 { T::zero() } else { entries[i][i - 1] },
                    a: entries[i][i],
                    b: if i + 1 == m { T::zero() } else { entries[i][i + 1] },
                })
                .collect()
        });
        QuotientMatrix { entries, levels }
    }
}

/// Two vertices of one cell whose weighted counts into another cell differ.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionWitness<T> {
    pub cell: usize,
    pub target: usize,
    pub first: usize,
    pub second: usize,
    pub first_value: T,
    pub second_value: T,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PartitionCheck<T> {
    Regular(QuotientMatrix<T>),
    Irregular(PartitionWitness<T>),
}

impl<T> PartitionCheck<T> {
    pub fn is_regular(&self) -> bool {
        matches!(self, PartitionCheck::Regular(_))
    }
}

fn cell_index(n: usize, partition: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut cell_of = vec![usize::MAX; n];
    for (i, cell) in partition.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::MalformedPartition(format!("cell {i} is empty")));
        }
        for &v in cell {
            if v >= n {
                return Err(Error::MalformedPartition(format!("vertex {v} out of range")));
            }
            if cell_of[v] != usize::MAX {
                return Err(Error::MalformedPartition(format!("vertex {v} appears twice")));
            }
            cell_of[v] = i;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::MalformedPartition(format!("vertex {v} is not covered")));
    }
    Ok(cell_of)
}

/// `b*_{i,j}(u)` for every target cell `j`.
fn weighted_counts<T: Real>(g: &Graph, alpha: &[T], cell_of: &[usize], cells: usize, u: usize) -> Vec<T> {
    let mut row = vec![T::zero(); cells];
    for &v in g.neighbors(u) {
        row[cell_of[v]] += alpha[v];
    }
    row.iter_mut().for_each(|x| *x /= alpha[u]);
    row
}

/// Tests whether `partition` is pseudo-regular. Counts are compared to those of
/// the lowest vertex of each cell; the first disagreement (lowest cell, then
/// lowest vertex, then lowest target cell) is reported.
pub fn pseudo_regular_check<T: Real>(
    g: &Graph,
    dec: &SpectralDecomposition<T>,
    partition: &[Vec<usize>],
    tol: &Tolerances<T>,
) -> Result<PartitionCheck<T>> {
    let cell_of = cell_index(g.n(), partition)?;
    let m = partition.len();
    let threshold = tol.pdr_threshold(dec.lambda0());
    let mut entries = Vec::with_capacity(m);
    for (i, cell) in partition.iter().enumerate() {
        let mut sorted = cell.clone();
        sorted.sort_unstable();
        let reference = weighted_counts(g, &dec.perron, &cell_of, m, sorted[0]);
        for &w in &sorted[1..] {
            let row = weighted_counts(g, &dec.perron, &cell_of, m, w);
            if let Some(j) = (0..m).find(|&j| (row[j] - reference[j]).abs() > threshold) {
                return Ok(PartitionCheck::Irregular(PartitionWitness {
                    cell: i,
                    target: j,
                    first: sorted[0],
                    second: w,
                    first_value: reference[j],
                    second_value: row[j],
                }));
            }
        }
        entries.push(reference);
    }
    Ok(PartitionCheck::Regular(QuotientMatrix::from_entries(entries)))
}

/// Column `u` of the weighted distance matrix `A*_i`: `α_u α_v` on vertices at
/// distance `i` from `u`, zero elsewhere.
pub fn weighted_distance_column<T: Real>(
    g: &Graph,
    dec: &SpectralDecomposition<T>,
    u: usize,
    i: usize,
) -> Result<Vec<T>> {
    weighted_column(dec, &bfs(g, u)?, i)
}

fn weighted_column<T: Real>(dec: &SpectralDecomposition<T>, info: &DistanceInfo, i: usize) -> Result<Vec<T>> {
    if i > info.ecc {
        return Err(Error::LevelOutOfRange { level: i, ecc: info.ecc });
    }
    let alpha_u = dec.perron[info.source];
    Ok(info
        .dist
        .iter()
        .zip(&dec.perron)
        .map(|(&d, &a)| if d == i { alpha_u * a } else { T::zero() })
        .collect())
}

fn max_abs_diff<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |m, (&x, &y)| m.max((x - y).abs()))
}

/// Both characterizations at one vertex, plus the data they were computed from.
#[derive(Debug, Clone)]
pub struct PdrVertexReport<T> {
    pub vertex: usize,
    pub ecc: usize,
    pub d_u: usize,
    pub is_pdr: bool,
    pub via_partition: bool,
    pub via_polynomials: bool,
    pub extremal: bool,
    pub quotient: Option<QuotientMatrix<T>>,
    pub witness: Option<PartitionWitness<T>>,
    /// Largest `|(p_i(A))_u - (A*_i)_u|` over the levels compared.
    pub column_residual: T,
    pub distances: DistanceInfo,
    pub local: LocalSpectrum<T>,
    pub predistance: PredistanceSystem<T>,
}

impl<T: Real> PdrVertexReport<T> {
    /// Pseudo-intersection numbers per level, when pseudo-distance-regular.
    pub fn levels(&self) -> Option<&[LevelNumbers<T>]> {
        self.quotient.as_ref().and_then(|q| q.levels.as_deref())
    }
}

pub fn is_pdr_around<T: Real>(
    g: &Graph,
    dec: &SpectralDecomposition<T>,
    u: usize,
    tol: &Tolerances<T>,
) -> Result<PdrVertexReport<T>> {
    let distances = bfs(g, u)?;
    let local = local_spectrum(dec, u, tol)?;
    let predistance = build_predistance(&local, dec.lambda0(), dec.perron[u])?;
    let ecc = distances.ecc;
    let d_u = local.d_u();
    let extremal = ecc == d_u;

    let (quotient, witness) = match pseudo_regular_check(g, dec, &distances.cells, tol)? {
        PartitionCheck::Regular(q) => (Some(q), None),
        PartitionCheck::Irregular(w) => (None, Some(w)),
    };
    let via_partition = quotient.is_some();

    let mut column_residual = T::zero();
    for i in 0..=ecc.min(d_u) {
        let lhs = apply_poly_column(g, &predistance.polys[i], u)?;
        let rhs = weighted_column(dec, &distances, i)?;
        column_residual = column_residual.max(max_abs_diff(&lhs, &rhs));
    }
    let via_polynomials = extremal && column_residual <= tol.pdr_threshold(dec.lambda0());

    if via_partition != via_polynomials {
        return Err(Error::CharacterizationMismatch { vertex: u, via_partition, via_polynomials });
    }
    Ok(PdrVertexReport {
        vertex: u,
        ecc,
        d_u,
        is_pdr: via_partition,
        via_partition,
        via_polynomials,
        extremal,
        quotient,
        witness,
        column_residual,
        distances,
        local,
        predistance,
    })
}

/// Residuals of the two expressions for the number of `l`-walks between
/// adjacent vertices at which the graph is pseudo-distance-regular.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkResiduals<T> {
    pub walks: i64,
    /// `|(A^l)_uv - (α_v/α_u)(1/λ0) Σ_i m_u(λ_i) λ_i^{l+1}|`
    pub forward: T,
    /// Same with `u` and `v` exchanged.
    pub backward: T,
    pub threshold: T,
}

impl<T: Real> WalkResiduals<T> {
    pub fn passes(&self) -> bool {
        self.forward <= self.threshold && self.backward <= self.threshold
    }
}

fn exact_walks(g: &Graph, u: usize, v: usize, l: u32) -> Result<i64> {
    let mut x = vec![0i64; g.n()];
    x[v] = 1;
    for _ in 0..l {
        let mut y = vec![0i64; g.n()];
        for (w, yw) in y.iter_mut().enumerate() {
            for &z in g.neighbors(w) {
                *yw = yw.checked_add(x[z]).ok_or(Error::WalkOverflow { l })?;
            }
        }
        x = y;
    }
    Ok(x[u])
}

pub fn walk_formula_check<T: Real>(
    g: &Graph,
    dec: &SpectralDecomposition<T>,
    u: usize,
    v: usize,
    l: u32,
    tol: &Tolerances<T>,
) -> Result<WalkResiduals<T>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAdjacent { u, v });
    }
    if l > tol.walk_cap {
        return Err(Error::WalkCapExceeded { l, cap: tol.walk_cap });
    }
    let walks = exact_walks(g, u, v, l)?;
    let exact = T::from_i64(walks).ok_or(Error::WalkOverflow { l })?;
    let lambda0 = dec.lambda0();
    let predicted = |from: usize, to: usize| -> Result<T> {
        let moment = local_spectrum(dec, from, tol)?.moment(l + 1);
        Ok(dec.perron[to] / dec.perron[from] / lambda0 * moment)
    };
    Ok(WalkResiduals {
        walks,
        forward: (exact - predicted(u, v)?).abs(),
        backward: (exact - predicted(v, u)?).abs(),
        threshold: tol.walk_threshold(lambda0, l),
    })
}

/// Compares the pseudo-intersection numbers at `u` with the values obtained
/// from the ordinary intersection numbers and the cell-wise Perron levels
/// `α^i`: `a*_i = a_i`, `b*_i = (α^{i+1}/α^i) b_i`, `c*_i = (α^{i-1}/α^i) c_i`.
///
/// Returns `[|Δa_i|, |Δb_i|, |Δc_i|]` for each level `i`. Requires the distance
/// partition around `u` to be regular and `α` constant on each of its cells.
pub fn eq6_consistency<T: Real>(
    g: &Graph,
    dec: &SpectralDecomposition<T>,
    u: usize,
    tol: &Tolerances<T>,
) -> Result<Vec<[T; 3]>> {
    let info = bfs(g, u)?;
    let counts = distance_regularity(g, &info)
        .ok_or_else(|| Error::Precondition(format!("distance partition around {u} is not regular")))?;
    let threshold = tol.pdr_threshold(dec.lambda0());
    let levels_alpha: Vec<T> = info
        .cells
        .iter()
        .enumerate()
        .map(|(i, cell)| {
            let a0 = dec.perron[cell[0]];
            if cell.iter().any(|&v| (dec.perron[v] - a0).abs() > threshold) {
                Err(Error::Precondition(format!("Perron vector is not constant on cell {i} around {u}")))
            } else {
                Ok(a0)
            }
        })
        .collect::<Result<_>>()?;
    let quotient = match pseudo_regular_check(g, dec, &info.cells, tol)? {
        PartitionCheck::Regular(q) => q,
        PartitionCheck::Irregular(_) => {
            return Err(Error::Precondition(format!("distance partition around {u} is not pseudo-regular")))
        }
    };
    let pseudo = quotient.levels.expect("distance partitions are tridiagonal");
    let as_t = |k: usize| T::from_usize(k).expect("count fits");
    Ok(counts
        .iter()
        .enumerate()
        .map(|(i, level)| {
            let b = if i + 1 < levels_alpha.len() { levels_alpha[i + 1] / levels_alpha[i] * as_t(level.b) } else { T::zero() };
            let c = if i > 0 { levels_alpha[i - 1] / levels_alpha[i] * as_t(level.c) } else { T::zero() };
            [
                (pseudo[i].a - as_t(level.a)).abs(),
                (pseudo[i].b - b).abs(),
                (pseudo[i].c - c).abs(),
            ]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;
    use crate::spectral::decompose;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    const PHI: f64 = 1.618_033_988_749_895;

    #[test]
    fn weighted_columns() {
        let k3 = generate_named("complete", &[3]).unwrap();
        let dec = decompose(&k3, &tol()).unwrap();
        let col = weighted_distance_column(&k3, &dec, 0, 1).unwrap();
        assert!(col.iter().zip([0.0, 1.0, 1.0]).all(|(a, b)| close(*a, b)));
        assert!(matches!(weighted_distance_column(&k3, &dec, 0, 2), Err(Error::LevelOutOfRange { level: 2, ecc: 1 })));

        let p3 = generate_named("path", &[3]).unwrap();
        let dec = decompose(&p3, &tol()).unwrap();
        assert!(close(dec.perron[1], 1.5f64.sqrt()) && close(dec.perron[0], 3f64.sqrt() / 2.0));
        let col = weighted_distance_column(&p3, &dec, 1, 1).unwrap();
        let want = 3.0 / (2.0 * 2f64.sqrt());
        assert!(close(col[0], want) && close(col[2], want) && col[1] == 0.0);
        let col = weighted_distance_column(&p3, &dec, 1, 0).unwrap();
        assert!(close(col[1], 1.5) && col[0] == 0.0);
    }

    #[test]
    fn cycle_quotient() {
        let c4 = generate_named("cycle", &[4]).unwrap();
        let dec = decompose(&c4, &tol()).unwrap();
        let info = bfs(&c4, 2).unwrap();
        let PartitionCheck::Regular(q) = pseudo_regular_check(&c4, &dec, &info.cells, &tol()).unwrap() else {
            panic!("C_4 distance partition is regular");
        };
        let levels = q.levels.unwrap();
        let got: Vec<_> = levels.iter().map(|l| (l.c, l.a, l.b)).collect();
        for (g, w) in got.iter().zip([(0.0, 0.0, 2.0), (1.0, 0.0, 1.0), (2.0, 0.0, 0.0)]) {
            assert!(close(g.0, w.0) && close(g.1, w.1) && close(g.2, w.2));
        }
        assert!(levels.iter().all(|l| close(l.sum(), 2.0)));
    }

    #[test]
    fn star_quotient() {
        let p3 = generate_named("path", &[3]).unwrap();
        let dec = decompose(&p3, &tol()).unwrap();
        let PartitionCheck::Regular(q) = pseudo_regular_check(&p3, &dec, &[vec![1], vec![0, 2]], &tol()).unwrap()
        else {
            panic!("center partition of K_1,2 is pseudo-regular");
        };
        let levels = q.levels.unwrap();
        let r2 = 2f64.sqrt();
        assert!(close(levels[0].b, r2) && close(levels[1].c, r2));
        assert!(close(levels[0].a, 0.0) && close(levels[1].a, 0.0));
    }

    #[test]
    fn path_inner_vertex_witness() {
        let p4 = generate_named("path", &[4]).unwrap();
        let dec = decompose(&p4, &tol()).unwrap();
        let info = bfs(&p4, 1).unwrap();
        let PartitionCheck::Irregular(w) = pseudo_regular_check(&p4, &dec, &info.cells, &tol()).unwrap() else {
            panic!("P_4 inner partition is not pseudo-regular");
        };
        assert_eq!((w.cell, w.target, w.first, w.second), (1, 0, 0, 2));
        assert!(close(w.first_value, PHI) && close(w.second_value, 1.0));
    }

    #[test]
    fn malformed_partitions() {
        let p4 = generate_named("path", &[4]).unwrap();
        let dec = decompose(&p4, &tol()).unwrap();
        for bad in [
            vec![vec![0, 1], vec![2]],
            vec![vec![0, 1], vec![1, 2, 3]],
            vec![vec![0, 1, 2, 3], vec![]],
            vec![vec![0, 1, 2, 3, 4]],
        ] {
            assert!(matches!(pseudo_regular_check(&p4, &dec, &bad, &tol()), Err(Error::MalformedPartition(_))));
        }
    }

    #[test]
    fn petersen_is_pdr_everywhere() {
        let g = generate_named("petersen", &[]).unwrap();
        let dec = decompose(&g, &tol()).unwrap();
        for u in 0..10 {
            let r = is_pdr_around(&g, &dec, u, &tol()).unwrap();
            assert!(r.is_pdr && r.via_polynomials && r.extremal);
            let levels = r.levels().unwrap();
            let want = [(0.0, 0.0, 3.0), (1.0, 0.0, 2.0), (1.0, 2.0, 0.0)];
            for (l, w) in levels.iter().zip(want) {
                assert!(close(l.c, w.0) && close(l.a, w.1) && close(l.b, w.2));
            }
            for (l, f) in levels.iter().zip(r.predistance.level_numbers()) {
                assert!(close(l.c, f.c) && close(l.a, f.a) && close(l.b, f.b));
            }
        }
    }

    #[test]
    fn path_reports() {
        let p4 = generate_named("path", &[4]).unwrap();
        let dec = decompose(&p4, &tol()).unwrap();
        let end = is_pdr_around(&p4, &dec, 0, &tol()).unwrap();
        assert!(end.is_pdr && end.extremal);
        assert_eq!((end.ecc, end.d_u), (3, 3));
        let inner = is_pdr_around(&p4, &dec, 1, &tol()).unwrap();
        assert!(!inner.is_pdr && !inner.via_polynomials);
        assert!(inner.witness.is_some());
    }

    #[test]
    fn walk_formulas() {
        for (name, params, l, walks) in [
            ("complete", vec![3], 1, 1),
            ("petersen", vec![], 2, 0),
            ("cycle", vec![4], 3, 4),
        ] {
            let g = generate_named(name, &params).unwrap();
            let dec = decompose(&g, &tol()).unwrap();
            let r = walk_formula_check(&g, &dec, 0, 1, l, &tol()).unwrap();
            assert_eq!(r.walks, walks);
            assert!(r.forward < 1e-10 && r.backward < 1e-10, "{name}: {r:?}");
        }
        let c4 = generate_named("cycle", &[4]).unwrap();
        let dec = decompose(&c4, &tol()).unwrap();
        assert!(matches!(walk_formula_check(&c4, &dec, 0, 2, 1, &tol()), Err(Error::NotAdjacent { .. })));
    }

    #[test]
    fn eq6_residuals() {
        for (name, params) in [("petersen", vec![]), ("cycle", vec![6]), ("complete_bipartite", vec![2, 3])] {
            let g = generate_named(name, &params).unwrap();
            let dec = decompose(&g, &tol()).unwrap();
            for u in 0..g.n() {
                let res = eq6_consistency(&g, &dec, u, &tol()).unwrap();
                assert!(res.iter().flatten().all(|&r| r <= 1e-9), "{name} at {u}: {res:?}");
            }
        }
        let p4 = generate_named("path", &[4]).unwrap();
        let dec = decompose(&p4, &tol()).unwrap();
        assert!(matches!(eq6_consistency(&p4, &dec, 1, &tol()), Err(Error::Precondition(_))));
        // end vertex: regular partition but α is still constant on singleton cells
        assert!(eq6_consistency(&p4, &dec, 0, &tol()).is_ok());
    }
}
