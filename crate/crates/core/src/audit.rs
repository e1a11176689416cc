//! The full invariant suite run by corpus verification.
//!
//! [`audit_graph`] classifies a graph and then re-checks every algebraic
//! identity the classification relies on. Failures are collected as
//! [`Violation`]s instead of aborting, so a corpus run can report all of them.

use crate::error::{Error, Result};
use crate::graph::{Graph, WalkPowers};
use crate::pdr::{classify_with, eq6_consistency, walk_formula_check, Classification, PdrVertexReport, Verdict, WalkRegularity};
use crate::predistance::local_inner_product;
use crate::scalar::{count, Real, Tolerances};
use crate::spectral::{decompose, DenseMatrix, SpectralDecomposition};

/// Longest walk length used by the walk identities.
pub const AUDIT_WALK_LENGTH: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub vertex: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Audit<T> {
    /// Absent when classification itself hit an internal inconsistency.
    pub classification: Option<Classification<T>>,
    pub violations: Vec<Violation>,
}

impl<T> Audit<T> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Recorder {
    violations: Vec<Violation>,
}

impl Recorder {
    fn check<T: Real>(&mut self, check: &'static str, vertex: Option<usize>, residual: T, bound: T, what: impl FnOnce() -> String) {
        if !(residual <= bound) {
            self.violations.push(Violation { check, vertex, detail: format!("{}: residual {residual:e} > {bound:e}", what()) });
        }
    }

    fn fail(&mut self, check: &'static str, vertex: Option<usize>, detail: String) {
        self.violations.push(Violation { check, vertex, detail });
    }
}

pub fn audit_graph<T: Real>(g: &Graph, tol: &Tolerances<T>) -> Result<Audit<T>> {
    let dec = decompose(g, tol)?;
    let mut rec = Recorder { violations: Vec::new() };
    let powers = WalkPowers::new(g, AUDIT_WALK_LENGTH)?;
    spectral_checks(g, &dec, &powers, tol, &mut rec);

    let classification = match classify_with(g, dec, tol) {
        Ok(c) => c,
        Err(e @ (Error::CharacterizationMismatch { .. } | Error::Inconsistent(_))) => {
            let vertex = match e {
                Error::CharacterizationMismatch { vertex, .. } => Some(vertex),
                _ => None,
            };
            rec.fail("classification", vertex, e.to_string());
            return Ok(Audit { classification: None, violations: rec.violations });
        }
        Err(e) => return Err(e),
    };
    let dec = &classification.decomposition;
    for r in &classification.reports {
        predistance_checks(g, dec, r, tol, &mut rec);
        pdr_vertex_checks(dec, r, tol, &mut rec);
    }
    if classification.verdict != Verdict::NotPdr {
        all_pdr_checks(g, &classification, tol, &mut rec)?;
    }
    Ok(Audit { classification: Some(classification), violations: rec.violations })
}

fn spectral_checks<T: Real>(g: &Graph, dec: &SpectralDecomposition<T>, powers: &WalkPowers, tol: &Tolerances<T>, rec: &mut Recorder) {
    let n = g.n();
    let a = DenseMatrix::<T>::adjacency(g);
    let mut total = DenseMatrix::zeros(n);
    for (i, e) in dec.idempotents.iter().enumerate() {
        let e2 = e.matmul(e);
        rec.check("idempotent_square", None, e2.max_abs_diff(e), tol.num, || format!("E_{i}^2 = E_{i}"));
        let ae = a.matmul(e);
        rec.check("idempotent_eigen", None, ae.max_abs_diff(&e.scaled(dec.eigenvalues[i])), tol.num, || format!("A E_{i} = λ_{i} E_{i}"));
        for (j, f) in dec.idempotents.iter().enumerate().skip(i + 1) {
            rec.check("idempotent_orthogonal", None, e.matmul(f).max_abs_diff(&DenseMatrix::zeros(n)), tol.num, || format!("E_{i} E_{j} = 0"));
        }
        total = total.add(e);
    }
    rec.check("idempotent_sum", None, total.max_abs_diff(&DenseMatrix::identity(n)), tol.num, || "Σ E_i = I".into());

    let lambda0 = dec.lambda0();
    let sq: T = dec.perron.iter().map(|&x| x * x).sum();
    rec.check("perron_norm", None, (sq - count::<T>(n)).abs(), tol.num * count::<T>(n), || "||α||^2 = n".into());
    let regular = g.regular_degree().is_some();
    for u in 0..n {
        let weighted: T = g.neighbors(u).iter().map(|&v| dec.perron[v]).sum::<T>() / dec.perron[u];
        rec.check("average_weighted_degree", Some(u), (weighted - lambda0).abs(), tol.num, || "weighted degree = λ0".into());
        if regular {
            rec.check("regular_perron", Some(u), (dec.perron[u] - T::one()).abs(), tol.num, || "α_u = 1".into());
            let m0 = dec.raw_local_multiplicity(u, 0);
            rec.check("regular_perron", Some(u), (m0 - T::one() / count::<T>(n)).abs(), tol.num, || "m_u(λ0) = 1/n".into());
        }
    }

    for u in 0..n {
        let mults: Vec<T> = (0..=dec.d()).map(|i| dec.raw_local_multiplicity(u, i)).collect();
        let sum: T = mults.iter().copied().sum();
        rec.check("local_mult_total", Some(u), (sum - T::one()).abs(), tol.num, || "Σ_i m_u(λ_i) = 1".into());
        for l in 0..=AUDIT_WALK_LENGTH {
            let spectral: T = mults.iter().zip(&dec.eigenvalues).map(|(&m, &x)| m * x.powi(l as i32)).sum();
            let exact = T::from_i64(powers.count(u, u, l)).unwrap_or_else(T::infinity);
            rec.check("closed_walks", Some(u), (exact - spectral).abs(), tol.walk_threshold(lambda0, l), || {
                format!("(A^{l})_uu = Σ m_u(λ_i) λ_i^{l}")
            });
        }
    }
    for i in 0..=dec.d() {
        let sum: T = (0..n).map(|u| dec.raw_local_multiplicity(u, i)).sum();
        let m = count::<T>(dec.multiplicities[i]);
        rec.check("local_mult_sum", None, (sum - m).abs(), count::<T>(n) * tol.mult, || format!("Σ_u m_u(λ_{i}) = m_{i}"));
    }
}

fn predistance_checks<T: Real>(g: &Graph, dec: &SpectralDecomposition<T>, r: &PdrVertexReport<T>, tol: &Tolerances<T>, rec: &mut Recorder) {
    let u = Some(r.vertex);
    let sys = &r.predistance;
    let alpha_sq = dec.perron[r.vertex] * dec.perron[r.vertex];
    let lambda0 = dec.lambda0();
    for (i, p) in sys.polys.iter().enumerate() {
        if p.degree() != i {
            rec.fail("predistance_degree", u, format!("deg p_{i} = {}", p.degree()));
        }
        if !(sys.values_at_lambda0[i] > T::zero()) {
            rec.fail("predistance_positive", u, format!("p_{i}(λ0) = {}", sys.values_at_lambda0[i]));
        }
        let norm = local_inner_product(&r.local, p, p);
        rec.check("predistance_normalization", u, (norm - alpha_sq * p.eval(lambda0)).abs(), tol.orth * norm.max(T::one()), || {
            format!("||p_{i}||^2 = α_u^2 p_{i}(λ0)")
        });
        for (j, q) in sys.polys.iter().enumerate().take(i) {
            let ip = local_inner_product(&r.local, p, q);
            let scale = (norm * sys.norms_sq[j]).sqrt().max(T::one());
            rec.check("predistance_orthogonality", u, ip.abs(), tol.orth * scale, || format!("<p_{i}, p_{j}> = 0"));
        }
        let (res, scale) = sys.recurrence_residual(i);
        rec.check("predistance_recurrence", u, res, tol.orth * scale.max(T::one()), || format!("three-term recurrence at {i}"));
    }
    let c0 = sys.polys[0].coeffs()[0];
    rec.check("predistance_closed_form", u, (c0 - alpha_sq).abs(), tol.orth * alpha_sq.max(T::one()), || "p_0 = α_u^2".into());
    if sys.d_u() >= 1 {
        let slope = alpha_sq * lambda0 / count::<T>(g.degree(r.vertex));
        let c = sys.polys[1].coeffs();
        let err = c[0].abs().max((c[1] - slope).abs());
        rec.check("predistance_closed_form", u, err, tol.orth * slope.max(T::one()), || "p_1 = (α_u^2 λ0 / δ_u) x".into());
    }
}

fn pdr_vertex_checks<T: Real>(dec: &SpectralDecomposition<T>, r: &PdrVertexReport<T>, tol: &Tolerances<T>, rec: &mut Recorder) {
    if !r.is_pdr {
        return;
    }
    let u = Some(r.vertex);
    if !r.extremal {
        rec.fail("extremality", u, format!("ecc {} != d_u {}", r.ecc, r.d_u));
        return;
    }
    let threshold = tol.pdr_threshold(dec.lambda0());
    let levels = r.levels().expect("distance partition quotient is tridiagonal");
    let fourier = r.predistance.level_numbers();
    for (i, (l, f)) in levels.iter().zip(&fourier).enumerate() {
        rec.check("sum_rule", u, (l.sum() - dec.lambda0()).abs(), threshold, || format!("a*_{i} + b*_{i} + c*_{i} = λ0"));
        let diff = (l.a - f.a).abs().max((l.b - f.b).abs()).max((l.c - f.c).abs());
        rec.check("fourier_coefficients", u, diff, threshold, || format!("recurrence coefficients at level {i}"));
    }
    let total: T = r.predistance.values_at_lambda0.iter().copied().sum();
    rec.check("predistance_total", u, (total - count::<T>(dec.n())).abs(), threshold, || "Σ_i p_i(λ0) = n".into());
}

fn all_pdr_checks<T: Real>(g: &Graph, c: &Classification<T>, tol: &Tolerances<T>, rec: &mut Recorder) -> Result<()> {
    let dec = &c.decomposition;
    let alpha = &dec.perron;
    for u in 0..g.n() {
        let nb = g.neighbors(u);
        if let Some(&first) = nb.first() {
            for &w in nb {
                rec.check("neighbor_perron", Some(u), (alpha[w] - alpha[first]).abs(), tol.perron, || {
                    format!("α_{first} = α_{w} for common neighbor {u}")
                });
            }
        }
    }
    let mut levels: Vec<T> = Vec::new();
    for &a in alpha {
        if !levels.iter().any(|&b| (a - b).abs() <= tol.perron) {
            levels.push(a);
        }
    }
    if levels.len() > 2 {
        rec.fail("perron_levels", None, format!("Perron vector takes {} values", levels.len()));
    }
    match (c.verdict, c.walk_regularity) {
        (Verdict::DistanceRegular, WalkRegularity::WalkRegular) => {}
        (Verdict::DistanceBiregular, WalkRegularity::WalkRegular | WalkRegularity::WalkBiregular) => {}
        (v, w) => rec.fail("walk_regularity", None, format!("{} graph is {}", v.as_str(), w.as_str())),
    }
    for (u, v) in g.edges() {
        for l in 0..=AUDIT_WALK_LENGTH {
            let res = walk_formula_check(g, dec, u, v, l, tol)?;
            if !res.passes() {
                rec.fail("walk_formula", Some(u), format!("edge ({u},{v}), l = {l}: {res:?}"));
            }
        }
    }
    for u in 0..g.n() {
        match eq6_consistency(g, dec, u, tol) {
            Ok(res) => {
                let worst = res.iter().flatten().fold(T::zero(), |m, &x| m.max(x));
                rec.check("pseudo_vs_standard", Some(u), worst, tol.pdr_threshold(dec.lambda0()), || "pseudo/standard intersection numbers".into());
            }
            Err(Error::Precondition(msg)) => rec.fail("pseudo_vs_standard", Some(u), msg),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_connected, generate_named};

    #[test]
    fn catalog_is_clean() {
        for (name, params) in [
            ("petersen", vec![]),
            ("cycle", vec![7]),
            ("hypercube", vec![3]),
            ("complete_bipartite", vec![2, 5]),
            ("path", vec![5]),
        ] {
            let g = generate_named(name, &params).unwrap();
            let audit = audit_graph::<f64>(&g, &Tolerances::default()).unwrap();
            assert!(audit.is_clean(), "{name}: {:?}", audit.violations);
        }
    }

    #[test]
    fn order_four_corpus_is_clean() {
        for g in enumerate_connected(4).unwrap() {
            let audit = audit_graph::<f64>(&g, &Tolerances::default()).unwrap();
            assert!(audit.is_clean(), "{g:?}: {:?}", audit.violations);
        }
    }

    #[test]
    fn too_strict_tolerance_is_reported() {
        let g = generate_named("path", &[6]).unwrap();
        let tol = Tolerances { num: 0.0, ..Tolerances::<f64>::default() };
        let audit = audit_graph(&g, &tol).unwrap();
        assert!(!audit.is_clean());
    }
}
