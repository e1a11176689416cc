//! Orthogonal polynomials of the local spectral measure at a vertex.
//!
//! The measure puts mass `m_u(λ_i)` on each distinct eigenvalue `λ_i`, so
//! `<f, g>_u = Σ_i m_u(λ_i) f(λ_i) g(λ_i) = (f(A) g(A))_uu`. The predistance
//! polynomials `p_0, .., p_{d_u}` are orthogonal for it, with `deg p_i = i`
//! and `||p_i||_u^2 = α_u^2 p_i(λ0)`.

mod polynomial;

pub use polynomial::Polynomial;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{lit, Real};
use crate::spectral::LocalSpectrum;

/// Full local inner product over every distinct eigenvalue.
pub fn local_inner_product<T: Real>(ls: &LocalSpectrum<T>, f: &Polynomial<T>, g: &Polynomial<T>) -> T {
    ls.eigenvalues
        .iter()
        .zip(&ls.local_mults)
        .map(|(&x, &m)| m * f.eval(x) * g.eval(x))
        .sum()
}

/// One row of `x p_i = b*_{i-1} p_{i-1} + a*_i p_i + c*_{i+1} p_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceRow<T> {
    pub b_prev: T,
    pub a: T,
    pub c_next: T,
}

/// Intersection-number triple of one level: `c_i`, `a_i`, `b_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelNumbers<T> {
    pub c: T,
    pub a: T,
    pub b: T,
}

impl<T: Real> LevelNumbers<T> {
    pub fn sum(&self) -> T {
        self.c + self.a + self.b
    }
}

#[derive(Debug, Clone)]
pub struct PredistanceSystem<T> {
    pub vertex: usize,
    pub polys: Vec<Polynomial<T>>,
    pub recurrence: Vec<RecurrenceRow<T>>,
    pub values_at_lambda0: Vec<T>,
    pub norms_sq: Vec<T>,
    /// Support of the local measure (`μ_0 > .. > μ_{d_u}`) and its weights.
    pub points: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> PredistanceSystem<T> {
    pub fn d_u(&self) -> usize {
        self.polys.len() - 1
    }

    /// Inner product restricted to the support (identical to the full one).
    pub fn inner(&self, f: &Polynomial<T>, g: &Polynomial<T>) -> T {
        self.points.iter().zip(&self.weights).map(|(&x, &w)| w * f.eval(x) * g.eval(x)).sum()
    }

    /// The recurrence read as intersection numbers per level: `a_i` from row
    /// `i`, `b_i` from row `i + 1` and `c_i` from row `i - 1`, with
    /// `c_0 = b_{d_u} = 0`.
    pub fn level_numbers(&self) -> Vec<LevelNumbers<T>> {
        let d = self.d_u();
        (0..=d)
            .map(|i| LevelNumbers {
                c: if i == 0 { T::zero() } else { self.recurrence[i - 1].c_next },
                a: self.recurrence[i].a,
                b: if i == d { T::zero() } else { self.recurrence[i + 1].b_prev },
            })
            .collect()
    }

    /// `||x p_i - (b*_{i-1} p_{i-1} + a*_i p_i + c*_{i+1} p_{i+1})||_u` and
    /// `||x p_i||_u`.
    pub fn recurrence_residual(&self, i: usize) -> (T, T) {
        let row = self.recurrence[i];
        let xp = self.polys[i].mul_x();
        let mut rhs = self.polys[i].scaled(row.a);
        if i > 0 {
            rhs = rhs.add_scaled(&self.polys[i - 1], row.b_prev);
        }
        if i < self.d_u() {
            rhs = rhs.add_scaled(&self.polys[i + 1], row.c_next);
        }
        let diff = xp.add_scaled(&rhs, -T::one());
        (self.inner(&diff, &diff).max(T::zero()).sqrt(), self.inner(&xp, &xp).sqrt())
    }
}

/// Builds `p_0^u, .., p_{d_u}^u` by Gram–Schmidt on the local measure.
///
/// Each monic `q_k` starts from `x q_{k-1}` and is orthogonalized twice against
/// the earlier ones; `p_k = α_u^2 q_k(λ0) / ||q_k||^2 · q_k`.
pub fn build_predistance<T: Real>(ls: &LocalSpectrum<T>, lambda0: T, alpha_u: T) -> Result<PredistanceSystem<T>> {
    let points = ls.values();
    let weights = ls.weights();
    let d_u = ls.d_u();
    let inner = |f: &Polynomial<T>, g: &Polynomial<T>| -> T {
        points.iter().zip(&weights).map(|(&x, &w)| w * f.eval(x) * g.eval(x)).sum()
    };
    let rank_floor = lit::<T>(1e3) * T::epsilon();

    let mut monic: Vec<Polynomial<T>> = vec![Polynomial::constant(T::one())];
    let mut monic_norms: Vec<T> = vec![inner(&monic[0], &monic[0])];
    for k in 1..=d_u {
        let start = monic[k - 1].mul_x();
        let start_norm = inner(&start, &start);
        let mut q = start;
        for _pass in 0..2 {
            for j in 0..k {
                let h = inner(&q, &monic[j]) / monic_norms[j];
                q = q.add_scaled(&monic[j], -h);
            }
        }
        let norm = inner(&q, &q);
        if !(norm > rank_floor * start_norm) {
            return Err(Error::IllConditioned { vertex: ls.vertex, degree: k });
        }
        monic.push(q);
        monic_norms.push(norm);
    }

    let alpha_sq = alpha_u * alpha_u;
    let polys: Vec<Polynomial<T>> = monic
        .iter()
        .zip(&monic_norms)
        .map(|(q, &norm)| q.scaled(alpha_sq * q.eval(lambda0) / norm))
        .collect();
    let norms_sq: Vec<T> = polys.iter().map(|p| inner(p, p)).collect();
    let values_at_lambda0 = polys.iter().map(|p| p.eval(lambda0)).collect();

    let recurrence = (0..=d_u)
        .map(|i| {
            let xp = polys[i].mul_x();
            let coeff = |j: usize| inner(&xp, &polys[j]) / norms_sq[j];
            RecurrenceRow {
                b_prev: if i == 0 { T::zero() } else { coeff(i - 1) },
                a: coeff(i),
                c_next: if i == d_u { T::zero() } else { coeff(i + 1) },
            }
        })
        .collect();

    Ok(PredistanceSystem { vertex: ls.vertex, polys, recurrence, values_at_lambda0, norms_sq, points, weights })
}

/// Column `u` of `p(A)`, by Horner's rule on matrix-vector products.
pub fn apply_poly_column<T: Real>(g: &Graph, p: &Polynomial<T>, u: usize) -> Result<Vec<T>> {
    g.check_vertex(u)?;
    let coeffs = p.coeffs();
    let mut y = vec![T::zero(); g.n()];
    y[u] = coeffs[coeffs.len() - 1];
    for &c in coeffs.iter().rev().skip(1) {
        y = g.apply(&y);
        y[u] += c;
    }
    Ok(y)
}
