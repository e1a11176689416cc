//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a symmetric matrix, eigenvalues in decreasing order.
/// Column `k` of `vectors` is a unit eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    pub vectors: DenseMatrix<T>,
}

pub fn symmetric_eigen<T: Real>(matrix: &DenseMatrix<T>) -> Result<SymmetricEigen<T>> {
    let n = matrix.n();
    let mut a = matrix.clone();
    let mut v = DenseMatrix::identity(n);
    let frob = a.frobenius();
    let target = T::epsilon() * frob;
    let hundred = lit::<T>(100.0);

    let off_norm = |a: &DenseMatrix<T>| {
        let mut s = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                s += a[(p, q)] * a[(p, q)];
            }
        }
        s.sqrt()
    };

    let mut converged = off_norm(&a) <= target;
    let mut sweep = 0;
    while !converged {
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let g = hundred * apq.abs();
                // once well into the iteration, drop entries below the diagonal's resolution
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = T::zero();
                    a[(q, p)] = T::zero();
                    continue;
                }
                let theta = (aqq - app) / (apq + apq);
                let t = {
                    let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        let new_p = c * akp - s * akq;
                        let new_q = s * akp + c * akq;
                        a[(k, p)] = new_p;
                        a[(p, k)] = new_p;
                        a[(k, q)] = new_q;
                        a[(q, k)] = new_q;
                    }
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        sweep += 1;
        converged = off_norm(&a) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].partial_cmp(&a[(i, i)]).expect("finite eigenvalues"));
    let values = order.iter().map(|&k| a[(k, k)]).collect();
    let mut vectors = DenseMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, k)];
        }
    }
    Ok(SymmetricEigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    fn check_reconstruction<T: Real>(m: &DenseMatrix<T>, tol: T) {
        let eig = symmetric_eigen(m).unwrap();
        let n = m.n();
        let mut rebuilt = DenseMatrix::zeros(n);
        for k in 0..n {
            rebuilt.add_outer(&eig.vectors.column(k), eig.values[k]);
        }
        assert!(rebuilt.max_abs_diff(m) < tol);
        assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn cycle_eigenvalues() {
        for n in 3..12 {
            let g = generate_named("cycle", &[n]).unwrap();
            let eig = symmetric_eigen(&DenseMatrix::<f64>::adjacency(&g)).unwrap();
            let mut expected: Vec<f64> =
                (0..n).map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos()).collect();
            expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (got, want) in eig.values.iter().zip(&expected) {
                assert!((got - want).abs() < 1e-12, "C_{n}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn reconstructs_in_both_precisions() {
        for g in [
            generate_named("petersen", &[]).unwrap(),
            generate_named("hypercube", &[4]).unwrap(),
            generate_named("path", &[9]).unwrap(),
        ] {
            check_reconstruction(&DenseMatrix::<f64>::adjacency(&g), 1e-12);
            check_reconstruction(&DenseMatrix::<f32>::adjacency(&g), 1e-4);
        }
    }

    #[test]
    fn trivial_sizes() {
        let eig = symmetric_eigen(&DenseMatrix::<f64>::zeros(1)).unwrap();
        assert_eq!(eig.values, vec![0.0]);
        assert_eq!(eig.vectors[(0, 0)], 1.0);
    }
}
