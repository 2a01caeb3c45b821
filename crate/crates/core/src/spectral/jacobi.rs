//! Cyclic Jacobi iteration for real symmetric matrices.

use super::Matrix;
use crate::{Error, Result};

/// Converged when the off-diagonal Frobenius norm drops below this fraction
/// of the full Frobenius norm.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    let n = m.order();
    if !m.is_symmetric(1e-9 * m.max_abs().max(1.0)) {
        return Err(Error::invalid("Jacobi iteration needs a symmetric matrix"));
    }
    let mut a = m.data().to_vec();
    let target = OFF_DIAGONAL_TOLERANCE * m.frobenius_norm();
    let mut sweeps = 0;
    while off_diagonal_norm(&a, n) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                order: n,
                iterations: sweeps,
                unresolved: n,
                subdiagonal: off_diagonal_norm(&a, n),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}
