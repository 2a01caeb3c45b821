//! Tournament matrices, traces of powers and spectra.
//!
//! The tournament matrix of an `n`-vertex tournament is its adjacency matrix
//! with `1/2` on the diagonal, divided by `n`. Cycle densities are read off
//! as `2^len * Trace(A^len)`, which matches the normalized cycle count up to
//! `O(1/n)`. Eigenvalues here are always those of the normalized matrix.

mod eigen;
mod jacobi;
mod matrix;

use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use eigen::{eigenvector, residual, RawEigenvalue, SWEEPS_PER_ORDER};
pub use jacobi::{symmetric_eigenvalues, OFF_DIAGONAL_TOLERANCE};
pub use matrix::Matrix;
pub(crate) use matrix::parse_square as matrix_rows_from_text;

use crate::numfmt::{serialize_opt_sig15, serialize_sig15, sig15};
use crate::tournament::Tournament;
use crate::{Error, Result};

/// Tolerance for the structural checks on complementary and skew matrices.
pub const STRUCTURE_TOLERANCE: f64 = 1e-12;

/// Nonnegative square matrix with `A_ij + A_ji = 1/n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplementaryMatrix(Matrix);

impl ComplementaryMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        let n = m.order();
        if n == 0 {
            return Err(Error::invalid("empty matrix"));
        }
        let target = 1.0 / n as f64;
        for i in 0..n {
            for j in 0..=i {
                let (a, b) = (m[(i, j)], m[(j, i)]);
                if a < 0.0 || b < 0.0 {
                    return Err(Error::Invariant(format!("negative entry at ({i}, {j})")));
                }
                if (a + b - target).abs() > STRUCTURE_TOLERANCE {
                    return Err(Error::Invariant(format!(
                        "A[{i}][{j}] + A[{j}][{i}] = {} differs from 1/{n}",
                        a + b
                    )));
                }
            }
        }
        Ok(ComplementaryMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

/// Real matrix with `A = -A^T` and an exactly zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix(Matrix);

impl SkewMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_skew(STRUCTURE_TOLERANCE) {
            return Err(Error::Invariant("matrix is not skew-symmetric".into()));
        }
        Ok(SkewMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.max_abs()
    }

    /// Row sums `Bj`.
    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.order()).map(|i| self.0.row(i).iter().sum()).collect()
    }
}

impl FromStr for SkewMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewMatrix::new(s.parse()?)
    }
}

/// Eigenvalues of a matrix with a few summary statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Sorted by decreasing real part, then decreasing imaginary part.
    #[serde(with = "complex_list")]
    pub eigenvalues: Vec<Complex64>,
    /// Largest real eigenvalue, if any eigenvalue is real.
    #[serde(serialize_with = "serialize_opt_sig15")]
    pub rho: Option<f64>,
    /// Largest modulus.
    #[serde(serialize_with = "serialize_sig15")]
    pub radius: f64,
    #[serde(with = "complex_one")]
    pub eig_sum: Complex64,
}

mod complex_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    pub(super) struct ReIm {
        #[serde(serialize_with = "serialize_sig15")]
        pub re: f64,
        #[serde(serialize_with = "serialize_sig15")]
        pub im: f64,
    }

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|z| ReIm { re: z.re, im: z.im }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Complex64>, D::Error> {
        let raw: Vec<ReIm> = Vec::deserialize(d)?;
        Ok(raw.into_iter().map(|z| Complex64::new(z.re, z.im)).collect())
    }
}

mod complex_one {
    use super::complex_list::ReIm;
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReIm { re: z.re, im: z.im }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Complex64, D::Error> {
        let z = ReIm::deserialize(d)?;
        Ok(Complex64::new(z.re, z.im))
    }
}

fn sort_spectrum(values: &mut [Complex64]) {
    values.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
}

impl SpectrumReport {
    fn from_raw(raw: Vec<RawEigenvalue>) -> Self {
        let rho = raw
            .iter()
            .filter(|e| e.real)
            .map(|e| e.value.re)
            .max_by(f64::total_cmp);
        let mut eigenvalues: Vec<Complex64> = raw.into_iter().map(|e| e.value).collect();
        sort_spectrum(&mut eigenvalues);
        let radius = eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let eig_sum = eigenvalues.iter().sum();
        SpectrumReport {
            eigenvalues,
            rho,
            radius,
            eig_sum,
        }
    }

    /// Checks that every non-real eigenvalue has its conjugate in the
    /// multiset, up to `tol`.
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        let mut used = vec![false; self.eigenvalues.len()];
        for (i, z) in self.eigenvalues.iter().enumerate() {
            if used[i] || z.im.abs() <= tol {
                used[i] = true;
                continue;
            }
            let partner = (0..self.eigenvalues.len())
                .filter(|&j| j != i && !used[j])
                .find(|&j| (self.eigenvalues[j] - z.conj()).norm() <= tol);
            match partner {
                Some(j) => {
                    used[i] = true;
                    used[j] = true;
                }
                None => return false,
            }
        }
        true
    }

    /// Violations of the spectral facts that hold for every complementary
    /// matrix: real parts are nonnegative, the eigenvalues sum to `1/2`, and
    /// the spectral radius is attained by a positive real eigenvalue.
    pub fn complementary_violations(&self, tol: f64) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(z) = self.eigenvalues.iter().find(|z| z.re < -tol) {
            out.push(format!("eigenvalue {z} has negative real part"));
        }
        if (self.eig_sum - Complex64::new(0.5, 0.0)).norm() > tol {
            out.push(format!("eigenvalue sum {} differs from 1/2", self.eig_sum));
        }
        match self.rho {
            Some(rho) if rho > 0.0 => {
                if self.radius > rho + tol {
                    out.push(format!("radius {} exceeds rho {rho}", self.radius));
                }
            }
            other => out.push(format!("no positive real eigenvalue (rho = {other:?})")),
        }
        if !self.is_conjugate_closed(tol.sqrt()) {
            out.push("spectrum is not closed under conjugation".into());
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serializes")
    }
}

/// Adjacency with `1/2` on the diagonal, divided by `n`.
pub fn tournament_matrix(t: &Tournament) -> ComplementaryMatrix {
    let n = t.order();
    let inv = 1.0 / n as f64;
    let m = Matrix::from_fn(n, |i, j| {
        if i == j {
            0.5 * inv
        } else if t.beats(i, j) {
            inv
        } else {
            0.0
        }
    });
    ComplementaryMatrix(m)
}

/// `B = 2 * (adjacency with 1/2 diagonal) - J`: `+1` for `i -> j`, `-1` for
/// `j -> i`, `0` on the diagonal.
pub fn skew_part(t: &Tournament) -> SkewMatrix {
    let m = Matrix::from_fn(t.order(), |i, j| {
        if i == j {
            0.0
        } else if t.beats(i, j) {
            1.0
        } else {
            -1.0
        }
    });
    SkewMatrix(m)
}

/// `D_n`: `+1` above the diagonal, `-1` below.
pub fn make_dominant(n: usize) -> Result<SkewMatrix> {
    if n == 0 {
        return Err(Error::invalid("D_n needs n >= 1"));
    }
    Ok(SkewMatrix(Matrix::from_fn(n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => 1.0,
        std::cmp::Ordering::Equal => 0.0,
        std::cmp::Ordering::Greater => -1.0,
    })))
}

/// `Trace(M^len)`. Even powers square the half power and take the trace of
/// the product, saving one multiplication.
pub fn trace_power(m: &Matrix, len: u32) -> Result<f64> {
    if len == 0 {
        return Err(Error::invalid("power must be at least 1"));
    }
    if len.is_multiple_of(2) {
        let half = m.pow(len / 2);
        Ok(half.trace_of_product(&half))
    } else {
        Ok(m.pow(len).trace())
    }
}

/// `2^len * Trace(A^len)` for the tournament matrix `A` of `t`.
pub fn trace_density(t: &Tournament, len: u32) -> Result<f64> {
    if len < 3 {
        return Err(Error::invalid(format!("cycle length must be at least 3, got {len}")));
    }
    Ok(2f64.powi(len as i32) * trace_power(tournament_matrix(t).matrix(), len)?)
}

/// Full complex spectrum of a general real matrix.
pub fn eigenvalues(m: &Matrix) -> Result<SpectrumReport> {
    if m.order() == 0 {
        return Err(Error::invalid("empty matrix"));
    }
    Ok(SpectrumReport::from_raw(eigen::raw_eigenvalues(m)?))
}

/// Eigenvalues with unit eigenvectors from inverse iteration, in the same
/// order as [`eigenvalues`].
pub fn eigenpairs(m: &Matrix) -> Result<Vec<(Complex64, Vec<Complex64>)>> {
    let report = eigenvalues(m)?;
    Ok(report
        .eigenvalues
        .into_iter()
        .map(|z| (z, eigenvector(m, z)))
        .collect())
}

/// Eigenvalues of a skew-symmetric matrix, all purely imaginary.
///
/// `B^2` is symmetric negative semidefinite; its eigenvalues are `-a_k^2`,
/// each twice, plus zeros. Pairing consecutive sorted values gives the
/// `+-i a_k` pairs. Real parts are exactly zero.
pub fn skew_spectrum(b: &SkewMatrix) -> Result<Vec<Complex64>> {
    let n = b.order();
    let square = b.matrix().mul(b.matrix());
    let square = Matrix::from_fn(n, |i, j| 0.5 * (square[(i, j)] + square[(j, i)]));
    let mu: Vec<f64> = symmetric_eigenvalues(&square)?
        .into_iter()
        .map(|x| x.min(0.0))
        .collect();
    // Ascending order puts the kernel (if n is odd) last, so consecutive
    // pairs from the front are the +-i a_k pairs.
    let mut values = Vec::with_capacity(n);
    for pair in mu.chunks(2) {
        if let [x, y] = pair {
            let a = (-(x + y) / 2.0).sqrt();
            values.push(Complex64::new(0.0, a));
            values.push(Complex64::new(0.0, -a));
        } else {
            values.push(Complex64::new(0.0, 0.0));
        }
    }
    sort_spectrum(&mut values);
    Ok(values)
}

/// Largest modulus of a skew spectrum.
pub fn skew_spectral_radius(b: &SkewMatrix) -> Result<f64> {
    Ok(skew_spectrum(b)?.iter().map(|z| z.im.abs()).fold(0.0, f64::max))
}

/// Rounds every eigenvalue to 15 significant digits, as written in reports.
pub fn rounded(values: &[Complex64]) -> Vec<Complex64> {
    values.iter().map(|z| Complex64::new(sig15(z.re), sig15(z.im))).collect()
}
