//! Eigenvalues of general real matrices.
//!
//! Householder reduction to upper Hessenberg form followed by Francis
//! double-shift QR with deflation. Real eigenvalues come out of 1x1 blocks
//! with an imaginary part of exactly zero; 2x2 blocks with a negative
//! discriminant give conjugate pairs.

use num_complex::Complex64;

use super::Matrix;
use crate::{Error, Result};

/// QR sweeps allowed per unit of order before giving up.
pub const SWEEPS_PER_ORDER: usize = 100;

fn reduce_to_hessenberg(a: &mut [Vec<f64>]) {
    let n = a.len();
    if n < 3 {
        return;
    }
    let mut v = vec![0.0; n];
    for col in 0..n - 2 {
        let norm = (col + 1..n).map(|i| a[i][col] * a[i][col]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let head = a[col + 1][col];
        let alpha = if head > 0.0 { -norm } else { norm };
        for i in col + 1..n {
            v[i] = a[i][col];
        }
        v[col + 1] -= alpha;
        let vnorm2: f64 = (col + 1..n).map(|i| v[i] * v[i]).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // A <- H A with H = I - 2 v v^T / |v|^2
        for j in col..n {
            let dot: f64 = (col + 1..n).map(|i| v[i] * a[i][j]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in col + 1..n {
                a[i][j] -= f * v[i];
            }
        }
        // A <- A H
        for row in a.iter_mut() {
            let dot: f64 = (col + 1..n).map(|i| row[i] * v[i]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in col + 1..n {
                row[i] -= f * v[i];
            }
        }
        a[col + 1][col] = alpha;
        for row in a.iter_mut().skip(col + 2) {
            row[col] = 0.0;
        }
    }
}

fn with_sign(magnitude: f64, sign_of: f64) -> f64 {
    if sign_of >= 0.0 {
        magnitude.abs()
    } else {
        -magnitude.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix. Returns
/// `(re, im)` per eigenvalue.
fn hessenberg_qr(a: &mut [Vec<f64>]) -> Result<Vec<(f64, f64)>> {
    let n = a.len();
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[i][j].abs();
        }
    }
    let cap = SWEEPS_PER_ORDER * n.max(1);
    let mut total = 0usize;
    let mut its = 0usize;
    let mut shift = 0.0;
    let mut nn = n as isize - 1;
    while nn >= 0 {
        let hi = nn as usize;
        let mut l = hi;
        while l >= 1 {
            let mut s = a[l - 1][l - 1].abs() + a[l][l].abs();
            if s == 0.0 {
                s = anorm;
            }
            if a[l][l - 1].abs() + s == s {
                a[l][l - 1] = 0.0;
                break;
            }
            l -= 1;
        }
        let mut x = a[hi][hi];
        if l == hi {
            wr[hi] = x + shift;
            wi[hi] = 0.0;
            nn -= 1;
            its = 0;
            continue;
        }
        let mut y = a[hi - 1][hi - 1];
        let mut w = a[hi][hi - 1] * a[hi - 1][hi];
        if l == hi - 1 {
            let p = 0.5 * (y - x);
            let q = p * p + w;
            let mut z = q.abs().sqrt();
            x += shift;
            if q >= 0.0 {
                z = p + with_sign(z, p);
                wr[hi - 1] = x + z;
                wr[hi] = if z != 0.0 { x - w / z } else { x + z };
                wi[hi - 1] = 0.0;
                wi[hi] = 0.0;
            } else {
                wr[hi - 1] = x + p;
                wr[hi] = x + p;
                wi[hi - 1] = -z;
                wi[hi] = z;
            }
            nn -= 2;
            its = 0;
            continue;
        }

        if total >= cap {
            return Err(Error::NoConvergence {
                order: n,
                iterations: total,
                unresolved: hi + 1,
                subdiagonal: a[hi][hi - 1],
            });
        }
        if its > 0 && its.is_multiple_of(10) {
            // exceptional shift
            shift += x;
            for i in 0..=hi {
                a[i][i] -= x;
            }
            let s = a[hi][hi - 1].abs() + a[hi - 1][hi - 2].abs();
            x = 0.75 * s;
            y = x;
            w = -0.4375 * s * s;
        }
        its += 1;
        total += 1;

        let (mut p, mut q, mut r);
        let mut m = hi - 2;
        loop {
            let z = a[m][m];
            let rr = x - z;
            let ss = y - z;
            p = (rr * ss - w) / a[m + 1][m] + a[m][m + 1];
            q = a[m + 1][m + 1] - z - rr - ss;
            r = a[m + 2][m + 1];
            let s = p.abs() + q.abs() + r.abs();
            p /= s;
            q /= s;
            r /= s;
            if m == l {
                break;
            }
            let u = a[m][m - 1].abs() * (q.abs() + r.abs());
            let v = p.abs() * (a[m - 1][m - 1].abs() + z.abs() + a[m + 1][m + 1].abs());
            if u + v == v {
                break;
            }
            m -= 1;
        }
        for i in m + 2..=hi {
            a[i][i - 2] = 0.0;
            if i != m + 2 {
                a[i][i - 3] = 0.0;
            }
        }
        let mut k = m;
        while k < hi {
            let mut scale = 0.0;
            if k != m {
                p = a[k][k - 1];
                q = a[k + 1][k - 1];
                r = if k != hi - 1 { a[k + 2][k - 1] } else { 0.0 };
                scale = p.abs() + q.abs() + r.abs();
                if scale != 0.0 {
                    p /= scale;
                    q /= scale;
                    r /= scale;
                }
            }
            let s = with_sign((p * p + q * q + r * r).sqrt(), p);
            if s != 0.0 {
                if k == m {
                    if l != m {
                        a[k][k - 1] = -a[k][k - 1];
                    }
                } else {
                    a[k][k - 1] = -s * scale;
                }
                p += s;
                let xx = p / s;
                let yy = q / s;
                let zz = r / s;
                q /= p;
                r /= p;
                for j in k..=hi {
                    let mut pp = a[k][j] + q * a[k + 1][j];
                    if k != hi - 1 {
                        pp += r * a[k + 2][j];
                        a[k + 2][j] -= pp * zz;
                    }
                    a[k + 1][j] -= pp * yy;
                    a[k][j] -= pp * xx;
                }
                let upper = hi.min(k + 3);
                for row in a.iter_mut().take(upper + 1).skip(l) {
                    let mut pp = xx * row[k] + yy * row[k + 1];
                    if k != hi - 1 {
                        pp += zz * row[k + 2];
                        row[k + 2] -= pp * r;
                    }
                    row[k + 1] -= pp * q;
                    row[k] -= pp;
                }
            }
            k += 1;
        }
    }
    Ok(wr.into_iter().zip(wi).collect())
}

/// An eigenvalue as produced by the QR iteration. `real` is set iff the
/// value came out of a 1x1 block or a real 2x2 split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawEigenvalue {
    pub value: Complex64,
    pub real: bool,
}

/// Vertex sets of the strongly connected components of the digraph with an
/// edge `i -> j` wherever `m[i][j] != 0`.
///
/// Ordering the components topologically makes `m` block upper triangular,
/// so its eigenvalues are those of the diagonal blocks. Splitting first keeps
/// exact eigenvalues of 1x1 blocks and avoids running QR on defective
/// triangular parts, where rounding would scatter a repeated eigenvalue.
pub fn irreducible_blocks(m: &Matrix) -> Vec<Vec<usize>> {
    struct Tarjan<'a> {
        m: &'a Matrix,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        blocks: Vec<Vec<usize>>,
    }

    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for w in 0..self.m.order() {
                if w == v || self.m[(v, w)] == 0.0 {
                    continue;
                }
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
            }
            if Some(self.low[v]) == self.index[v] {
                let mut block = Vec::new();
                while let Some(w) = self.stack.pop() {
                    self.on_stack[w] = false;
                    block.push(w);
                    if w == v {
                        break;
                    }
                }
                block.sort_unstable();
                self.blocks.push(block);
            }
        }
    }

    let n = m.order();
    let mut t = Tarjan {
        m,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        blocks: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    t.blocks
}

/// All eigenvalues of a square real matrix, unsorted.
pub fn raw_eigenvalues(m: &Matrix) -> Result<Vec<RawEigenvalue>> {
    let mut out = Vec::with_capacity(m.order());
    for block in irreducible_blocks(m) {
        if let [v] = block[..] {
            out.push(RawEigenvalue {
                value: Complex64::new(m[(v, v)], 0.0),
                real: true,
            });
            continue;
        }
        let mut a: Vec<Vec<f64>> = block.iter().map(|&i| block.iter().map(|&j| m[(i, j)]).collect()).collect();
        reduce_to_hessenberg(&mut a);
        out.extend(hessenberg_qr(&mut a)?.into_iter().map(|(re, im)| RawEigenvalue {
            value: Complex64::new(re, im),
            real: im == 0.0,
        }));
    }
    Ok(out)
}

/// Solves `(M - shift I) x = b` in place by LU with partial pivoting.
fn solve_shifted(m: &Matrix, shift: Complex64, b: &mut [Complex64]) {
    let n = m.order();
    let mut lu: Vec<Complex64> = m.data().iter().map(|&x| Complex64::new(x, 0.0)).collect();
    for i in 0..n {
        lu[i * n + i] -= shift;
    }
    let tiny = 1e-300_f64.max(f64::EPSILON * m.frobenius_norm() * 1e-3);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| lu[x * n + col].norm().total_cmp(&lu[y * n + col].norm()))
            .unwrap();
        if pivot != col {
            for j in 0..n {
                lu.swap(col * n + j, pivot * n + j);
            }
            b.swap(col, pivot);
        }
        if lu[col * n + col].norm() < tiny {
            lu[col * n + col] = Complex64::new(tiny, 0.0);
        }
        let d = lu[col * n + col];
        for i in col + 1..n {
            let f = lu[i * n + col] / d;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col..n {
                let t = lu[col * n + j];
                lu[i * n + j] -= f * t;
            }
            let t = b[col];
            b[i] -= f * t;
        }
    }
    for i in (0..n).rev() {
        let mut acc = b[i];
        for j in i + 1..n {
            acc -= lu[i * n + j] * b[j];
        }
        b[i] = acc / lu[i * n + i];
    }
}

/// Unit eigenvector for `lambda` by inverse iteration.
pub fn eigenvector(m: &Matrix, lambda: Complex64) -> Vec<Complex64> {
    let n = m.order();
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);
    let shift = lambda + Complex64::new(scale * 1e-10, scale * 1e-11);
    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0 + (i as f64 * 0.618_033_988_7).fract(), 0.0))
        .collect();
    for _ in 0..3 {
        solve_shifted(m, shift, &mut v);
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            break;
        }
        for z in v.iter_mut() {
            *z /= norm;
        }
    }
    v
}

/// `|Mv - lambda v|`.
pub fn residual(m: &Matrix, lambda: Complex64, v: &[Complex64]) -> f64 {
    let n = m.order();
    (0..n)
        .map(|i| {
            let mv: Complex64 = m.row(i).iter().zip(v).map(|(&a, &x)| x * a).sum();
            (mv - lambda * v[i]).norm_sqr()
        })
        .sum::<f64>()
        .sqrt()
}
