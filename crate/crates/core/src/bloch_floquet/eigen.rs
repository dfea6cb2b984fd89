//! Hermitian eigensolvers.
//!
//! [`Solver::Jacobi`] runs cyclic Jacobi on the real symmetric embedding
//! `[[A, -B], [B, A]]` of `M = A + iB`; every eigenvalue of `M` appears twice
//! there and one copy of each pair is kept. Real input skips the embedding.
//! This is the reference solver and the only one that returns eigenvectors.
//!
//! [`Solver::Tridiagonal`] reduces `M` to real symmetric tridiagonal form with
//! Householder reflections and finishes with implicit QL. It only produces
//! eigenvalues and is roughly an order of magnitude faster, which matters for
//! phase-grid sweeps.

use num_complex::Complex64;

use super::fiber::FiberMatrix;
use crate::error::{Error, Result};

/// Maximum accepted `|M_jk - conj(M_kj)|`.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

const MAX_SWEEPS: usize = 60;
const MAX_QL_ITERATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solver {
    #[default]
    Jacobi,
    Tridiagonal,
}

/// Sorted eigenvalues with an a-posteriori bound on their absolute error.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub error_bound: f64,
}

/// Eigenvalues in nondecreasing order with matching unit eigenvectors.
/// Within a degenerate cluster the vectors need not be orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
    pub error_bound: f64,
}

/// Sorted eigenvalues of a Hermitian matrix, by cyclic Jacobi.
pub fn eigenvalues(m: &FiberMatrix) -> Result<Vec<f64>> {
    Ok(solve(m, Solver::Jacobi)?.values)
}

pub fn solve(m: &FiberMatrix, solver: Solver) -> Result<Spectrum> {
    let m = hermitian_part(m)?;
    match solver {
        Solver::Jacobi => {
            let (mut a, n, embedded) = real_form(&m);
            let off = jacobi(&mut a, n, None)?;
            let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            values.sort_by(f64::total_cmp);
            if embedded {
                values = values.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect();
            }
            Ok(Spectrum {
                error_bound: off + rounding_bound(&m),
                values,
            })
        }
        Solver::Tridiagonal => {
            let (mut d, mut e) = householder_tridiagonal(&m);
            tridiagonal_ql(&mut d, &mut e)?;
            d.sort_by(f64::total_cmp);
            Ok(Spectrum {
                values: d,
                error_bound: rounding_bound(&m),
            })
        }
    }
}

/// Eigenpairs by cyclic Jacobi.
pub fn eigh(m: &FiberMatrix) -> Result<EigenDecomposition> {
    let m = hermitian_part(m)?;
    let (mut a, n, embedded) = real_form(&m);
    let mut v = identity(n);
    let off = jacobi(&mut a, n, Some(&mut v))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let q = m.size();
    let picks: Vec<usize> = if embedded {
        order.chunks(2).map(|p| p[0]).collect()
    } else {
        order
    };
    let mut values = Vec::with_capacity(q);
    let mut vectors = Vec::with_capacity(q);
    for col in picks {
        values.push(a[col * n + col]);
        let vec: Vec<Complex64> = if embedded {
            (0..q)
                .map(|r| Complex64::new(v[r * n + col], v[(r + q) * n + col]))
                .collect()
        } else {
            (0..q)
                .map(|r| Complex64::new(v[r * n + col], 0.0))
                .collect()
        };
        let norm = vec.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        vectors.push(vec.into_iter().map(|z| z / norm).collect());
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        error_bound: off + rounding_bound(&m),
    })
}

fn rounding_bound(m: &FiberMatrix) -> f64 {
    32.0 * m.size() as f64 * f64::EPSILON * m.frobenius_norm().max(f64::MIN_POSITIVE)
}

/// Validates the Hermitian property and returns `(M + M*)/2`.
fn hermitian_part(m: &FiberMatrix) -> Result<FiberMatrix> {
    if m.entries()
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::NonFinite("matrix entry"));
    }
    let asymmetry = m.hermitian_defect();
    if asymmetry > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian { asymmetry });
    }
    if asymmetry == 0.0 {
        return Ok(m.clone());
    }
    let n = m.size();
    let mut h = m.clone();
    for j in 0..n {
        for k in 0..n {
            h.set(j, k, 0.5 * (m.get(j, k) + m.get(k, j).conj()));
        }
    }
    Ok(h)
}

/// Row-major real symmetric matrix equivalent to `m`, its order, and whether
/// the complex embedding was needed.
fn real_form(m: &FiberMatrix) -> (Vec<f64>, usize, bool) {
    let q = m.size();
    if m.is_real() {
        return (m.entries().iter().map(|z| z.re).collect(), q, false);
    }
    let n = 2 * q;
    let mut a = vec![0.0; n * n];
    for j in 0..q {
        for k in 0..q {
            let z = m.get(j, k);
            a[j * n + k] = z.re;
            a[(j + q) * n + (k + q)] = z.re;
            a[j * n + (k + q)] = -z.im;
            a[(j + q) * n + k] = z.im;
        }
    }
    (a, n, true)
}

fn identity(n: usize) -> Vec<f64> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    v
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

/// Cyclic Jacobi on a full symmetric row-major matrix. On return the diagonal
/// holds the eigenvalues; the result is the remaining off-diagonal Frobenius
/// norm, which bounds the eigenvalue error by Weyl's inequality.
fn jacobi(a: &mut [f64], n: usize, mut v: Option<&mut Vec<f64>>) -> Result<f64> {
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n <= 1 || scale == 0.0 {
        return Ok(0.0);
    }
    let target = f64::EPSILON * scale;
    for sweep in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(a, n);
        if off <= target {
            return Ok(off);
        }
        // Early sweeps skip rotations that would barely move the matrix.
        let threshold = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let negligible = 100.0 * apq.abs();
                if sweep > 3
                    && app.abs() + negligible == app.abs()
                    && aqq.abs() + negligible == aqq.abs()
                {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                if apq.abs() <= threshold || apq == 0.0 {
                    continue;
                }
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                if let Some(v) = v.as_deref_mut() {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = vrp - s * (vrq + tau * vrp);
                        v[r * n + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    let off = off_diagonal_norm(a, n);
    if off <= 1e3 * target {
        Ok(off)
    } else {
        Err(Error::NotConverged { sweeps: MAX_SWEEPS })
    }
}

/// Reduces a Hermitian matrix to real symmetric tridiagonal form. Returns the
/// diagonal and the magnitudes of the subdiagonal (last entry zero).
fn householder_tridiagonal(m: &FiberMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.size();
    let mut a: Vec<Complex64> = m.entries().to_vec();
    let mut sub = vec![0.0; n];
    let zero = Complex64::new(0.0, 0.0);
    let mut v = vec![zero; n];
    let mut p = vec![zero; n];
    for k in 0..n.saturating_sub(1) {
        let len = n - k - 1;
        let col = |a: &[Complex64], i: usize| a[(k + 1 + i) * n + k];
        let alpha = (0..len).map(|i| col(&a, i).norm_sqr()).sum::<f64>().sqrt();
        if len == 1 || alpha == 0.0 {
            sub[k] = col(&a, 0).norm();
            continue;
        }
        let x0 = col(&a, 0);
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        for (i, vi) in v[..len].iter_mut().enumerate() {
            *vi = col(&a, i);
        }
        v[0] += phase * alpha;
        let vnorm2: f64 = v[..len].iter().map(|z| z.norm_sqr()).sum();
        let beta = 2.0 / vnorm2;
        // p = beta A22 v
        for i in 0..len {
            let row = &a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + n];
            p[i] = beta
                * row
                    .iter()
                    .zip(&v[..len])
                    .map(|(x, y)| x * y)
                    .sum::<Complex64>();
        }
        let vp: Complex64 = v[..len]
            .iter()
            .zip(&p[..len])
            .map(|(x, y)| x.conj() * y)
            .sum();
        let kk = 0.5 * beta * vp.re;
        for i in 0..len {
            p[i] -= kk * v[i];
        }
        for i in 0..len {
            let (vi, wi) = (v[i], p[i]);
            let row = &mut a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + n];
            for (j, x) in row.iter_mut().enumerate() {
                *x -= vi * p[j].conj() + wi * v[j].conj();
            }
        }
        sub[k] = alpha;
    }
    let diag = (0..n).map(|i| a[i * n + i].re).collect();
    sub[n - 1] = 0.0;
    (diag, sub)
}

/// Implicit QL on a symmetric tridiagonal matrix; `e[i]` couples `i` and
/// `i + 1`. Eigenvalues are left in `d`, unsorted.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NotConverged {
                    sweeps: MAX_QL_ITERATIONS,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0f64, 1.0f64, 0.0f64);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
