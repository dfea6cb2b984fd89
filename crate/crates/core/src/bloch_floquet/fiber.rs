use num_complex::Complex64;

use super::potential::PeriodicPotential;
use crate::error::{Error, Result};

/// Dense `q × q` complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberMatrix {
    size: usize,
    entries: Vec<Complex64>,
}

impl FiberMatrix {
    pub fn zeros(size: usize) -> Self {
        FiberMatrix {
            size,
            entries: vec![Complex64::new(0.0, 0.0); size * size],
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let size = rows.len();
        if size == 0 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidParameter(
                "matrix must be square and nonempty".into(),
            ));
        }
        Ok(FiberMatrix {
            size,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.size + col] = value;
    }

    fn add(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.size + col] += value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `max |M_jk - conj(M_kj)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.size;
        let mut worst = 0.0f64;
        for j in 0..n {
            for k in j..n {
                worst = worst.max((self.get(j, k) - self.get(k, j).conj()).norm());
            }
        }
        worst
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `M v` for a complex vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.size)
            .map(|j| {
                self.entries[j * self.size..(j + 1) * self.size]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// `e^{2πiφ}`, exact at multiples of a quarter turn so that periodic and
/// antiperiodic fibers come out real.
pub fn unit_phase(phi: f64) -> Complex64 {
    let t = phi.rem_euclid(1.0);
    let quarter = t * 4.0;
    if quarter.fract() == 0.0 {
        return match quarter as u8 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let (s, c) = (std::f64::consts::TAU * t).sin_cos();
    Complex64::new(c, s)
}

/// Fiber matrix of the periodic operator `Δ + V` at total Floquet phase `φ`.
///
/// Each nearest-neighbor bond of the cell contributes to both `(a, b)` and
/// `(b, a)` in the same step. A bond leaving the cell through the face
/// `n_j = p_j - 1` wraps to `n_j = 0` with phase `e^{2πiφ_j}`. Contributions
/// are accumulated, never overwritten, so `p_j = 1` yields `2cos(2πφ_j)` on the
/// diagonal and `p_j = 2` yields `1 + e^{-2πiφ_j}` off it. The result is
/// exactly Hermitian.
pub fn build_fiber(v: &PeriodicPotential, phase: &[f64]) -> Result<FiberMatrix> {
    if phase.len() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            found: phase.len(),
        });
    }
    if phase.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("phase"));
    }
    let q = v.cell_size();
    let periods = v.periods();
    let twists: Vec<Complex64> = phase.iter().map(|&phi| unit_phase(phi)).collect();
    let one = Complex64::new(1.0, 0.0);
    let mut h = FiberMatrix::zeros(q);
    for idx in 0..q {
        let site = v.site(idx);
        for j in 0..v.dim() {
            let mut next = site;
            let hop = if site[j] + 1 < periods[j] {
                next[j] += 1;
                one
            } else {
                next[j] = 0;
                twists[j]
            };
            let other = v.index(&next[..v.dim()]);
            // (Hψ)(n) picks up ψ(n + e_j) = hop · ψ(other).
            h.add(idx, other, hop);
            h.add(other, idx, hop.conj());
        }
    }
    for (idx, &value) in v.cell().iter().enumerate() {
        h.add(idx, idx, Complex64::new(value, 0.0));
    }
    Ok(h)
}
