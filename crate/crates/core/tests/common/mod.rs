#![allow(dead_code)]

use hausmeas::bloch_floquet::{FiberMatrix, PeriodicPotential};
use hausmeas::compact_sets::{CompactSet, IntervalSet};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Up to `max_components` random intervals (some degenerate) in `[-5, 5]`,
/// or a random point set about half of the time when `allow_points`.
pub fn random_set(rng: &mut ChaCha8Rng, max_components: usize, allow_points: bool) -> CompactSet {
    let k = rng.gen_range(1..=max_components);
    if allow_points && rng.gen_bool(0.3) {
        let pts = (0..k).map(|_| rng.gen_range(-5.0..5.0)).collect();
        return CompactSet::points(pts).unwrap();
    }
    let pairs: Vec<(f64, f64)> = (0..k)
        .map(|_| {
            let lo: f64 = rng.gen_range(-5.0..5.0);
            let len = if rng.gen_bool(0.15) {
                0.0
            } else {
                rng.gen_range(0.0..1.5)
            };
            (lo, lo + len)
        })
        .collect();
    CompactSet::intervals(&pairs).unwrap()
}

pub fn random_interval_set(rng: &mut ChaCha8Rng, max_components: usize) -> IntervalSet {
    random_set(rng, max_components, false).to_interval_set()
}

pub fn random_potential_1d(rng: &mut ChaCha8Rng, max_period: usize) -> PeriodicPotential {
    let p = rng.gen_range(1..=max_period);
    let cell = (0..p).map(|_| rng.gen_range(-3.0..3.0)).collect();
    PeriodicPotential::new(vec![p], cell).unwrap()
}

pub fn random_potential_2d(rng: &mut ChaCha8Rng, max_period: usize) -> PeriodicPotential {
    let p = [rng.gen_range(1..=max_period), rng.gen_range(1..=max_period)];
    let cell = (0..p[0] * p[1]).map(|_| rng.gen_range(-3.0..3.0)).collect();
    PeriodicPotential::new(p.to_vec(), cell).unwrap()
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, q: usize) -> FiberMatrix {
    let mut m = FiberMatrix::zeros(q);
    for j in 0..q {
        m.set(j, j, Complex64::new(rng.gen_range(-2.0..2.0), 0.0));
        for k in j + 1..q {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m.set(j, k, z);
            m.set(k, j, z.conj());
        }
    }
    m
}

/// Roots of the characteristic polynomial of a small Hermitian matrix.
/// Coefficients come from the Faddeev-LeVerrier recursion and roots from
/// Durand-Kerner iteration, so no eigensolver code is shared.
pub fn charpoly_eigenvalues(m: &FiberMatrix) -> Vec<f64> {
    let n = m.size();
    let zero = Complex64::new(0.0, 0.0);
    let mul = |a: &[Complex64], b: &[Complex64]| {
        let mut c = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    c[i * n + j] += a[i * n + k] * b[k * n + j];
                }
            }
        }
        c
    };
    let a = m.entries().to_vec();
    // coeffs[k] multiplies λ^k; monic.
    let mut coeffs = vec![zero; n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = vec![zero; n * n];
    for k in 1..=n {
        let mut next = mul(&a, &mk);
        for i in 0..n {
            next[i * n + i] += coeffs[n - k + 1];
        }
        mk = next;
        let amk = mul(&a, &mk);
        let trace: Complex64 = (0..n).map(|i| amk[i * n + i]).sum();
        coeffs[n - k] = -trace / k as f64;
    }
    let eval = |z: Complex64| coeffs.iter().rev().fold(zero, |acc, &c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..500 {
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| {
                    acc * (roots[i] - roots[j])
                });
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
    }
    let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
    re.sort_by(f64::total_cmp);
    re
}
