//! Acceptance run: one line per criterion, sub-checks indented below it.
//! Exits non-zero when any criterion fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use hausmeas::bloch_floquet::{
    band_spectrum, eigenvalues, eigh, estimate_measure_with_proxy, fiber_eigenvalues,
    kruger_radius, spectral_cover, BandStrategy, CoverSource, FiberMatrix, FiberPipelineOptions,
    Solver,
};
use hausmeas::compact_sets::{fatten, hausdorff_distance, CompactSet, IntervalSet, Tolerance};
use hausmeas::convergence::{
    corollary_criterion, fattened_measure_sequence, semicontinuity_check, ConvergenceOptions,
    Measure1D,
};
use hausmeas::dimension::{dim_bound_direct, dim_bound_last, hausdorff_content_upper, CoverStats};
use hausmeas::models::{
    almost_mathieu, cantor_approximation, convergents, free_potential, padded_unit_grid, unit_grid,
};
use hausmeas_cli::config::golden_terms;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<Vec<Check>, String>;
type Criterion = (&'static str, fn() -> Outcome);

struct Check {
    label: String,
    pass: bool,
    detail: String,
}

fn check(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        label: label.into(),
        pass,
        detail: detail.into(),
    }
}

fn within_time(limit: Duration, start: Instant) -> Check {
    let t = start.elapsed();
    check(
        "runtime",
        t < limit,
        format!("{:.3}s < {:.0}s", t.as_secs_f64(), limit.as_secs_f64()),
    )
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn random_set(rng: &mut ChaCha8Rng) -> CompactSet {
    let k = rng.gen_range(1..=6);
    if rng.gen_bool(0.25) {
        return CompactSet::points((0..k).map(|_| rng.gen_range(-5.0..5.0)).collect()).unwrap();
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

fn grid_directed(a: &IntervalSet, b: &IntervalSet, h: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for iv in a.intervals() {
        let steps = ((iv.hi() - iv.lo()) / h).ceil() as usize;
        for k in 0..=steps {
            let x = (iv.lo() + k as f64 * h).min(iv.hi());
            worst = worst.max(b.distance_to_point(x));
        }
    }
    worst
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let limit = CompactSet::intervals(&[(0.0, 1.0)]).unwrap();
    let seq = (1..=100).map(unit_grid).collect::<Result<Vec<_>, _>>();
    let seq = lift(seq)?;
    let worst_dh = seq
        .iter()
        .map(|rec| (hausdorff_distance(&rec.set, &limit) - 1.0 / (2.0 * rec.n as f64)).abs())
        .fold(0.0, f64::max);
    let report = lift(fattened_measure_sequence(
        &seq,
        &Measure1D::Lebesgue,
        &ConvergenceOptions::default(),
    ))?;
    let worst_mu = report
        .rows
        .iter()
        .map(|r| (r.mu_fattened - (1.0 + 1.0 / r.n as f64)).abs())
        .fold(0.0, f64::max);
    let last = report.summary.final_fattened;

    let padded = lift(
        (1..=100)
            .map(|n| padded_unit_grid(n, 0.5))
            .collect::<Result<Vec<_>, _>>(),
    )?;
    let padded = lift(fattened_measure_sequence(
        &padded,
        &Measure1D::Lebesgue,
        &ConvergenceOptions::default(),
    ))?;
    let raw = padded.summary.final_raw;
    Ok(vec![
        check(
            "d_H(grid_n, [0,1]) = 1/(2n)",
            worst_dh <= 1e-12,
            format!("max err {worst_dh:.2e}"),
        ),
        check(
            "fattened measure = 1 + 1/n",
            worst_mu <= 1e-12,
            format!("max err {worst_mu:.2e}"),
        ),
        check(
            "final fattened within 1e-2 of 1",
            (last - 1.0).abs() <= 1e-2 + 1e-12,
            format!("{last}"),
        ),
        check(
            "padded raw measures tend to 0.5, not 1",
            (raw - 0.5).abs() <= 1e-12 && (raw - 1.0).abs() > 1e-2,
            format!("final raw {raw}"),
        ),
        within_time(Duration::from_secs(1), start),
    ])
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let tol = Tolerance(1e-9);
    let (mut nested, mut monotone, mut least) = (0, 0, 0);
    for _ in 0..1000 {
        let a = random_set(&mut rng);
        let b = random_set(&mut rng);
        let d: f64 = rng.gen_range(0.0..1.0);
        let e: f64 = rng.gen_range(0.0..1.0);

        let twice = lift(lift(fatten(&a, d))?.fatten(e))?;
        let once = lift(fatten(&a, d + e))?;
        if twice.is_subset_of(&once, tol) {
            nested += 1;
        }

        // S ⊆ A: a shrunken copy of every other component.
        let ai = a.to_interval_set();
        let sub: Vec<(f64, f64)> = ai
            .intervals()
            .iter()
            .step_by(2)
            .map(|iv| {
                let t = 0.3 * iv.length();
                (iv.lo() + t, iv.hi() - t)
            })
            .collect();
        let s = lift(CompactSet::intervals(&sub))?;
        if lift(fatten(&s, d))?.is_subset_of(&lift(fatten(&a, d))?, tol) {
            monotone += 1;
        }

        let dh = hausdorff_distance(&a, &b);
        let (ai, bi) = (a.to_interval_set(), b.to_interval_set());
        let covers = |r: f64| -> Result<bool, String> {
            Ok(ai.is_subset_of(&lift(bi.fatten(r))?, tol)
                && bi.is_subset_of(&lift(ai.fatten(r))?, tol))
        };
        let smaller_fails = dh <= 1e-6 || !covers(dh - 1e-6)?;
        if covers(dh)? && smaller_fails {
            least += 1;
        }
    }

    let mut grid_worst: f64 = 0.0;
    for _ in 0..100 {
        let a = random_set(&mut rng);
        let b = random_set(&mut rng);
        let (ai, bi) = (a.to_interval_set(), b.to_interval_set());
        let grid = grid_directed(&ai, &bi, 1e-5).max(grid_directed(&bi, &ai, 1e-5));
        grid_worst = grid_worst.max((grid - hausdorff_distance(&a, &b)).abs());
    }
    Ok(vec![
        check(
            "(A^d)^e within A^(d+e)",
            nested == 1000,
            format!("{nested}/1000"),
        ),
        check(
            "monotone under inclusion",
            monotone == 1000,
            format!("{monotone}/1000"),
        ),
        check(
            "d_H is the least mutual fattening",
            least == 1000,
            format!("{least}/1000"),
        ),
        check(
            "grid oracle",
            grid_worst <= 2e-5,
            format!("max err {grid_worst:.2e} on 100"),
        ),
    ])
}

fn cantor_sequence() -> Result<Vec<hausmeas::convergence::ApproximationRecord>, String> {
    lift(
        (1..=12)
            .map(cantor_approximation)
            .collect::<Result<Vec<_>, _>>(),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let seq = cantor_sequence()?;
    let report = lift(fattened_measure_sequence(
        &seq,
        &Measure1D::Lebesgue,
        &ConvergenceOptions::default(),
    ))?;
    let fat: Vec<f64> = report.rows.iter().map(|r| r.mu_fattened).collect();
    let decreasing = fat.windows(2).all(|w| w[1] < w[0]);
    let last = *fat.last().unwrap();

    let endpoints: Vec<f64> = seq
        .last()
        .unwrap()
        .set
        .to_interval_set()
        .pairs()
        .into_iter()
        .flat_map(|(lo, hi)| [lo, hi])
        .collect();
    let limit = lift(CompactSet::points(endpoints))?;
    let sets: Vec<CompactSet> = seq.iter().map(|r| r.set.clone()).collect();
    let semi = lift(semicontinuity_check(
        &sets,
        &limit,
        &Measure1D::Lebesgue,
        3,
        0.02,
    ))?;

    let verdict = corollary_criterion(&seq, 1e-2);
    let qd_err = verdict
        .rows
        .iter()
        .map(|&(n, v)| (v - (2.0f64 / 3.0).powi(n as i32)).abs())
        .fold(0.0, f64::max);
    Ok(vec![
        check(
            "fattened measures strictly decreasing",
            decreasing,
            format!("{fat:.4?}"),
        ),
        check("final fattened < 0.02", last < 0.02, format!("{last:.6}")),
        check(
            "semicontinuity",
            semi.holds,
            format!(
                "limsup {:.2e} vs limit {:.2e}",
                semi.limsup_estimate, semi.limit_measure
            ),
        ),
        check(
            "q*delta criterion",
            verdict.holds && qd_err < 1e-12,
            format!(
                "tail {:.2e}, err vs (2/3)^n {qd_err:.1e}",
                verdict.tail_estimate
            ),
        ),
        within_time(Duration::from_secs(1), start),
    ])
}

fn criterion_4() -> Outcome {
    let seq = cantor_sequence()?;
    let report = lift(fattened_measure_sequence(
        &seq,
        &Measure1D::Lebesgue,
        &ConvergenceOptions::default(),
    ))?;
    let stats = lift(CoverStats::from_report(&report))?;
    let last = lift(dim_bound_last(&stats, None))?;
    let direct = lift(dim_bound_direct(&stats, None))?;
    let alpha = 2f64.ln() / 3f64.ln();
    let mut content_err: f64 = 0.0;
    for rec in &seq {
        let c = lift(hausdorff_content_upper(&rec.set.to_interval_set(), alpha))?;
        content_err = content_err.max((c - 1.0).abs());
    }
    let in_range = |x: f64| (0.625..=0.640).contains(&x);
    Ok(vec![
        check(
            "last-step bound",
            in_range(last.bound) && last.residual < 1e-6,
            format!("{:.6} (residual {:.1e})", last.bound, last.residual),
        ),
        check(
            "direct bound",
            in_range(direct.alpha) && direct.residual < 1e-6,
            format!("{:.6} (residual {:.1e})", direct.alpha, direct.residual),
        ),
        check(
            "content at log2/log3 = 1",
            content_err < 1e-6,
            format!("max err {content_err:.1e}"),
        ),
    ])
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut edges = Vec::new();
    let mut widths = Vec::new();
    let mut covers = Vec::new();
    for p in [1usize, 2, 3, 4, 8, 16, 32, 64] {
        let v = lift(free_potential(&[p]))?;
        let bands = lift(band_spectrum(&v, BandStrategy::Exact1d))?;
        let union = lift(bands.union())?;
        let edge_err = if union.component_count() == 1 {
            (union.min() + 2.0).abs().max((union.max() - 2.0).abs())
        } else {
            f64::INFINITY
        };
        edges.push((p, edge_err));
        let wmax = bands.widths().into_iter().fold(0.0, f64::max);
        widths.push(wmax - 4.0 * PI / p as f64);

        let eig = lift(fiber_eigenvalues(&v, &[0.0], Solver::Jacobi))?.values;
        let cover = lift(spectral_cover(CoverSource::Fiber {
            eigenvalues: &eig,
            delta: 0.0,
            r: kruger_radius(&[p]),
        }))?;
        let want = 4.0 + 8.0 * PI / p as f64;
        covers.push((p, cover.lebesgue(), want));
    }
    let bad_cover: Vec<String> = covers
        .iter()
        .filter(|(_, got, want)| (got - want).abs() > 1e-6)
        .map(|(p, got, want)| format!("p={p}: {got:.6} vs {want:.6}"))
        .collect();
    Ok(vec![
        check(
            "band union = [-2,2]",
            edges.iter().all(|&(_, e)| e <= 1e-8),
            format!(
                "max err {:.1e}",
                edges.iter().map(|e| e.1).fold(0.0, f64::max)
            ),
        ),
        check(
            "bandwidths <= 4pi/p",
            widths.iter().all(|&w| w <= 1e-8),
            format!(
                "min slack {:.4}",
                -widths.iter().copied().fold(f64::NEG_INFINITY, f64::max)
            ),
        ),
        check(
            "fiber cover measure = 4 + 8pi/p",
            bad_cover.is_empty(),
            if bad_cover.is_empty() {
                "all p".to_string()
            } else {
                bad_cover.join("; ")
            },
        ),
        within_time(Duration::from_secs(5), start),
    ])
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let v = lift(free_potential(&[8, 8]))?;
    let bands = lift(band_spectrum(&v, BandStrategy::Grid(64)))?;
    let err = bands.error_bound;
    let union = lift(bands.union())?;
    let lo = union.min();
    let hi = union.max();
    let wmax = bands.widths().into_iter().fold(0.0, f64::max);
    Ok(vec![
        check(
            "band union = [-4,4] within error_bound",
            union.component_count() == 1 && (lo + 4.0).abs() <= err && (hi - 4.0).abs() <= err,
            format!("[{lo:.6}, {hi:.6}], error_bound {err:.4}"),
        ),
        check(
            "bandwidths <= pi + 2 error_bound",
            wmax <= 4.0 * PI / 8.0 * 2.0 + 2.0 * err,
            format!("max width {wmax:.6}"),
        ),
        within_time(Duration::from_secs(60), start),
    ])
}

fn random_hermitian(rng: &mut ChaCha8Rng, q: usize) -> FiberMatrix {
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

/// Faddeev-LeVerrier coefficients, then Durand-Kerner roots.
fn charpoly_roots(m: &FiberMatrix) -> Vec<f64> {
    let n = m.size();
    let zero = Complex64::new(0.0, 0.0);
    let a = m.entries();
    let mul = |x: &[Complex64], y: &[Complex64]| {
        let mut z = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    z[i * n + j] += x[i * n + k] * y[k * n + j];
                }
            }
        }
        z
    };
    let mut c = vec![zero; n + 1];
    c[n] = Complex64::new(1.0, 0.0);
    let mut mk = vec![zero; n * n];
    for k in 1..=n {
        mk = mul(a, &mk);
        for i in 0..n {
            mk[i * n + i] += c[n - k + 1];
        }
        let amk = mul(a, &mk);
        c[n - k] = -(0..n).map(|i| amk[i * n + i]).sum::<Complex64>() / k as f64;
    }
    let eval = |z: Complex64| c.iter().rev().fold(zero, |acc, &ck| acc * z + ck);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..500 {
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
        }
    }
    let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
    re.sort_by(f64::total_cmp);
    re
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut worst_res, mut worst_poly) = (0.0f64, 0.0f64);
    let mut small = 0;
    for i in 0..200 {
        let q = if i < 100 { 1 + i % 50 } else { 1 + i % 4 };
        let m = random_hermitian(&mut rng, q);
        let dec = lift(eigh(&m))?;
        let norm = m.frobenius_norm();
        for (lambda, v) in dec.values.iter().zip(&dec.vectors) {
            let res = m
                .apply(v)
                .iter()
                .zip(v)
                .map(|(a, b)| (a - b * lambda).norm_sqr())
                .sum::<f64>()
                .sqrt();
            worst_res = worst_res.max(res / norm);
        }
        if q <= 4 {
            small += 1;
            let got = lift(eigenvalues(&m))?;
            let want = charpoly_roots(&m);
            for (g, w) in got.iter().zip(&want) {
                worst_poly = worst_poly.max((g - w).abs());
            }
        }
    }
    Ok(vec![
        check(
            "residual <= 1e-8 |H|",
            worst_res <= 1e-8,
            format!("max {worst_res:.1e} on 200"),
        ),
        check(
            "characteristic polynomial agreement",
            worst_poly <= 1e-8,
            format!("max {worst_poly:.1e} on {small} matrices with q <= 4"),
        ),
    ])
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let tol = Tolerance(1e-9);
    let (mut fiber_ok, mut band_ok) = (0, 0);
    for _ in 0..200 {
        let p = rng.gen_range(1..=32);
        let cell: Vec<f64> = (0..p).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let v = lift(hausmeas::bloch_floquet::PeriodicPotential::new(
            vec![p],
            cell,
        ))?;
        let bands = lift(band_spectrum(&v, BandStrategy::Exact1d))?;
        let union = lift(bands.union())?;
        let r = kruger_radius(&[p]);
        let mut all = true;
        for phi in [0.0, 0.3, 0.5] {
            let eig = lift(fiber_eigenvalues(&v, &[phi], Solver::Jacobi))?.values;
            let cover = lift(spectral_cover(CoverSource::Fiber {
                eigenvalues: &eig,
                delta: 0.0,
                r,
            }))?;
            all &= union.is_subset_of(&cover, tol);
        }
        fiber_ok += all as usize;
        let mut bands_all = true;
        for delta in [1e-9, 1e-3, 0.5] {
            let cover = lift(spectral_cover(CoverSource::Bands {
                spectrum: &bands,
                delta,
            }))?;
            bands_all &= union.is_subset_of(&cover, Tolerance(0.0));
        }
        band_ok += bands_all as usize;
    }
    Ok(vec![
        check(
            "fiber cover contains band spectrum",
            fiber_ok == 200,
            format!("{fiber_ok}/200"),
        ),
        check(
            "band fattening contains band spectrum",
            band_ok == 200,
            format!("{band_ok}/200"),
        ),
    ])
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let lambda = 0.5;
    let alphas = lift(convergents(&golden_terms(), 12))?;
    let seq = alphas
        .iter()
        .enumerate()
        .map(|(k, &a)| Ok((k + 1, almost_mathieu(lambda, a, 0.0)?)))
        .collect::<Result<Vec<_>, hausmeas::Error>>();
    let seq = lift(seq)?;
    let qs: Vec<usize> = seq.iter().map(|(_, v)| v.cell_size()).collect();
    let opts = FiberPipelineOptions::default();
    let report = lift(estimate_measure_with_proxy(
        &seq,
        &Measure1D::Lebesgue,
        &opts,
    ))?;
    let raw: Vec<f64> = report.rows.iter().map(|r| r.mu_raw).collect();
    let last = *raw.last().unwrap();
    let tail = &raw[raw.len() / 2..];
    let nonincreasing = tail.windows(2).all(|w| w[1] <= w[0] + 1e-3);
    let nondecreasing = tail.windows(2).all(|w| w[1] >= w[0] - 1e-3);
    let bounded = report.rows.iter().all(|r| r.mu_fattened >= r.mu_raw);
    let margin = report
        .rows
        .iter()
        .map(|r| r.mu_fattened - r.mu_raw)
        .fold(f64::INFINITY, f64::min);
    Ok(vec![
        check(
            "denominators 1..233",
            qs == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233],
            format!("{qs:?}"),
        ),
        check(
            "final raw measure within 0.1 of 4|1-lambda|",
            (last - 4.0 * (1.0f64 - lambda).abs()).abs() <= 0.1,
            format!("{last:.6}"),
        ),
        check(
            "tail monotone within 1e-3",
            nonincreasing || nondecreasing,
            format!("{:.6?}", tail),
        ),
        check(
            "fiber cover bounds raw measure",
            bounded,
            format!("min margin {margin:.4}"),
        ),
        within_time(Duration::from_secs(120), start),
    ])
}

fn run_cli(args: &[&str], threads: &str) -> Result<(), String> {
    let out = lift(
        Command::new(env!("CARGO_BIN_EXE_hausmeas"))
            .args(args)
            .env("HAUSMEAS_THREADS", threads)
            .output(),
    )?;
    if out.status.success() {
        Ok(())
    } else {
        Err(format!(
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ))
    }
}

fn criterion_10() -> Outcome {
    let dir = lift(tempfile::tempdir())?;
    let configs = [
        (
            "measure",
            "grid",
            r#"{"model": {"name": "unit-grid"}}"#,
            "grid.csv",
        ),
        (
            "measure",
            "cantor",
            r#"{"model": {"name": "cantor"}, "n_max": 12}"#,
            "cantor.csv",
        ),
        (
            "measure",
            "am",
            r#"{"model": {"name": "almost-mathieu", "lambda": 0.5}, "n_max": 10, "delta_mode": "proxy"}"#,
            "am.csv",
        ),
        (
            "measure",
            "fib",
            r#"{"model": {"name": "fibonacci", "coupling": 1.0}, "n_max": 8, "delta_mode": "proxy"}"#,
            "fib.csv",
        ),
        (
            "measure",
            "free2",
            r#"{"model": {"name": "free", "dim": 2}, "n_max": 3, "strategy": {"grid": 16}}"#,
            "free2.csv",
        ),
        (
            "bands",
            "bands",
            r#"{"model": {"name": "almost-mathieu", "lambda": 1.0, "alpha": [8, 13]}}"#,
            "bands.bands.csv",
        ),
    ];
    let mut checks = Vec::new();
    for (cmd, stem, json, csv) in configs {
        let cfg = dir.path().join(format!("{stem}.json"));
        lift(std::fs::write(&cfg, json))?;
        let cfg_arg = cfg.to_string_lossy().into_owned();
        let mut runs = Vec::new();
        for threads in ["1", "4", "4"] {
            run_cli(&[cmd, "--config", &cfg_arg], threads)?;
            runs.push(lift(std::fs::read(dir.path().join(csv)))?);
        }
        let same = runs.windows(2).all(|w| w[0] == w[1]) && !runs[0].is_empty();
        checks.push(check(
            format!("{stem}: identical CSV"),
            same,
            format!("{} bytes", runs[0].len()),
        ));
    }
    Ok(checks)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("unit grid approximation", criterion_1),
        ("fattening algebra", criterion_2),
        ("Cantor approximants", criterion_3),
        ("dimension estimators", criterion_4),
        ("free Laplacian d=1", criterion_5),
        ("free Laplacian d=2", criterion_6),
        ("eigensolver oracle", criterion_7),
        ("cover containment", criterion_8),
        ("almost-Mathieu trend", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(checks) => {
                let pass = checks.iter().all(|c| c.pass);
                failed += !pass as usize;
                println!(
                    "criterion {:>2} {} {name} ({secs:.2}s)",
                    i + 1,
                    if pass { "PASS" } else { "FAIL" }
                );
                for c in checks {
                    let mark = if c.pass { "ok " } else { "BAD" };
                    println!("    {mark} {}: {}", c.label, c.detail);
                }
            }
            Err(e) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL {name} ({secs:.2}s)\n    error: {e}",
                    i + 1
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
