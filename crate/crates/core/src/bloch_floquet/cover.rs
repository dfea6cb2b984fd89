use super::bands::BandSpectrum;
use crate::compact_sets::{Interval, IntervalSet, Tolerance};
use crate::error::{Error, Result};

/// Input to [`spectral_cover`].
#[derive(Debug, Clone, Copy)]
pub enum CoverSource<'a> {
    /// Every band `[λ̌_i, λ̂_i]` fattened by `delta`.
    Bands {
        spectrum: &'a BandSpectrum,
        delta: f64,
    },
    /// Intervals `[λ_i - (δ + r), λ_i + (δ + r)]` around the eigenvalues of a
    /// single fiber, with `r` a bandwidth bound.
    Fiber {
        eigenvalues: &'a [f64],
        delta: f64,
        r: f64,
    },
}

fn check_radius(x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(x))
    }
}

pub fn spectral_cover(source: CoverSource<'_>) -> Result<IntervalSet> {
    spectral_cover_with(source, Tolerance::DEFAULT)
}

pub fn spectral_cover_with(source: CoverSource<'_>, tol: Tolerance) -> Result<IntervalSet> {
    match source {
        CoverSource::Bands { spectrum, delta } => {
            check_radius(delta)?;
            spectrum.union_with(tol)?.fatten_with(delta, tol)
        }
        CoverSource::Fiber {
            eigenvalues,
            delta,
            r,
        } => {
            check_radius(delta)?;
            check_radius(r)?;
            if eigenvalues.is_empty() {
                return Err(Error::EmptySet);
            }
            let radius = delta + r;
            let raw = eigenvalues
                .iter()
                .map(|&x| Interval::new(x - radius, x + radius))
                .collect::<Result<Vec<_>>>()?;
            IntervalSet::normalize_with(raw, tol)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch_floquet::{fiber_eigenvalues, Solver};
    use crate::models::free_potential;
    use std::f64::consts::PI;

    #[test]
    fn band_cover_example() {
        let spectrum = BandSpectrum {
            bands: vec![(-2.0, 2.0)],
            error_bound: 0.0,
        };
        let c = spectral_cover(CoverSource::Bands {
            spectrum: &spectrum,
            delta: 0.1,
        })
        .unwrap();
        assert_eq!(c.pairs(), vec![(-2.1, 2.1)]);
    }

    #[test]
    fn fiber_cover_chains_for_free_p8() {
        let v = free_potential(&[8]).unwrap();
        let eig = fiber_eigenvalues(&v, &[0.0], Solver::Jacobi)
            .unwrap()
            .values;
        let c = spectral_cover(CoverSource::Fiber {
            eigenvalues: &eig,
            delta: 0.0,
            r: PI / 2.0,
        })
        .unwrap();
        assert_eq!(c.component_count(), 1);
        assert!((c.min() + 2.0 + PI / 2.0).abs() < 1e-12);
        assert!((c.max() - 2.0 - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_eigenvalue_cover() {
        let c = spectral_cover(CoverSource::Fiber {
            eigenvalues: &[0.0],
            delta: 0.2,
            r: 0.3,
        })
        .unwrap();
        assert_eq!(c.pairs(), vec![(-0.5, 0.5)]);
    }

    #[test]
    fn negative_radii_rejected() {
        let cover = |delta, r| {
            spectral_cover(CoverSource::Fiber {
                eigenvalues: &[0.0],
                delta,
                r,
            })
        };
        assert!(matches!(cover(-0.1, 0.0), Err(Error::InvalidRadius(_))));
        assert!(matches!(cover(0.0, -1.0), Err(Error::InvalidRadius(_))));
        assert!(matches!(cover(0.0, f64::NAN), Err(Error::InvalidRadius(_))));
    }
}
