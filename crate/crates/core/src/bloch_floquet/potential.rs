use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real potential on `Z^d`, `d ∈ {1, 2}`, periodic with period `p_j` along
/// each axis and given by its values on the fundamental cell
/// `Q = {0..p_1-1} × ... × {0..p_d-1}` in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PotentialSpec", into = "PotentialSpec")]
pub struct PeriodicPotential {
    periods: Vec<usize>,
    cell: Vec<f64>,
}

/// JSON form `{"dim": d, "periods": [...], "cell": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialSpec {
    pub dim: usize,
    pub periods: Vec<usize>,
    pub cell: Vec<f64>,
}

impl TryFrom<PotentialSpec> for PeriodicPotential {
    type Error = Error;

    fn try_from(spec: PotentialSpec) -> Result<Self> {
        if spec.periods.len() != spec.dim {
            return Err(Error::DimensionMismatch {
                expected: spec.dim,
                found: spec.periods.len(),
            });
        }
        PeriodicPotential::new(spec.periods, spec.cell)
    }
}

impl From<PeriodicPotential> for PotentialSpec {
    fn from(v: PeriodicPotential) -> Self {
        PotentialSpec {
            dim: v.periods.len(),
            periods: v.periods,
            cell: v.cell,
        }
    }
}

/// Upper bound on the cell volume accepted by the constructor.
pub const MAX_CELL: usize = 1 << 16;

impl PeriodicPotential {
    pub fn new(periods: Vec<usize>, cell: Vec<f64>) -> Result<Self> {
        if periods.is_empty() || periods.len() > 2 {
            return Err(Error::InvalidPotential(format!(
                "lattice dimension must be 1 or 2, got {}",
                periods.len()
            )));
        }
        if periods.contains(&0) {
            return Err(Error::InvalidPotential("periods must be positive".into()));
        }
        let q = periods
            .iter()
            .try_fold(1usize, |acc, &p| acc.checked_mul(p))
            .filter(|&q| q <= MAX_CELL)
            .ok_or_else(|| Error::InvalidPotential("cell too large".into()))?;
        if cell.len() != q {
            return Err(Error::DimensionMismatch {
                expected: q,
                found: cell.len(),
            });
        }
        if cell.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("potential value"));
        }
        Ok(PeriodicPotential { periods, cell })
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    pub fn cell(&self) -> &[f64] {
        &self.cell
    }

    /// Cell volume `q = ∏ p_j`, which is also the fiber matrix size.
    pub fn cell_size(&self) -> usize {
        self.cell.len()
    }

    /// Row-major index of a cell site.
    pub(crate) fn index(&self, site: &[usize]) -> usize {
        site.iter()
            .zip(&self.periods)
            .fold(0, |acc, (&s, &p)| acc * p + s)
    }

    pub(crate) fn site(&self, mut index: usize) -> [usize; 2] {
        let mut out = [0usize; 2];
        for j in (0..self.dim()).rev() {
            out[j] = index % self.periods[j];
            index /= self.periods[j];
        }
        out
    }

    /// `V(n)` for an arbitrary lattice point, by periodic extension.
    pub fn value_at(&self, n: &[i64]) -> Result<f64> {
        if n.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: n.len(),
            });
        }
        let site: Vec<usize> = n
            .iter()
            .zip(&self.periods)
            .map(|(&x, &p)| x.rem_euclid(p as i64) as usize)
            .collect();
        Ok(self.cell[self.index(&site)])
    }
}

/// Potential values on a finite window `{0..w_1-1} × ... ` of `Z^d`, row-major.
/// Used when the potential is not known to be periodic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledPotential {
    window: Vec<usize>,
    values: Vec<f64>,
}

impl SampledPotential {
    pub fn new(window: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if window.is_empty() || window.len() > 2 {
            return Err(Error::InvalidPotential(
                "lattice dimension must be 1 or 2".into(),
            ));
        }
        let size: usize = window.iter().product();
        if size == 0 || values.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("potential value"));
        }
        Ok(SampledPotential { window, values })
    }

    pub fn dim(&self) -> usize {
        self.window.len()
    }

    fn value(&self, site: &[i64]) -> Option<f64> {
        let mut idx = 0usize;
        for (&s, &w) in site.iter().zip(&self.window) {
            if s < 0 || s as usize >= w {
                return None;
            }
            idx = idx * w + s as usize;
        }
        Some(self.values[idx])
    }
}

/// Outcome of a stabilizer membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizerVerdict {
    pub contains: bool,
    /// False when the verdict only covers a finite sampling window.
    pub exact: bool,
}

/// The potentials a stabilizer query can be run against.
#[derive(Debug, Clone, Copy)]
pub enum PotentialRef<'a> {
    Periodic(&'a PeriodicPotential),
    Sampled(&'a SampledPotential),
}

/// Whether translation by `m` fixes the potential, i.e. `m ∈ stab(V)`.
///
/// Periodic potentials are checked exactly over the fundamental cell. Sampled
/// potentials are checked on every pair `n, n + m` inside the window, and the
/// verdict is marked window-limited.
pub fn stabilizer_contains(v: PotentialRef<'_>, m: &[i64]) -> Result<StabilizerVerdict> {
    match v {
        PotentialRef::Periodic(v) => {
            if m.len() != v.dim() {
                return Err(Error::DimensionMismatch {
                    expected: v.dim(),
                    found: m.len(),
                });
            }
            let mut contains = true;
            let mut n = vec![0i64; v.dim()];
            for idx in 0..v.cell_size() {
                let site = v.site(idx);
                for j in 0..v.dim() {
                    n[j] = site[j] as i64 + m[j];
                }
                if v.value_at(&n)? != v.cell()[idx] {
                    contains = false;
                    break;
                }
            }
            Ok(StabilizerVerdict {
                contains,
                exact: true,
            })
        }
        PotentialRef::Sampled(s) => {
            if m.len() != s.dim() {
                return Err(Error::DimensionMismatch {
                    expected: s.dim(),
                    found: m.len(),
                });
            }
            let total: usize = s.window.iter().product();
            let mut contains = true;
            for idx in 0..total {
                let mut site = [0i64; 2];
                let mut rest = idx;
                for j in (0..s.dim()).rev() {
                    site[j] = (rest % s.window[j]) as i64;
                    rest /= s.window[j];
                }
                let shifted: Vec<i64> = (0..s.dim()).map(|j| site[j] + m[j]).collect();
                if let Some(w) = s.value(&shifted) {
                    if w != s.value(&site[..s.dim()]).unwrap() {
                        contains = false;
                        break;
                    }
                }
            }
            Ok(StabilizerVerdict {
                contains,
                exact: false,
            })
        }
    }
}
