//! Generators for test and experiment potentials and synthetic sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bloch_floquet::PeriodicPotential;
use crate::compact_sets::{interval_hausdorff, CompactSet, Interval, IntervalSet};
use crate::convergence::ApproximationRecord;
use crate::error::{Error, Result};

/// A reduced fraction `num / den` with `den ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, u64)", into = "(i64, u64)")]
pub struct Rational {
    num: i64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = gcd(num.unsigned_abs(), den);
        Ok(Rational {
            num: num / g as i64,
            den: den / g,
        })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl TryFrom<(i64, u64)> for Rational {
    type Error = Error;

    fn try_from((num, den): (i64, u64)) -> Result<Self> {
        Rational::new(num, den)
    }
}

impl From<Rational> for (i64, u64) {
    fn from(r: Rational) -> Self {
        (r.num, r.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The first `count` convergents of `[a0; a1, a2, ...]`.
///
/// When `a0 = 0` the trivial convergent `0/1` is skipped, so the golden mean
/// `[0; 1, 1, ...]` starts at `1/1` and `count` is limited to the remaining
/// terms.
pub fn convergents(cf_terms: &[u64], count: usize) -> Result<Vec<Rational>> {
    if cf_terms.is_empty() {
        return Err(Error::InvalidParameter(
            "no continued-fraction terms".into(),
        ));
    }
    if cf_terms[1..].contains(&0) {
        return Err(Error::InvalidParameter(
            "partial quotients after the first must be positive".into(),
        ));
    }
    let skip = usize::from(cf_terms[0] == 0);
    let available = cf_terms.len() - skip;
    if count > available {
        return Err(Error::InsufficientData {
            needed: count,
            found: available,
        });
    }
    let overflow = || Error::InvalidParameter("convergent overflows 64 bits".into());
    let (mut p_prev, mut q_prev): (i64, u64) = (1, 0);
    let (mut p, mut q): (i64, u64) = (cf_terms[0] as i64, 1);
    let mut out = Vec::with_capacity(count);
    if skip == 0 && count > 0 {
        out.push(Rational::new(p, q)?);
    }
    for &a in &cf_terms[1..] {
        if out.len() == count {
            break;
        }
        let ai = i64::try_from(a).map_err(|_| overflow())?;
        let p_next = ai
            .checked_mul(p)
            .and_then(|x| x.checked_add(p_prev))
            .ok_or_else(overflow)?;
        let q_next = a
            .checked_mul(q)
            .and_then(|x| x.checked_add(q_prev))
            .ok_or_else(overflow)?;
        (p_prev, q_prev, p, q) = (p, q, p_next, q_next);
        out.push(Rational::new(p, q)?);
    }
    Ok(out)
}

/// Zero potential with the given periods.
pub fn free_potential(periods: &[usize]) -> Result<PeriodicPotential> {
    let q = periods
        .iter()
        .try_fold(1usize, |acc, &p| acc.checked_mul(p))
        .ok_or_else(|| Error::InvalidPotential("cell too large".into()))?;
    PeriodicPotential::new(periods.to_vec(), vec![0.0; q])
}

/// Almost-Mathieu approximant `V(n) = 2λ cos(2π(n p/q + offset))`, period `q`.
pub fn almost_mathieu(lambda: f64, alpha: Rational, offset: f64) -> Result<PeriodicPotential> {
    if !lambda.is_finite() || !offset.is_finite() {
        return Err(Error::NonFinite("almost-Mathieu parameter"));
    }
    let q = usize::try_from(alpha.den())
        .map_err(|_| Error::InvalidPotential("period too large".into()))?;
    let p = alpha.num().rem_euclid(alpha.den() as i64) as u64;
    let cell = (0..q as u64)
        .map(|n| {
            // Reducing n·p mod q first keeps the angle accurate for large q.
            let frac = ((n as u128 * p as u128) % q as u128) as f64 / q as f64;
            let angle = std::f64::consts::TAU * (frac + offset);
            2.0 * lambda * angle.cos()
        })
        .collect();
    PeriodicPotential::new(vec![q], cell)
}

/// The Fibonacci word after `level - 1` applications of `a → ab, b → a`,
/// starting from `a`.
pub fn fibonacci_word(level: usize) -> Result<Vec<bool>> {
    if level == 0 {
        return Err(Error::InvalidParameter("level must be at least 1".into()));
    }
    // Length F_{level+1}; level 24 already gives 75025 letters.
    if level > 24 {
        return Err(Error::InvalidParameter("level too large".into()));
    }
    let mut word = vec![true];
    for _ in 1..level {
        word = word
            .iter()
            .flat_map(|&a| if a { vec![true, false] } else { vec![true] })
            .collect();
    }
    Ok(word)
}

/// Periodic potential whose cell is `coupling` on each `a` of the Fibonacci
/// word and zero on each `b`.
pub fn fibonacci_potential(level: usize, coupling: f64) -> Result<PeriodicPotential> {
    if !coupling.is_finite() {
        return Err(Error::NonFinite("coupling"));
    }
    let word = fibonacci_word(level)?;
    let cell: Vec<f64> = word
        .iter()
        .map(|&a| if a { coupling } else { 0.0 })
        .collect();
    PeriodicPotential::new(vec![cell.len()], cell)
}

/// Deepest supported Cantor level; endpoints `k / 3^level` stay exact in u64.
pub const MAX_CANTOR_LEVEL: u32 = 40;

/// The `2^level` middle-thirds intervals of length `3^-level`, with
/// `δ = r = 3^-level` and `q = 2^level`.
pub fn cantor_approximation(level: u32) -> Result<ApproximationRecord> {
    if level > MAX_CANTOR_LEVEL {
        return Err(Error::InvalidParameter(format!(
            "cantor level must be at most {MAX_CANTOR_LEVEL}"
        )));
    }
    let scale = 3u64.pow(level);
    let mut starts = vec![0u64];
    for k in 0..level {
        let step = 2 * 3u64.pow(level - k - 1);
        starts = starts.iter().flat_map(|&s| [s, s + step]).collect();
    }
    let denom = scale as f64;
    let intervals = starts
        .iter()
        .map(|&s| Interval::new(s as f64 / denom, (s + 1) as f64 / denom))
        .collect::<Result<Vec<_>>>()?;
    let set = IntervalSet::from_sorted_disjoint(intervals)?;
    let delta = 1.0 / denom;
    let mut rec = ApproximationRecord::new(level as usize, CompactSet::Intervals(set), delta)?;
    rec.r = delta;
    Ok(rec)
}

/// Grid `{j/n : 0 ≤ j ≤ n}` with `δ = 1/(2n)`, its exact Hausdorff distance
/// to `[0, 1]`.
pub fn unit_grid(n: usize) -> Result<ApproximationRecord> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid size must be positive".into()));
    }
    let points = (0..=n).map(|j| j as f64 / n as f64).collect();
    ApproximationRecord::new(n, CompactSet::points(points)?, 0.5 / n as f64)
}

/// The grid of [`unit_grid`] joined with the segment `[0, alpha]`, whose
/// Lebesgue measure stays `alpha` while it still converges to `[0, 1]`.
/// `delta` is the exact Hausdorff distance to `[0, 1]`.
pub fn padded_unit_grid(n: usize, alpha: f64) -> Result<ApproximationRecord> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in [0, 1), got {alpha}"
        )));
    }
    let grid = unit_grid(n)?.set.to_interval_set();
    let set = grid.union(&IntervalSet::single(0.0, alpha)?);
    let delta = interval_hausdorff(&set, &IntervalSet::single(0.0, 1.0)?);
    ApproximationRecord::new(n, CompactSet::Intervals(set), delta)
}

/// Frequency-continuity bound `c·|α - p/q|^{1/2}` for the distance between
/// an Almost-Mathieu spectrum and that of its rational approximant. The
/// constant is not derived here and must be supplied.
pub fn almost_mathieu_delta_bound(constant: f64, alpha: f64, approximant: Rational) -> f64 {
    constant * (alpha - approximant.to_f64()).abs().sqrt()
}
