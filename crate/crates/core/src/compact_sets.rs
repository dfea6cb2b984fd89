//! Compact subsets of the real line.
//!
//! Two representations are supported: canonical finite unions of closed
//! intervals ([`IntervalSet`]) and finite point sets ([`PointSet`]). Both are
//! nonempty by construction. [`CompactSet`] is the tagged union the distance
//! and fattening routines accept.
//!
//! The Hausdorff distance is computed exactly. On each component of `A` the
//! map `x -> d(x, B)` is piecewise linear with local maxima only at the
//! midpoints of the gaps of `B`, so the supremum is attained at a component
//! endpoint of `A` or at a gap midpoint of `B` that falls inside `A`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used by set predicates and by the merge step of
/// normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-12);
    pub const EXACT: Tolerance = Tolerance(0.0);

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// A closed interval `[lo, hi]` with finite endpoints. Degenerate intervals
/// (`lo == hi`) are points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFinite("interval endpoint"));
        }
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Result<Self> {
        Interval::new(x, x)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Length `hi - lo`; zero for points.
    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    fn distance_to(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }
}

impl TryFrom<[f64; 2]> for Interval {
    type Error = Error;

    fn try_from([lo, hi]: [f64; 2]) -> Result<Self> {
        Interval::new(lo, hi)
    }
}

impl From<Interval> for [f64; 2] {
    fn from(iv: Interval) -> Self {
        [iv.lo, iv.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Component count and largest component length of an [`IntervalSet`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Components {
    pub count: usize,
    pub max_diameter: f64,
}

/// Canonical finite union of disjoint closed intervals, sorted by left
/// endpoint with strictly positive gaps between consecutive components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    /// Canonicalizes an arbitrary nonempty family of closed intervals,
    /// merging overlapping and touching members.
    pub fn normalize<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = Interval>,
    {
        Self::normalize_with(raw, Tolerance::DEFAULT)
    }

    /// Like [`IntervalSet::normalize`], but components whose gap is at most
    /// `tol` are merged.
    pub fn normalize_with<I>(raw: I, tol: Tolerance) -> Result<Self>
    where
        I: IntoIterator<Item = Interval>,
    {
        let mut raw: Vec<Interval> = raw.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::EmptySet);
        }
        raw.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(raw.len());
        for iv in raw {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi + tol.0 => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => merged.push(iv),
            }
        }
        Ok(IntervalSet { intervals: merged })
    }

    /// Builds a set from intervals that are already sorted with strictly
    /// positive gaps. Nothing is merged, so arbitrarily small gaps survive.
    pub fn from_sorted_disjoint(intervals: Vec<Interval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptySet);
        }
        if intervals.windows(2).any(|w| w[1].lo <= w[0].hi) {
            return Err(Error::InvalidParameter(
                "intervals are not sorted with positive gaps".into(),
            ));
        }
        Ok(IntervalSet { intervals })
    }

    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        let raw = pairs
            .iter()
            .map(|&(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(raw)
    }

    pub fn single(lo: f64, hi: f64) -> Result<Self> {
        Ok(IntervalSet {
            intervals: vec![Interval::new(lo, hi)?],
        })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn pairs(&self) -> Vec<(f64, f64)> {
        self.intervals.iter().map(|iv| (iv.lo, iv.hi)).collect()
    }

    pub fn component_count(&self) -> usize {
        self.intervals.len()
    }

    pub fn min(&self) -> f64 {
        self.intervals[0].lo
    }

    pub fn max(&self) -> f64 {
        self.intervals[self.intervals.len() - 1].hi
    }

    /// Total length of the components.
    pub fn lebesgue(&self) -> f64 {
        self.intervals.iter().map(Interval::length).sum()
    }

    pub fn components(&self) -> Components {
        Components {
            count: self.intervals.len(),
            max_diameter: self
                .intervals
                .iter()
                .map(Interval::length)
                .fold(0.0, f64::max),
        }
    }

    /// The δ-fattening: every component widened by `delta` on both sides,
    /// then re-canonicalized.
    pub fn fatten(&self, delta: f64) -> Result<IntervalSet> {
        self.fatten_with(delta, Tolerance::DEFAULT)
    }

    pub fn fatten_with(&self, delta: f64, tol: Tolerance) -> Result<IntervalSet> {
        check_radius(delta)?;
        if delta == 0.0 {
            return Ok(self.clone());
        }
        let widened = self
            .intervals
            .iter()
            .map(|iv| Interval::new(iv.lo - delta, iv.hi + delta))
            .collect::<Result<Vec<_>>>()?;
        IntervalSet::normalize_with(widened, tol)
    }

    /// `inf_{b in self} |x - b|`.
    pub fn distance_to_point(&self, x: f64) -> f64 {
        distance_to_point(&self.intervals, x)
    }

    pub fn contains_point(&self, x: f64, tol: Tolerance) -> bool {
        self.distance_to_point(x) <= tol.0
    }

    /// Containment of every component of `self` in `other`, allowing each
    /// endpoint to stick out by at most `tol`.
    pub fn is_subset_of(&self, other: &IntervalSet, tol: Tolerance) -> bool {
        let b = &other.intervals;
        self.intervals.iter().all(|a| {
            let idx = b.partition_point(|iv| iv.lo <= a.lo + tol.0);
            idx > 0 && b[idx - 1].hi >= a.hi - tol.0
        })
    }

    /// Equality up to endpoint perturbations of size `tol`.
    pub fn approx_eq(&self, other: &IntervalSet, tol: Tolerance) -> bool {
        self.intervals.len() == other.intervals.len()
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(a, b)| (a.lo - b.lo).abs() <= tol.0 && (a.hi - b.hi).abs() <= tol.0)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let all = self.intervals.iter().chain(&other.intervals).copied();
        IntervalSet::normalize(all).expect("union of nonempty sets is nonempty")
    }

    /// Length of the overlap with `[lo, hi]`.
    pub fn overlap_length(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        let start = self.intervals.partition_point(|iv| iv.hi < lo);
        self.intervals[start..]
            .iter()
            .take_while(|iv| iv.lo < hi)
            .map(|iv| (iv.hi.min(hi) - iv.lo.max(lo)).max(0.0))
            .sum()
    }
}

impl TryFrom<Vec<Interval>> for IntervalSet {
    type Error = Error;

    fn try_from(raw: Vec<Interval>) -> Result<Self> {
        IntervalSet::normalize(raw)
    }
}

impl From<IntervalSet> for Vec<Interval> {
    fn from(set: IntervalSet) -> Self {
        set.intervals
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.intervals.iter().map(|iv| iv.to_string()).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

/// Nonempty finite set of reals, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct PointSet {
    points: Vec<f64>,
}

impl PointSet {
    /// Sorts and deduplicates; rejects empty or non-finite input.
    pub fn new(mut points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        if points.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("point"));
        }
        points.sort_by(f64::total_cmp);
        points.dedup();
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl TryFrom<Vec<f64>> for PointSet {
    type Error = Error;

    fn try_from(points: Vec<f64>) -> Result<Self> {
        PointSet::new(points)
    }
}

impl From<PointSet> for Vec<f64> {
    fn from(set: PointSet) -> Self {
        set.points
    }
}

/// A nonempty compact subset of the line.
///
/// Serialized as a JSON array of `[lo, hi]` pairs (intervals) or as a JSON
/// array of numbers (points).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CompactSet {
    Intervals(IntervalSet),
    Points(PointSet),
}

impl CompactSet {
    pub fn points(points: Vec<f64>) -> Result<Self> {
        Ok(CompactSet::Points(PointSet::new(points)?))
    }

    pub fn intervals(pairs: &[(f64, f64)]) -> Result<Self> {
        Ok(CompactSet::Intervals(IntervalSet::from_pairs(pairs)?))
    }

    /// The same set as a union of (possibly degenerate) closed intervals.
    pub fn to_interval_set(&self) -> IntervalSet {
        match self {
            CompactSet::Intervals(set) => set.clone(),
            CompactSet::Points(p) => {
                IntervalSet::normalize(p.points.iter().map(|&x| Interval { lo: x, hi: x }))
                    .expect("point sets are nonempty")
            }
        }
    }

    /// Number of connected components as the set is represented.
    pub fn component_count(&self) -> usize {
        match self {
            CompactSet::Intervals(set) => set.component_count(),
            CompactSet::Points(p) => p.len(),
        }
    }

    pub fn is_subset_of(&self, other: &CompactSet, tol: Tolerance) -> bool {
        self.to_interval_set()
            .is_subset_of(&other.to_interval_set(), tol)
    }
}

impl From<IntervalSet> for CompactSet {
    fn from(set: IntervalSet) -> Self {
        CompactSet::Intervals(set)
    }
}

impl From<PointSet> for CompactSet {
    fn from(set: PointSet) -> Self {
        CompactSet::Points(set)
    }
}

fn check_radius(delta: f64) -> Result<()> {
    if delta.is_finite() && delta >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(delta))
    }
}

fn distance_to_point(b: &[Interval], x: f64) -> f64 {
    let idx = b.partition_point(|iv| iv.lo <= x);
    let mut d = f64::INFINITY;
    if idx > 0 {
        d = b[idx - 1].distance_to(x);
    }
    if idx < b.len() {
        d = d.min(b[idx].lo - x);
    }
    d
}

fn directed_on_intervals(a: &[Interval], b: &[Interval]) -> f64 {
    let mut best = 0.0f64;
    let mut gap = 0usize;
    let gap_mid = |g: usize| 0.5 * (b[g].hi + b[g + 1].lo);
    for comp in a {
        best = best.max(distance_to_point(b, comp.lo));
        best = best.max(distance_to_point(b, comp.hi));
        while gap + 1 < b.len() && gap_mid(gap) < comp.lo {
            gap += 1;
        }
        let mut g = gap;
        while g + 1 < b.len() && gap_mid(g) <= comp.hi {
            best = best.max(distance_to_point(b, gap_mid(g)));
            g += 1;
        }
    }
    best
}

/// Canonical form of a raw interval family. See [`IntervalSet::normalize`].
pub fn normalize(raw: &[Interval]) -> Result<IntervalSet> {
    IntervalSet::normalize(raw.iter().copied())
}

/// The closed δ-fattening `A^(δ)` of a compact set.
pub fn fatten(a: &CompactSet, delta: f64) -> Result<IntervalSet> {
    check_radius(delta)?;
    a.to_interval_set().fatten(delta)
}

pub fn lebesgue(a: &IntervalSet) -> f64 {
    a.lebesgue()
}

pub fn components(a: &IntervalSet) -> Components {
    a.components()
}

/// `sup_{a in A} inf_{b in B} |a - b|`, evaluated exactly.
pub fn directed_distance(a: &CompactSet, b: &CompactSet) -> f64 {
    directed_on_intervals(
        a.to_interval_set().intervals(),
        b.to_interval_set().intervals(),
    )
}

/// The Hausdorff distance between two nonempty compact sets.
pub fn hausdorff_distance(a: &CompactSet, b: &CompactSet) -> f64 {
    let a = a.to_interval_set();
    let b = b.to_interval_set();
    interval_hausdorff(&a, &b)
}

/// Hausdorff distance between two interval sets.
pub fn interval_hausdorff(a: &IntervalSet, b: &IntervalSet) -> f64 {
    directed_on_intervals(a.intervals(), b.intervals())
        .max(directed_on_intervals(b.intervals(), a.intervals()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn set(pairs: &[(f64, f64)]) -> IntervalSet {
        IntervalSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn normalize_merges_overlaps_and_touches() {
        assert_eq!(
            normalize(&[iv(0.0, 1.0), iv(0.5, 2.0)]).unwrap().pairs(),
            vec![(0.0, 2.0)]
        );
        assert_eq!(
            normalize(&[iv(3.0, 4.0), iv(0.0, 1.0), iv(1.0, 2.0)])
                .unwrap()
                .pairs(),
            vec![(0.0, 2.0), (3.0, 4.0)]
        );
        assert_eq!(
            normalize(&[iv(1.0, 1.0), iv(0.0, 0.5)]).unwrap().pairs(),
            vec![(0.0, 0.5), (1.0, 1.0)]
        );
    }

    #[test]
    fn normalize_rejects_empty_and_bad_intervals() {
        assert_eq!(normalize(&[]), Err(Error::EmptySet));
        assert!(matches!(
            Interval::new(2.0, 1.0),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn normalize_is_idempotent() {
        let s = set(&[(0.0, 1.0), (0.2, 0.3), (5.0, 6.0), (6.0, 6.5)]);
        assert_eq!(normalize(s.intervals()).unwrap(), s);
    }

    #[test]
    fn sorted_disjoint_keeps_tiny_gaps() {
        let s = IntervalSet::from_sorted_disjoint(vec![iv(0.0, 1e-20), iv(2e-20, 3e-20)]).unwrap();
        assert_eq!(s.component_count(), 2);
        assert!(IntervalSet::from_sorted_disjoint(vec![iv(0.0, 1.0), iv(1.0, 2.0)]).is_err());
    }

    #[test]
    fn fatten_examples() {
        let grid = CompactSet::points(vec![0.0, 0.5, 1.0]).unwrap();
        assert_eq!(fatten(&grid, 0.25).unwrap().pairs(), vec![(-0.25, 1.25)]);

        let unit = CompactSet::intervals(&[(0.0, 1.0)]).unwrap();
        assert_eq!(fatten(&unit, 0.0).unwrap().pairs(), vec![(0.0, 1.0)]);

        let two = CompactSet::points(vec![0.0, 10.0]).unwrap();
        assert_eq!(
            fatten(&two, 1.0).unwrap().pairs(),
            vec![(-1.0, 1.0), (9.0, 11.0)]
        );
    }

    #[test]
    fn fatten_rejects_negative_radius() {
        let unit = CompactSet::intervals(&[(0.0, 1.0)]).unwrap();
        assert_eq!(fatten(&unit, -0.1), Err(Error::InvalidRadius(-0.1)));
        assert!(fatten(&unit, f64::NAN).is_err());
        let huge = CompactSet::intervals(&[(0.0, f64::MAX)]).unwrap();
        assert!(matches!(fatten(&huge, f64::MAX), Err(Error::NonFinite(_))));
    }

    #[test]
    fn lebesgue_examples() {
        assert_eq!(lebesgue(&set(&[(0.0, 1.0), (2.0, 2.5)])), 1.5);
        assert_eq!(lebesgue(&set(&[(-0.25, 1.25)])), 1.5);
        assert_eq!(lebesgue(&set(&[(5.0, 5.0)])), 0.0);
    }

    #[test]
    fn components_examples() {
        let c = components(&set(&[(0.0, 1.0), (2.0, 2.5)]));
        assert_eq!((c.count, c.max_diameter), (2, 1.0));
        let c = components(&set(&[(5.0, 5.0)]));
        assert_eq!((c.count, c.max_diameter), (1, 0.0));
        let grid = CompactSet::points(vec![0.0, 0.5, 1.0]).unwrap();
        let c = components(&fatten(&grid, 0.25).unwrap());
        assert_eq!((c.count, c.max_diameter), (1, 1.5));
    }

    #[test]
    fn directed_distance_examples() {
        let a = CompactSet::intervals(&[(3.0, 4.0)]).unwrap();
        let b = CompactSet::intervals(&[(0.0, 2.0)]).unwrap();
        assert_eq!(directed_distance(&a, &b), 2.0);

        let a = CompactSet::intervals(&[(0.0, 2.0)]).unwrap();
        let b = CompactSet::intervals(&[(0.0, 1.0), (3.0, 4.0)]).unwrap();
        assert_eq!(directed_distance(&a, &b), 1.0);
        assert_eq!(directed_distance(&a, &a), 0.0);
    }

    #[test]
    fn directed_distance_uses_gap_midpoints() {
        // The farthest point of [0, 10] from {0, 10} is the midpoint 5.
        let a = CompactSet::intervals(&[(0.0, 10.0)]).unwrap();
        let b = CompactSet::points(vec![0.0, 10.0]).unwrap();
        assert_eq!(directed_distance(&a, &b), 5.0);
        assert_eq!(directed_distance(&b, &a), 0.0);
    }

    #[test]
    fn hausdorff_examples() {
        let grid = CompactSet::points(vec![0.0, 0.5, 1.0]).unwrap();
        let unit = CompactSet::intervals(&[(0.0, 1.0)]).unwrap();
        assert_eq!(hausdorff_distance(&grid, &unit), 0.25);

        let a = CompactSet::intervals(&[(0.0, 1.0), (3.0, 4.0)]).unwrap();
        let b = CompactSet::intervals(&[(0.0, 2.0)]).unwrap();
        assert_eq!(hausdorff_distance(&a, &b), 2.0);
        assert_eq!(hausdorff_distance(&a, &a), 0.0);
    }

    #[test]
    fn subset_predicate() {
        let a = set(&[(0.1, 0.2), (3.0, 3.5)]);
        let b = set(&[(0.0, 1.0), (2.0, 4.0)]);
        assert!(a.is_subset_of(&b, Tolerance::EXACT));
        assert!(!b.is_subset_of(&a, Tolerance::EXACT));
        let c = set(&[(0.5, 2.5)]);
        assert!(!c.is_subset_of(&b, Tolerance::EXACT));
        assert!(set(&[(0.0, 1.0 + 1e-13)]).is_subset_of(&b, Tolerance::DEFAULT));
    }

    #[test]
    fn overlap_length_partial() {
        let s = set(&[(0.0, 1.0), (2.0, 3.0)]);
        assert_eq!(s.overlap_length(0.5, 2.5), 1.0);
        assert_eq!(s.overlap_length(-5.0, 5.0), 2.0);
        assert_eq!(s.overlap_length(1.2, 1.8), 0.0);
    }

    #[test]
    fn json_formats() {
        let a: CompactSet = serde_json::from_str("[[0, 1], [0.5, 2]]").unwrap();
        assert_eq!(a.to_interval_set().pairs(), vec![(0.0, 2.0)]);
        let p: CompactSet = serde_json::from_str("[1, 0, 0.5]").unwrap();
        assert_eq!(p, CompactSet::points(vec![0.0, 0.5, 1.0]).unwrap());
        assert!(serde_json::from_str::<CompactSet>("[]").is_err());
        assert!(serde_json::from_str::<CompactSet>("[[2, 1]]").is_err());
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[[0.0,2.0]]");
    }

    fn arb_set() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec((-10.0f64..10.0, 0.0f64..3.0), 1..=6).prop_map(|v| {
            IntervalSet::normalize(v.into_iter().map(|(lo, w)| iv(lo, lo + w))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn hausdorff_is_symmetric(a in arb_set(), b in arb_set()) {
            prop_assert_eq!(interval_hausdorff(&a, &b), interval_hausdorff(&b, &a));
        }

        #[test]
        fn hausdorff_triangle(a in arb_set(), b in arb_set(), c in arb_set()) {
            let ab = interval_hausdorff(&a, &b);
            let bc = interval_hausdorff(&b, &c);
            let ac = interval_hausdorff(&a, &c);
            prop_assert!(ac <= ab + bc + 1e-12);
        }

        #[test]
        fn hausdorff_zero_iff_equal(a in arb_set(), b in arb_set()) {
            prop_assert_eq!(interval_hausdorff(&a, &a), 0.0);
            if a != b {
                prop_assert!(interval_hausdorff(&a, &b) > 0.0);
            }
        }

        #[test]
        fn fattening_is_subadditive_in_radius(a in arb_set(), d in 0.0f64..2.0, e in 0.0f64..2.0) {
            let twice = a.fatten(d).unwrap().fatten(e).unwrap();
            let once = a.fatten(d + e).unwrap();
            prop_assert!(twice.is_subset_of(&once, Tolerance(1e-9)));
        }

        #[test]
        fn fattening_measure_bound(a in arb_set(), d in 0.0f64..2.0) {
            let q = a.component_count() as f64;
            prop_assert!(a.fatten(d).unwrap().lebesgue() <= a.lebesgue() + 2.0 * q * d + 1e-9);
        }

        #[test]
        fn least_fattening_characterization(a in arb_set(), b in arb_set()) {
            let d = interval_hausdorff(&a, &b);
            prop_assert!(a.is_subset_of(&b.fatten(d).unwrap(), Tolerance(1e-9)));
            prop_assert!(b.is_subset_of(&a.fatten(d).unwrap(), Tolerance(1e-9)));
            if d > 1e-3 {
                let shrunk = d * (1.0 - 1e-6);
                let tol = Tolerance(d * 1e-7);
                let both = a.is_subset_of(&b.fatten(shrunk).unwrap(), tol)
                    && b.is_subset_of(&a.fatten(shrunk).unwrap(), tol);
                prop_assert!(!both);
            }
        }
    }
}
