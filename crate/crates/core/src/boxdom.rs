//! Box domains in bound and center/half-length form, and the normalization
//! that maps any box to the canonical configuration used by the closed form:
//! nonnegative centers and ratios `c1/l1 <= c2/l2 <= c3/l3`.

use std::fmt;
use std::ops::Deref;

use num_traits::Signed;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// An interval `[c - l, c + l]` with `l > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    center: Scalar,
    half_length: Scalar,
}

impl Interval {
    pub fn new(center: Scalar, half_length: Scalar) -> Result<Self> {
        if !half_length.is_positive() {
            return Err(Error::NonPositiveHalfLength(scalar::fmt_exact(
                &half_length,
            )));
        }
        Ok(Interval {
            center,
            half_length,
        })
    }

    pub fn from_bounds(lo: Scalar, hi: Scalar) -> Result<Self> {
        if lo >= hi {
            return Err(Error::DegenerateInterval {
                lo: scalar::fmt_exact(&lo),
                hi: scalar::fmt_exact(&hi),
            });
        }
        let two = scalar::int(2);
        Ok(Interval {
            center: (&lo + &hi) / &two,
            half_length: (hi - lo) / two,
        })
    }

    pub fn center(&self) -> &Scalar {
        &self.center
    }

    pub fn half_length(&self) -> &Scalar {
        &self.half_length
    }

    pub fn lower(&self) -> Scalar {
        &self.center - &self.half_length
    }

    pub fn upper(&self) -> Scalar {
        &self.center + &self.half_length
    }

    /// `c / l`.
    pub fn ratio(&self) -> Scalar {
        &self.center / &self.half_length
    }

    /// Reflection `x -> -x`.
    pub fn reflected(&self) -> Interval {
        Interval {
            center: -self.center.clone(),
            half_length: self.half_length.clone(),
        }
    }
}

/// Three intervals, one per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxDomain3 {
    intervals: [Interval; 3],
}

impl BoxDomain3 {
    pub fn new(intervals: [Interval; 3]) -> Self {
        BoxDomain3 { intervals }
    }

    pub fn from_bounds(bounds: [(Scalar, Scalar); 3]) -> Result<Self> {
        let [a, b, c] = bounds;
        Ok(BoxDomain3::new([
            Interval::from_bounds(a.0, a.1)?,
            Interval::from_bounds(b.0, b.1)?,
            Interval::from_bounds(c.0, c.1)?,
        ]))
    }

    pub fn from_centers(intervals: [(Scalar, Scalar); 3]) -> Result<Self> {
        let [a, b, c] = intervals;
        Ok(BoxDomain3::new([
            Interval::new(a.0, a.1)?,
            Interval::new(b.0, b.1)?,
            Interval::new(c.0, c.1)?,
        ]))
    }

    pub fn intervals(&self) -> &[Interval; 3] {
        &self.intervals
    }

    /// Zero-based access.
    pub fn interval(&self, i: usize) -> &Interval {
        &self.intervals[i]
    }

    pub fn center(&self, i: usize) -> &Scalar {
        self.intervals[i].center()
    }

    pub fn half_length(&self, i: usize) -> &Scalar {
        self.intervals[i].half_length()
    }

    pub fn ratios(&self) -> [Scalar; 3] {
        [0, 1, 2].map(|i| self.intervals[i].ratio())
    }

    pub fn bounds(&self) -> [(Scalar, Scalar); 3] {
        [0, 1, 2].map(|i| (self.intervals[i].lower(), self.intervals[i].upper()))
    }

    /// Reflects the variables where `signs[i] < 0` and moves variable `i` to
    /// slot `permutation[i]`.
    pub fn transformed(&self, signs: [i8; 3], permutation: [usize; 3]) -> BoxDomain3 {
        let mut out = self.intervals.clone();
        for (old, iv) in self.intervals.iter().enumerate() {
            out[permutation[old]] = if signs[old] < 0 {
                iv.reflected()
            } else {
                iv.clone()
            };
        }
        BoxDomain3 { intervals: out }
    }

    /// Maps the domain to canonical form.
    ///
    /// Centers are replaced by their absolute values first, then the
    /// variables are stably sorted by `c/l`. Equal ratios keep their original
    /// order, so a canonical input maps to itself with the identity record.
    pub fn normalize(&self) -> (CanonicalDomain, Normalization) {
        let signs = [0, 1, 2].map(|i| {
            if self.center(i).is_negative() {
                -1i8
            } else {
                1
            }
        });
        let abs = self.transformed(signs, [0, 1, 2]);
        let ratios = abs.ratios();
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| ratios[a].cmp(&ratios[b]));
        let mut permutation = [0usize; 3];
        for (new, &old) in order.iter().enumerate() {
            permutation[old] = new;
        }
        let record = Normalization { signs, permutation };
        let canonical = CanonicalDomain(self.transformed(signs, permutation));
        debug_assert!(CanonicalDomain::check(&canonical.0).is_ok());
        (canonical, record)
    }

    /// Parses the JSON domain format: `{"bounds": [[lo,hi],[lo,hi],[lo,hi]]}`
    /// or `{"intervals": [{"c": .., "l": ..}, ...]}`. Numbers may be JSON
    /// numbers or strings (`"p/q"`, decimals).
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidDomain(e.to_string()))?;
        Self::from_json_value(&value)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let spec: DomainSpec = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidDomain(e.to_string()))?;
        match (spec.bounds, spec.intervals) {
            (Some(bounds), None) => {
                let parsed = bounds
                    .iter()
                    .map(|[lo, hi]| Ok((json_scalar(lo)?, json_scalar(hi)?)))
                    .collect::<Result<Vec<_>>>()?;
                let arr: [(Scalar, Scalar); 3] = parsed
                    .try_into()
                    .map_err(|_| Error::InvalidDomain("\"bounds\" needs exactly 3 pairs".into()))?;
                BoxDomain3::from_bounds(arr)
            }
            (None, Some(intervals)) => {
                let parsed = intervals
                    .iter()
                    .map(|iv| Ok((json_scalar(&iv.c)?, json_scalar(&iv.l)?)))
                    .collect::<Result<Vec<_>>>()?;
                let arr: [(Scalar, Scalar); 3] = parsed.try_into().map_err(|_| {
                    Error::InvalidDomain("\"intervals\" needs exactly 3 entries".into())
                })?;
                BoxDomain3::from_centers(arr)
            }
            _ => Err(Error::InvalidDomain(
                "expected exactly one of \"bounds\" or \"intervals\"".into(),
            )),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DomainSpec {
    bounds: Option<Vec<[serde_json::Value; 2]>>,
    intervals: Option<Vec<IntervalSpec>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalSpec {
    c: serde_json::Value,
    l: serde_json::Value,
}

fn json_scalar(v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::String(s) => scalar::parse_scalar(s),
        serde_json::Value::Number(n) => scalar::parse_scalar(&n.to_string()),
        other => Err(Error::InvalidDomain(format!(
            "expected a number, got {other}"
        ))),
    }
}

/// A box with `c_i >= 0` and `c1/l1 <= c2/l2 <= c3/l3`.
///
/// Only [`BoxDomain3::normalize`] and [`CanonicalDomain::try_new`] construct
/// one, so the closed-form routines never see a non-canonical box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalDomain(BoxDomain3);

impl CanonicalDomain {
    pub fn try_new(domain: BoxDomain3) -> Result<Self> {
        Self::check(&domain)?;
        Ok(CanonicalDomain(domain))
    }

    /// Convenience for tests and examples: centers and half-lengths given
    /// as `(c, l)` pairs that are already canonical.
    pub fn from_centers(intervals: [(Scalar, Scalar); 3]) -> Result<Self> {
        Self::try_new(BoxDomain3::from_centers(intervals)?)
    }

    fn check(domain: &BoxDomain3) -> Result<()> {
        if let Some(i) = (0..3).find(|&i| domain.center(i).is_negative()) {
            return Err(Error::NotCanonical(format!("center {} is negative", i + 1)));
        }
        let r = domain.ratios();
        if r[0] > r[1] || r[1] > r[2] {
            return Err(Error::NotCanonical(
                "ratios c_i/l_i are not nondecreasing".into(),
            ));
        }
        Ok(())
    }

    pub fn domain(&self) -> &BoxDomain3 {
        &self.0
    }

    pub fn into_inner(self) -> BoxDomain3 {
        self.0
    }

    pub fn c(&self, i: usize) -> &Scalar {
        self.0.center(i)
    }

    pub fn l(&self, i: usize) -> &Scalar {
        self.0.half_length(i)
    }
}

impl Deref for CanonicalDomain {
    type Target = BoxDomain3;

    fn deref(&self) -> &BoxDomain3 {
        &self.0
    }
}

/// How a raw domain was mapped to canonical form.
///
/// `signs[i]` is the sign of the raw center of variable `i` (zero counts as
/// `+1`); `permutation[i]` is the canonical slot of raw variable `i`. Both
/// are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Normalization {
    pub signs: [i8; 3],
    pub permutation: [usize; 3],
}

impl Normalization {
    pub fn identity() -> Self {
        Normalization {
            signs: [1, 1, 1],
            permutation: [0, 1, 2],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// One-based images of variables 1, 2, 3.
    pub fn permutation_one_based(&self) -> [usize; 3] {
        self.permutation.map(|p| p + 1)
    }

    pub fn inverse_permutation(&self) -> [usize; 3] {
        let mut inv = [0usize; 3];
        for (old, &new) in self.permutation.iter().enumerate() {
            inv[new] = old;
        }
        inv
    }

    /// Undoes the normalization: recovers the raw domain from the canonical one.
    pub fn restore(&self, canonical: &BoxDomain3) -> BoxDomain3 {
        let inv = self.inverse_permutation();
        let signs = [0, 1, 2].map(|new| self.signs[inv[new]]);
        canonical.transformed(signs, inv)
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.permutation_one_based();
        write!(f, "(1,2,3)->({a},{b},{c})")
    }
}

pub fn interval_from_bounds(lo: Scalar, hi: Scalar) -> Result<Interval> {
    Interval::from_bounds(lo, hi)
}

pub fn ratios(domain: &BoxDomain3) -> [Scalar; 3] {
    domain.ratios()
}

pub fn normalize(domain: &BoxDomain3) -> (CanonicalDomain, Normalization) {
    domain.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn dom(cs: [i64; 3], ls: [i64; 3]) -> BoxDomain3 {
        BoxDomain3::from_centers([0, 1, 2].map(|i| (int(cs[i]), int(ls[i])))).unwrap()
    }

    #[test]
    fn interval_from_bounds_examples() {
        let iv = Interval::from_bounds(int(3), int(7)).unwrap();
        assert_eq!((iv.center(), iv.half_length()), (&int(5), &int(2)));
        let iv = Interval::from_bounds(int(-1), int(1)).unwrap();
        assert_eq!((iv.center(), iv.half_length()), (&int(0), &int(1)));
        let iv = Interval::from_bounds(int(-3), int(-1)).unwrap();
        assert_eq!((iv.center(), iv.half_length()), (&int(-2), &int(1)));
    }

    #[test]
    fn interval_rejects_degenerate_and_reversed() {
        assert!(matches!(
            Interval::from_bounds(int(1), int(1)),
            Err(Error::DegenerateInterval { .. })
        ));
        assert!(Interval::from_bounds(int(2), int(1)).is_err());
        assert!(matches!(
            Interval::new(int(0), int(0)),
            Err(Error::NonPositiveHalfLength(_))
        ));
        assert!(Interval::new(int(0), int(-1)).is_err());
    }

    #[test]
    fn normalize_worked_example() {
        let (canon, rec) = dom([5, 1, -2], [2, 3, 1]).normalize();
        assert_eq!(*canon.domain(), dom([1, 2, 5], [3, 1, 2]));
        assert_eq!(rec.signs, [1, 1, -1]);
        assert_eq!(rec.permutation_one_based(), [3, 1, 2]);
        assert_eq!(rec.to_string(), "(1,2,3)->(3,1,2)");
    }

    #[test]
    fn normalize_symmetric_box_is_identity() {
        let d = dom([0, 0, 0], [1, 1, 1]);
        let (canon, rec) = d.normalize();
        assert!(rec.is_identity());
        assert_eq!(*canon.domain(), d);
    }

    #[test]
    fn normalize_sorts_ratios() {
        let (canon, rec) = dom([2, 1, 3], [1, 1, 1]).normalize();
        assert_eq!(rec.permutation_one_based(), [2, 1, 3]);
        assert_eq!(canon.ratios(), [int(1), int(2), int(3)]);
    }

    #[test]
    fn ratios_examples() {
        assert_eq!(
            dom([1, 2, 5], [3, 1, 2]).ratios(),
            [frac(1, 3), int(2), frac(5, 2)]
        );
        assert_eq!(dom([0, 0, 0], [4, 5, 6]).ratios(), [int(0), int(0), int(0)]);
        assert_eq!(dom([1, 1, 1], [1, 1, 1]).ratios(), [int(1), int(1), int(1)]);
    }

    #[test]
    fn ties_keep_original_order() {
        let (canon, rec) = dom([2, 1, 4], [2, 1, 4]).normalize();
        assert!(rec.is_identity());
        assert_eq!(canon.half_length(0), &int(2));
    }

    #[test]
    fn canonical_check_rejects_bad_input() {
        assert!(CanonicalDomain::try_new(dom([-1, 0, 0], [1, 1, 1])).is_err());
        assert!(CanonicalDomain::try_new(dom([2, 1, 0], [1, 1, 1])).is_err());
        assert!(CanonicalDomain::try_new(dom([0, 1, 2], [1, 1, 1])).is_ok());
    }

    #[test]
    fn json_formats() {
        let d = BoxDomain3::from_json_str(r#"{"bounds": [[3,7],[-2,"4"],["-3","-1"]]}"#).unwrap();
        assert_eq!(d, dom([5, 1, -2], [2, 3, 1]));
        let d = BoxDomain3::from_json_str(
            r#"{"intervals": [{"c": "1/2", "l": 0.25}, {"c": 0, "l": 1}, {"c": 2, "l": "3"}]}"#,
        )
        .unwrap();
        assert_eq!(d.center(0), &frac(1, 2));
        assert_eq!(d.half_length(0), &frac(1, 4));
    }

    #[test]
    fn json_errors() {
        for bad in [
            r#"{"bounds": [[1,1],[0,1],[0,1]]}"#,
            r#"{"bounds": [[0,1],[0,1]]}"#,
            r#"{"bounds": [[0,1],[0,1],[0,1]], "intervals": []}"#,
            r#"{}"#,
            r#"{"bounds": [[0,true],[0,1],[0,1]]}"#,
            r#"{"intervals": [{"c": 0, "l": 0},{"c": 0, "l": 1},{"c": 0, "l": 1}]}"#,
            "not json",
        ] {
            assert!(BoxDomain3::from_json_str(bad).is_err(), "accepted {bad}");
        }
    }
}
