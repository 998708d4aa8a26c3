//! Six-case closed form for the hull volume, the nonnegative-bound special
//! case, and the table linking each case to the sub-cases of `vol(Q)`,
//! `V(Q,Q,R)` and `V(Q,R,R)` that produce it.

use std::fmt;

use crate::boxdom::{BoxDomain3, CanonicalDomain, Normalization};
use crate::error::{Error, Result};
use crate::hullgeom::{self, Indicator};
use crate::mixedvol::{self, ZValueReport};
use crate::scalar::{self, Scalar};

/// Which of the six parameter regions a canonical domain falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// `r1 >= 1`
    One = 1,
    /// `r1 < 1`, `r2 >= 1`
    Two = 2,
    /// `r2 < 1`, `r3 >= 1`
    Three = 3,
    /// `r3 < 1`, `r1 + r2 + r3 >= 1`, `r2 + r3 >= 1 + r1`
    Four = 4,
    /// `r3 < 1`, `r1 + r2 + r3 >= 1`, `r2 + r3 < 1 + r1`
    Five = 5,
    /// `r3 < 1`, `r1 + r2 + r3 < 1`
    Six = 6,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [
        CaseId::One,
        CaseId::Two,
        CaseId::Three,
        CaseId::Four,
        CaseId::Five,
        CaseId::Six,
    ];

    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<CaseId> {
        CaseId::ALL.get(usize::from(id).checked_sub(1)?).copied()
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Tests the six conditions in order, each exactly as stated (earlier
/// failures are not assumed by later tests).
pub fn classify(d: &CanonicalDomain) -> CaseId {
    let [r1, r2, r3] = d.ratios();
    let one = scalar::one();
    let sum = &r1 + &r2 + &r3;
    let pair = &r2 + &r3;
    let one_plus_r1 = &one + &r1;
    if r1 >= one {
        CaseId::One
    } else if r1 < one && r2 >= one {
        CaseId::Two
    } else if r2 < one && r3 >= one {
        CaseId::Three
    } else if r3 < one && sum >= one && pair >= one_plus_r1 {
        CaseId::Four
    } else if r3 < one && sum >= one && pair < one_plus_r1 {
        CaseId::Five
    } else if r3 < one && sum < one {
        CaseId::Six
    } else {
        unreachable!("the six cases partition every canonical domain")
    }
}

/// Evaluates the formula of `case` on `d` whether or not `d` belongs to it.
/// Adjacent formulas agree on shared boundaries.
pub fn case_formula(case: CaseId, d: &CanonicalDomain) -> Scalar {
    let [r1, r2, r3] = d.ratios();
    let (l1, l2, l3) = (d.l(0), d.l(1), d.l(2));
    let l_sq = l1 * l1 * l2 * l2 * l3 * l3;
    let two = scalar::int(2);
    let eight_thirds = scalar::frac(8, 3);
    match case {
        CaseId::One => eight_thirds * l_sq * (&r1 + &two * &r2 + &two * &r3),
        CaseId::Two => eight_thirds * l_sq * (&two * &r2 + &two * &r3 + scalar::one()),
        CaseId::Three => eight_thirds * l_sq * (&r2 + &two * &r3 + &two),
        CaseId::Four => eight_thirds * l_sq * (&r2 + &r3 + scalar::int(3)),
        CaseId::Five => scalar::frac(4, 3) * l_sq * (&r1 + &r2 + &r3 + scalar::int(7)),
        CaseId::Six => scalar::frac(32, 3) * l_sq,
    }
}

/// Closed-form 4D volume of the hull over a canonical domain.
pub fn hull_volume(d: &CanonicalDomain) -> Scalar {
    case_formula(classify(d), d)
}

/// `(8/3) l1^2 l2^2 l3^2 (r1 + 2 r2 + 2 r3)`, valid only when every lower
/// bound is nonnegative (`c_i >= l_i`).
pub fn hull_volume_nonneg(d: &CanonicalDomain) -> Result<Scalar> {
    if let Some(index) = (0..3).find(|&i| d.c(i) < d.l(i)) {
        return Err(Error::NegativeLowerBound { index: index + 1 });
    }
    Ok(case_formula(CaseId::One, d))
}

/// Sub-case ids of `V(Q,Q,R)` (1..=4), `V(Q,R,R)` (1..=3) and `vol(Q)` (1..=2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subcases {
    pub qqr: u8,
    pub qrr: u8,
    pub volq: u8,
}

pub fn case_subcases(case: CaseId) -> Subcases {
    let (qqr, qrr, volq) = match case {
        CaseId::One => (1, 1, 1),
        CaseId::Two => (2, 2, 1),
        CaseId::Three => (2, 3, 1),
        CaseId::Four => (2, 3, 2),
        CaseId::Five => (3, 3, 2),
        CaseId::Six => (4, 3, 2),
    };
    Subcases { qqr, qrr, volq }
}

/// Every intermediate quantity of the volume pipeline for one domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeReport {
    pub raw: BoxDomain3,
    pub canonical: CanonicalDomain,
    pub normalization: Normalization,
    pub vol_q: Scalar,
    pub vol_r: Scalar,
    pub v_qqr: Scalar,
    pub v_qrr: Scalar,
    /// Sub-cases the pipeline actually selected.
    pub subcases: Subcases,
    pub indicator: Indicator,
    pub z_qqr: ZValueReport,
    pub z_qrr: ZValueReport,
    pub case: CaseId,
    pub closed_form: Scalar,
    pub assembled: Scalar,
}

impl VolumeReport {
    pub fn volume(&self) -> &Scalar {
        &self.closed_form
    }

    /// The selected sub-cases agree with the table row for `case`.
    pub fn subcases_match_table(&self) -> bool {
        self.subcases == case_subcases(self.case)
    }
}

/// Full pipeline on an already-canonical domain.
pub fn breakdown(canonical: &CanonicalDomain) -> VolumeReport {
    let raw = canonical.domain().clone();
    build_report(raw, canonical.clone(), Normalization::identity())
}

/// Normalizes any valid domain and runs the full pipeline. The volume is
/// unchanged by the normalization (reflections and relabelings preserve it).
pub fn hull_volume_any(domain: &BoxDomain3) -> VolumeReport {
    let (canonical, normalization) = domain.normalize();
    build_report(domain.clone(), canonical, normalization)
}

fn build_report(
    raw: BoxDomain3,
    canonical: CanonicalDomain,
    normalization: Normalization,
) -> VolumeReport {
    let d = &canonical;
    let (vol_q, volq_case) = hullgeom::vol3_q(d);
    let vol_r = hullgeom::vol3_r(d);
    let qqr = mixedvol::mixed_volume_qqr(d);
    let qrr = mixedvol::mixed_volume_qrr(d);
    let assembled = mixedvol::assemble_volume(&vol_q, &qqr.value, &qrr.value, &vol_r, d.l(2));
    let case = classify(d);
    let closed_form = case_formula(case, d);
    VolumeReport {
        subcases: Subcases {
            qqr: qqr.subcase,
            qrr: qrr.subcase,
            volq: volq_case,
        },
        indicator: Indicator::of(d),
        z_qqr: mixedvol::z_values_qqr(d),
        z_qrr: mixedvol::z_values_qrr(d),
        vol_q,
        vol_r,
        v_qqr: qqr.value,
        v_qrr: qrr.value,
        case,
        closed_form,
        assembled,
        raw,
        normalization,
        canonical,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn canon(cs: [i64; 3], ls: [i64; 3]) -> CanonicalDomain {
        CanonicalDomain::from_centers([0, 1, 2].map(|i| (int(cs[i]), int(ls[i])))).unwrap()
    }

    fn bounds(b: [(i64, i64); 3]) -> BoxDomain3 {
        BoxDomain3::from_bounds(b.map(|(lo, hi)| (int(lo), int(hi)))).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&canon([1, 2, 5], [3, 1, 2])), CaseId::Two);
        assert_eq!(classify(&canon([0, 0, 0], [1, 1, 1])), CaseId::Six);
        assert_eq!(classify(&canon([2, 3, 4], [1, 1, 1])), CaseId::One);
    }

    #[test]
    fn hull_volume_examples() {
        assert_eq!(hull_volume(&canon([1, 2, 5], [3, 1, 2])), int(960));
        assert_eq!(hull_volume(&canon([0, 0, 0], [1, 1, 1])), frac(32, 3));
        assert_eq!(hull_volume(&canon([2, 3, 4], [1, 1, 1])), frac(128, 3));
    }

    #[test]
    fn any_domain_examples() {
        let rep = hull_volume_any(&bounds([(3, 7), (-2, 4), (-3, -1)]));
        assert_eq!(rep.closed_form, int(960));
        assert_eq!(rep.case, CaseId::Two);
        assert_eq!(rep.normalization.permutation_one_based(), [3, 1, 2]);
        assert_eq!(rep.assembled, rep.closed_form);
        assert!(rep.subcases_match_table());

        let rep = hull_volume_any(&bounds([(-1, 1), (-1, 1), (-1, 1)]));
        assert_eq!(rep.closed_form, frac(32, 3));

        let rep = hull_volume_any(&bounds([(1, 3), (2, 4), (3, 5)]));
        assert_eq!(rep.closed_form, hull_volume_nonneg(&rep.canonical).unwrap());
        // r = (2, 3, 4), l = 1
        assert_eq!(rep.closed_form, frac(128, 3));
    }

    #[test]
    fn nonneg_examples() {
        assert_eq!(
            hull_volume_nonneg(&canon([2, 3, 4], [1, 1, 1])).unwrap(),
            frac(128, 3)
        );
        assert_eq!(
            hull_volume_nonneg(&canon([1, 1, 1], [1, 1, 1])).unwrap(),
            frac(40, 3)
        );
        assert_eq!(hull_volume(&canon([1, 1, 1], [1, 1, 1])), frac(40, 3));
        assert_eq!(
            hull_volume_nonneg(&canon([1, 2, 5], [3, 1, 2])),
            Err(Error::NegativeLowerBound { index: 1 })
        );
    }

    #[test]
    fn table_rows() {
        let row = |c| {
            let s = case_subcases(c);
            (s.qqr, s.qrr, s.volq)
        };
        assert_eq!(row(CaseId::One), (1, 1, 1));
        assert_eq!(row(CaseId::Two), (2, 2, 1));
        assert_eq!(row(CaseId::Three), (2, 3, 1));
        assert_eq!(row(CaseId::Four), (2, 3, 2));
        assert_eq!(row(CaseId::Five), (3, 3, 2));
        assert_eq!(row(CaseId::Six), (4, 3, 2));
    }

    #[test]
    fn case_ids_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(CaseId::from_id(c.id()), Some(c));
        }
        assert_eq!(CaseId::from_id(0), None);
        assert_eq!(CaseId::from_id(7), None);
    }
}
