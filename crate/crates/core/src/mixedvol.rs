//! Mixed volumes `V(Q,Q,R)` and `V(Q,R,R)` and the 4D assembly.
//!
//! Each mixed volume is a third of the sum of the support function of one
//! tetrahedron over the area-weighted facet normals of the other. The support
//! values ("z-values") are computed here by brute-force maximization; the
//! closed forms are evaluated separately and the two routes are compared in
//! debug builds and in the test suites.

use crate::boxdom::CanonicalDomain;
use crate::hullgeom::{self, Point4};
use crate::scalar::{self, Scalar};

/// Support value of one facet direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZEntry {
    /// One-based direction label `1..=8`.
    pub normal: usize,
    pub value: Scalar,
    /// Brute-force argmax vertex (one-based, lowest label on ties).
    pub chosen_vertex: usize,
    /// Vertex the case analysis says attains the maximum.
    pub predicted_vertex: usize,
    /// Condition that selects `predicted_vertex`.
    pub branch: &'static str,
}

impl ZEntry {
    /// Inner product at the predicted vertex, with the same sign convention
    /// as `value`.
    pub fn predicted_value(&self, d: &CanonicalDomain, negated: bool) -> Scalar {
        let verts = hullgeom::extreme_points(d);
        let u = &hullgeom::facet_directions(d)[self.normal - 1];
        let dot = verts.get(self.predicted_vertex).dot(u);
        if negated {
            -dot
        } else {
            dot
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZValueReport {
    pub entries: [ZEntry; 4],
    /// True when the directions were negated (`Q` normals with `I = 1`).
    pub negated: bool,
}

impl ZValueReport {
    pub fn sum(&self) -> Scalar {
        self.entries.iter().map(|e| &e.value).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedVolumeResult {
    pub value: Scalar,
    pub subcase: u8,
}

struct Ratios {
    r1: Scalar,
    r2: Scalar,
    r3: Scalar,
}

impl Ratios {
    fn of(d: &CanonicalDomain) -> Self {
        let [r1, r2, r3] = d.ratios();
        Ratios { r1, r2, r3 }
    }

    fn sum(&self) -> Scalar {
        &self.r1 + &self.r2 + &self.r3
    }

    /// `r2 + r3 >= 1 + r1`
    fn upper_pair_dominates(&self) -> bool {
        &self.r2 + &self.r3 >= scalar::one() + &self.r1
    }
}

fn predicted_qqr(i: usize, r: &Ratios, negated: bool) -> (usize, &'static str) {
    let one = scalar::one();
    match (i, negated) {
        (1, false) => (8, "+u1: always v8"),
        (2, false) => (8, "+u2: always v8"),
        (3, false) => (7, "+u3: always v7"),
        (4, false) if r.r1 >= one => (5, "+u4: r1 >= 1 -> v5"),
        (4, false) => (7, "+u4: r1 < 1 -> v7"),
        (1, true) if r.upper_pair_dominates() => (7, "-u1: r2+r3 >= 1+r1 -> v7"),
        (1, true) => (6, "-u1: r2+r3 < 1+r1 -> v6"),
        (2, true) => (7, "-u2: always v7"),
        (3, true) => (8, "-u3: always v8"),
        (4, true) if r.sum() >= one => (8, "-u4: r1+r2+r3 >= 1 -> v8"),
        (4, true) => (5, "-u4: r1+r2+r3 < 1 -> v5"),
        _ => unreachable!("Q has four facet directions"),
    }
}

fn predicted_qrr(i: usize, r: &Ratios) -> (usize, &'static str) {
    let one = scalar::one();
    match i {
        5 if r.r2 >= one => (1, "u5: r2 >= 1 -> v1"),
        5 => (2, "u5: r2 < 1 -> v2"),
        6 if r.r1 >= one => (1, "u6: r1 >= 1 -> v1"),
        6 => (3, "u6: r1 < 1 -> v3"),
        7 => (4, "u7: always v4"),
        8 if r.r2 >= one => (2, "u8: r2 >= 1 -> v2"),
        8 => (1, "u8: r2 < 1 -> v1"),
        _ => unreachable!("R has four facet directions"),
    }
}

/// `z_i = h_R(+-u_i)` for `i = 1..4`, negated when `c3/l3 < 1`.
pub fn z_values_qqr(d: &CanonicalDomain) -> ZValueReport {
    let (_, r_tet) = hullgeom::split_qr(&hullgeom::extreme_points(d));
    let negated = hullgeom::Indicator::of(d).is_set();
    let dirs = hullgeom::facet_directions(d);
    let ratios = Ratios::of(d);
    let entries = std::array::from_fn(|k| {
        let i = k + 1;
        let dir: Point4 = if negated { -&dirs[k] } else { dirs[k].clone() };
        let s = hullgeom::support(&r_tet, &dir);
        let (predicted_vertex, branch) = predicted_qqr(i, &ratios, negated);
        ZEntry {
            normal: i,
            value: s.value,
            chosen_vertex: s.vertex,
            predicted_vertex,
            branch,
        }
    });
    ZValueReport { entries, negated }
}

/// `z_i = h_Q(u_i)` for `i = 5..8`.
pub fn z_values_qrr(d: &CanonicalDomain) -> ZValueReport {
    let (q_tet, _) = hullgeom::split_qr(&hullgeom::extreme_points(d));
    let dirs = hullgeom::facet_directions(d);
    let ratios = Ratios::of(d);
    let entries = std::array::from_fn(|k| {
        let i = k + 5;
        let s = hullgeom::support(&q_tet, &dirs[i - 1]);
        let (predicted_vertex, branch) = predicted_qrr(i, &ratios);
        ZEntry {
            normal: i,
            value: s.value,
            chosen_vertex: s.vertex,
            predicted_vertex,
            branch,
        }
    });
    ZValueReport {
        entries,
        negated: false,
    }
}

/// `(2 l1 l2 / 3) * sum of z`.
pub fn mixed_volume_from_z(d: &CanonicalDomain, z: &ZValueReport) -> Scalar {
    scalar::frac(2, 3) * d.l(0) * d.l(1) * z.sum()
}

/// Shared by both mixed volumes when `c1/l1 >= 1`:
/// `(8/3) l1 l2 (c3 l1 l2 + l3 (2 c2 l1 + c1 l2))`.
fn both_lower_ratios_large(d: &CanonicalDomain) -> Scalar {
    let (c1, c2, c3) = (d.c(0), d.c(1), d.c(2));
    let (l1, l2, l3) = (d.l(0), d.l(1), d.l(2));
    let two = scalar::int(2);
    scalar::frac(8, 3) * l1 * l2 * (c3 * l1 * l2 + l3 * (&two * c2 * l1 + c1 * l2))
}

/// `(8/3) l1^2 l2 (2 c2 l3 + l2 (c3 + l3))`.
fn middle_ratio_large(d: &CanonicalDomain) -> Scalar {
    let (c2, c3) = (d.c(1), d.c(2));
    let (l1, l2, l3) = (d.l(0), d.l(1), d.l(2));
    scalar::frac(8, 3) * l1 * l1 * l2 * (scalar::int(2) * c2 * l3 + l2 * (c3 + l3))
}

/// Closed form of `V(Q,Q,R)` with its four sub-cases, tested in order.
pub fn mixed_volume_qqr_closed(d: &CanonicalDomain) -> MixedVolumeResult {
    let r = Ratios::of(d);
    let one = scalar::one();
    let (c1, c2, c3) = (d.c(0), d.c(1), d.c(2));
    let (l1, l2, l3) = (d.l(0), d.l(1), d.l(2));
    let eight_thirds = scalar::frac(8, 3);
    let (value, subcase) = if r.r1 >= one {
        (both_lower_ratios_large(d), 1)
    } else if r.sum() >= one && r.upper_pair_dominates() {
        (middle_ratio_large(d), 2)
    } else if r.sum() >= one {
        let v = eight_thirds * l1 * l2 * l3 * (c2 * l1 + l2 * (c1 + scalar::int(2) * l1));
        (v, 3)
    } else {
        let v = eight_thirds * l1 * l1 * l2 * l2 * (scalar::int(3) * l3 - c3);
        (v, 4)
    };
    MixedVolumeResult { value, subcase }
}

/// Closed form of `V(Q,R,R)` with its three sub-cases.
pub fn mixed_volume_qrr_closed(d: &CanonicalDomain) -> MixedVolumeResult {
    let r = Ratios::of(d);
    let one = scalar::one();
    let (value, subcase) = if r.r1 >= one {
        (both_lower_ratios_large(d), 1)
    } else if r.r2 >= one {
        (middle_ratio_large(d), 2)
    } else {
        let (l1, l2, l3) = (d.l(0), d.l(1), d.l(2));
        let v = scalar::frac(8, 3) * l1 * l1 * l2 * l2 * (d.c(2) + scalar::int(3) * l3);
        (v, 3)
    };
    MixedVolumeResult { value, subcase }
}

/// `V(Q,Q,R)` by its closed form. Debug builds also check it against the
/// z-value sum.
pub fn mixed_volume_qqr(d: &CanonicalDomain) -> MixedVolumeResult {
    let res = mixed_volume_qqr_closed(d);
    debug_assert_eq!(res.value, mixed_volume_from_z(d, &z_values_qqr(d)));
    res
}

/// `V(Q,R,R)` by its closed form. Debug builds also check it against the
/// z-value sum.
pub fn mixed_volume_qrr(d: &CanonicalDomain) -> MixedVolumeResult {
    let res = mixed_volume_qrr_closed(d);
    debug_assert_eq!(res.value, mixed_volume_from_z(d, &z_values_qrr(d)));
    res
}

/// Integral over `x3` of the cubic Bernstein combination. Each of the four
/// Bernstein weights integrates to `2 l3 / 4`, so the result is
/// `(l3 / 2)(volQ + V(Q,Q,R) + V(Q,R,R) + volR)`.
pub fn assemble_volume(
    vol_q: &Scalar,
    v_qqr: &Scalar,
    v_qrr: &Scalar,
    vol_r: &Scalar,
    l3: &Scalar,
) -> Scalar {
    l3 / scalar::int(2) * (vol_q + v_qqr + v_qrr + vol_r)
}
