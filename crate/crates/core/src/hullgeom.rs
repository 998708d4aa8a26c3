//! The eight extreme points of the hull, the tetrahedra `Q` and `R`, their
//! volumes, their area-weighted outer facet normals, and support functions.
//!
//! Coordinates are ordered `(f, x1, x2, x3)` with `f = x1 * x2 * x3` at every
//! vertex.

use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::boxdom::{BoxDomain3, CanonicalDomain};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point4 {
    pub f: Scalar,
    pub x1: Scalar,
    pub x2: Scalar,
    pub x3: Scalar,
}

impl Point4 {
    pub fn new(f: Scalar, x1: Scalar, x2: Scalar, x3: Scalar) -> Self {
        Point4 { f, x1, x2, x3 }
    }

    pub fn zero() -> Self {
        Point4::new(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
        )
    }

    pub fn dot(&self, other: &Point4) -> Scalar {
        &self.f * &other.f + &self.x1 * &other.x1 + &self.x2 * &other.x2 + &self.x3 * &other.x3
    }

    pub fn norm_squared(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, s: &Scalar) -> Point4 {
        Point4::new(&self.f * s, &self.x1 * s, &self.x2 * s, &self.x3 * s)
    }

    pub fn coords(&self) -> [&Scalar; 4] {
        [&self.f, &self.x1, &self.x2, &self.x3]
    }
}

impl Add for &Point4 {
    type Output = Point4;
    fn add(self, o: &Point4) -> Point4 {
        Point4::new(
            &self.f + &o.f,
            &self.x1 + &o.x1,
            &self.x2 + &o.x2,
            &self.x3 + &o.x3,
        )
    }
}

impl Sub for &Point4 {
    type Output = Point4;
    fn sub(self, o: &Point4) -> Point4 {
        Point4::new(
            &self.f - &o.f,
            &self.x1 - &o.x1,
            &self.x2 - &o.x2,
            &self.x3 - &o.x3,
        )
    }
}

impl Neg for &Point4 {
    type Output = Point4;
    fn neg(self) -> Point4 {
        Point4::new(-&self.f, -&self.x1, -&self.x2, -&self.x3)
    }
}

/// `v1..v8`: bit 0 of the zero-based index selects the upper bound of `x1`,
/// bit 1 of `x2`, bit 2 of `x3`. So `v1` is the all-lower corner and `v8`
/// the all-upper one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullVertices {
    pub v: [Point4; 8],
}

impl HullVertices {
    /// One-based, matching the `v1..v8` labels.
    pub fn get(&self, label: usize) -> &Point4 {
        &self.v[label - 1]
    }
}

pub fn extreme_points(domain: &BoxDomain3) -> HullVertices {
    let bounds = domain.bounds();
    let v = std::array::from_fn(|k| {
        let pick = |i: usize| {
            if (k >> i) & 1 == 1 {
                bounds[i].1.clone()
            } else {
                bounds[i].0.clone()
            }
        };
        let (x1, x2, x3) = (pick(0), pick(1), pick(2));
        Point4::new(&x1 * &x2 * &x3, x1, x2, x3)
    });
    HullVertices { v }
}

/// Four vertices sharing one `x3` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tetra {
    pub vertices: [Point4; 4],
    /// One-based vertex labels in the full hull (`1..=4` for Q, `5..=8` for R).
    pub labels: [usize; 4],
    pub plane_x3: Scalar,
}

impl Tetra {
    pub fn new(vertices: [Point4; 4], labels: [usize; 4]) -> Self {
        let plane_x3 = vertices[0].x3.clone();
        assert!(
            vertices.iter().all(|p| p.x3 == plane_x3),
            "tetrahedron vertices must share x3"
        );
        Tetra {
            vertices,
            labels,
            plane_x3,
        }
    }
}

/// `Q = conv{v1..v4}` on `x3 = c3 - l3`, `R = conv{v5..v8}` on `x3 = c3 + l3`.
pub fn split_qr(verts: &HullVertices) -> (Tetra, Tetra) {
    let q = Tetra::new(std::array::from_fn(|i| verts.v[i].clone()), [1, 2, 3, 4]);
    let r = Tetra::new(
        std::array::from_fn(|i| verts.v[i + 4].clone()),
        [5, 6, 7, 8],
    );
    (q, r)
}

/// Signed `det[b-a, c-a, d-a]` in `(f, x1, x2)`.
pub(crate) fn det3_fx(a: &Point4, b: &Point4, c: &Point4, d: &Point4) -> Scalar {
    let e = |p: &Point4| [&p.f - &a.f, &p.x1 - &a.x1, &p.x2 - &a.x2];
    let (u, v, w) = (e(b), e(c), e(d));
    &u[0] * (&v[1] * &w[2] - &v[2] * &w[1]) - &u[1] * (&v[0] * &w[2] - &v[2] * &w[0])
        + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0])
}

/// 3D volume of the simplex inside its `x3` hyperplane, `|det| / 6`.
///
/// `Q` is flat when `c3 = l3` (every vertex has `f = 0`), so zero is a
/// legitimate result there.
pub fn tetra_volume_det(t: &Tetra) -> Scalar {
    let [a, b, c, d] = &t.vertices;
    det3_fx(a, b, c, d).abs() / scalar::int(6)
}

fn eight_thirds_l1sq_l2sq(d: &CanonicalDomain) -> Scalar {
    let (l1, l2) = (d.l(0), d.l(1));
    scalar::frac(8, 3) * l1 * l1 * l2 * l2
}

/// Closed-form `vol(Q)`; the sub-case is 1 when `c3/l3 >= 1`, else 2.
pub fn vol3_q(d: &CanonicalDomain) -> (Scalar, u8) {
    let (c3, l3) = (d.c(2), d.l(2));
    if c3 >= l3 {
        (eight_thirds_l1sq_l2sq(d) * (c3 - l3), 1)
    } else {
        (eight_thirds_l1sq_l2sq(d) * (l3 - c3), 2)
    }
}

pub fn vol3_r(d: &CanonicalDomain) -> Scalar {
    eight_thirds_l1sq_l2sq(d) * (d.c(2) + d.l(2))
}

/// Set when `c3/l3 < 1`. The normals of `Q` flip orientation there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Indicator(bool);

impl Indicator {
    pub fn of(d: &CanonicalDomain) -> Self {
        Indicator(d.c(2) < d.l(2))
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }

    pub fn is_set(self) -> bool {
        self.0
    }
}

/// The unscaled facet directions `u1..u8` (zero-based array).
///
/// `u1..u4` belong to `Q` (built with `x3 = c3 - l3`), `u5..u8` to `R`
/// (`x3 = c3 + l3`). Each has a zero `x3` component.
pub fn facet_directions(d: &CanonicalDomain) -> [Point4; 8] {
    let (c1, c2, c3) = (d.c(0), d.c(1), d.c(2));
    let (l1, l2, l3) = (d.l(0), d.l(1), d.l(2));
    let a1 = c1 - l1;
    let b1 = c1 + l1;
    let a2 = c2 - l2;
    let b2 = c2 + l2;
    let one = scalar::one();
    let zero = Scalar::zero();
    let family = |s: Scalar| {
        [
            Point4::new(one.clone(), -(&a2 * &s), -(&b1 * &s), zero.clone()),
            Point4::new(one.clone(), -(&b2 * &s), -(&a1 * &s), zero.clone()),
            Point4::new(-one.clone(), &b2 * &s, &b1 * &s, zero.clone()),
            Point4::new(-one.clone(), &a2 * &s, &a1 * &s, zero.clone()),
        ]
    };
    let [u1, u2, u3, u4] = family(c3 - l3);
    let [u5, u6, u7, u8] = family(c3 + l3);
    [u1, u2, u3, u4, u5, u6, u7, u8]
}

/// Four area-weighted outer facet normals: each vector's length equals the
/// area of its facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSet {
    pub normals: [Point4; 4],
}

impl NormalSet {
    pub fn sum(&self) -> Point4 {
        self.normals.iter().fold(Point4::zero(), |acc, n| &acc + n)
    }
}

/// `(-1)^I * 2 l1 l2 * {u1, u2, u3, u4}`.
pub fn outer_normals_q(d: &CanonicalDomain) -> (NormalSet, Indicator) {
    let ind = Indicator::of(d);
    let mut scale = scalar::int(2) * d.l(0) * d.l(1);
    if ind.is_set() {
        scale = -scale;
    }
    let u = facet_directions(d);
    let normals = std::array::from_fn(|i| u[i].scale(&scale));
    (NormalSet { normals }, ind)
}

/// `2 l1 l2 * {u5, u6, u7, u8}`; never flipped.
pub fn outer_normals_r(d: &CanonicalDomain) -> NormalSet {
    let scale = scalar::int(2) * d.l(0) * d.l(1);
    let u = facet_directions(d);
    NormalSet {
        normals: std::array::from_fn(|i| u[i + 4].scale(&scale)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub value: Scalar,
    /// One-based hull label of the maximizing vertex (lowest on ties).
    pub vertex: usize,
}

/// `h_T(u) = max over the four vertices of v . u`.
pub fn support(t: &Tetra, u: &Point4) -> Support {
    let mut best = Support {
        value: t.vertices[0].dot(u),
        vertex: t.labels[0],
    };
    for (p, &label) in t.vertices.iter().zip(&t.labels).skip(1) {
        let value = p.dot(u);
        if value > best.value {
            best = Support {
                value,
                vertex: label,
            };
        }
    }
    best
}
