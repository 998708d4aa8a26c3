//! Incremental 3D convex hull and its volume.
//!
//! Works over exact rationals (orientation signs are exact) or `f64` (an
//! orientation within a relative tolerance of zero counts as coplanar).
//! Slices of the 4D hull contain many coplanar quadruples, so a point is
//! only treated as beyond a face when it is strictly on the outer side.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt::Debug;

use num_traits::{Num, Signed};

use crate::scalar::Scalar;

/// Scalar type the hull can be built over.
pub trait HullField: Clone + PartialOrd + Num + Signed + Debug {
    /// Relative tolerance below which a determinant counts as zero; `None`
    /// for exact arithmetic.
    const TOLERANCE: Option<f64>;

    fn from_usize(n: usize) -> Self;

    fn to_f64_lossy(&self) -> f64;
}

impl HullField for Scalar {
    const TOLERANCE: Option<f64> = None;

    fn from_usize(n: usize) -> Self {
        Scalar::from_integer(n.into())
    }

    fn to_f64_lossy(&self) -> f64 {
        crate::scalar::to_f64(self)
    }
}

impl HullField for f64 {
    const TOLERANCE: Option<f64> = Some(1e-12);

    fn from_usize(n: usize) -> Self {
        n as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

/// A point in `(f, x1, x2)` space: a slice of the 4D hull at fixed `x3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point3<T> {
    pub f: T,
    pub x1: T,
    pub x2: T,
}

impl<T: HullField> Point3<T> {
    pub fn new(f: T, x1: T, x2: T) -> Self {
        Point3 { f, x1, x2 }
    }

    fn sub(&self, o: &Self) -> [T; 3] {
        [
            self.f.clone() - o.f.clone(),
            self.x1.clone() - o.x1.clone(),
            self.x2.clone() - o.x2.clone(),
        ]
    }
}

impl Point3<Scalar> {
    pub fn to_f64(&self) -> Point3<f64> {
        Point3::new(
            crate::scalar::to_f64(&self.f),
            crate::scalar::to_f64(&self.x1),
            crate::scalar::to_f64(&self.x2),
        )
    }
}

fn det3<T: HullField>(u: &[T; 3], v: &[T; 3], w: &[T; 3]) -> T {
    u[0].clone() * (v[1].clone() * w[2].clone() - v[2].clone() * w[1].clone())
        - u[1].clone() * (v[0].clone() * w[2].clone() - v[2].clone() * w[0].clone())
        + u[2].clone() * (v[0].clone() * w[1].clone() - v[1].clone() * w[0].clone())
}

fn l1_norm<T: HullField>(v: &[T; 3]) -> f64 {
    v.iter().map(|x| x.abs().to_f64_lossy()).sum()
}

fn sign_of<T: HullField>(value: &T, scale: impl FnOnce() -> f64) -> Ordering {
    if let Some(tol) = T::TOLERANCE {
        if value.abs().to_f64_lossy() <= tol * scale() {
            return Ordering::Equal;
        }
    }
    value.partial_cmp(&T::zero()).unwrap_or(Ordering::Equal)
}

/// Sign of `det[b-a, c-a, d-a]`. Positive means `d` is on the side the
/// right-handed normal of `(a, b, c)` points to.
fn orient<T: HullField>(a: &Point3<T>, b: &Point3<T>, c: &Point3<T>, d: &Point3<T>) -> Ordering {
    let (u, v, w) = (b.sub(a), c.sub(a), d.sub(a));
    let det = det3(&u, &v, &w);
    sign_of(&det, || l1_norm(&u) * l1_norm(&v) * l1_norm(&w))
}

fn collinear<T: HullField>(a: &Point3<T>, b: &Point3<T>, c: &Point3<T>) -> bool {
    let (u, v) = (b.sub(a), c.sub(a));
    let cross = [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ];
    let scale = l1_norm(&u) * l1_norm(&v);
    cross
        .iter()
        .all(|x| sign_of(x, || scale) == Ordering::Equal)
}

/// Outward-oriented triangles of the hull, as indices into the
/// deduplicated point list. Empty when the points are coplanar.
#[derive(Debug, Clone)]
pub struct Hull3<T> {
    pub points: Vec<Point3<T>>,
    pub faces: Vec<[usize; 3]>,
}

pub fn convex_hull<T: HullField>(points: &[Point3<T>]) -> Hull3<T> {
    let mut pts: Vec<Point3<T>> = Vec::with_capacity(points.len());
    for p in points {
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let empty = |pts| Hull3 {
        points: pts,
        faces: Vec::new(),
    };
    if pts.len() < 4 {
        return empty(pts);
    }
    let i0 = 0;
    let i1 = 1;
    let Some(i2) = (2..pts.len()).find(|&j| !collinear(&pts[i0], &pts[i1], &pts[j])) else {
        return empty(pts);
    };
    let Some(i3) = (2..pts.len())
        .find(|&j| j != i2 && orient(&pts[i0], &pts[i1], &pts[i2], &pts[j]) != Ordering::Equal)
    else {
        return empty(pts);
    };

    let simplex = [i0, i1, i2, i3];
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for skip in 0..4 {
        let opposite = simplex[skip];
        let tri: Vec<usize> = simplex.iter().copied().filter(|&k| k != opposite).collect();
        let mut face = [tri[0], tri[1], tri[2]];
        if orient(&pts[face[0]], &pts[face[1]], &pts[face[2]], &pts[opposite]) == Ordering::Greater
        {
            face.swap(1, 2);
        }
        faces.push(face);
    }

    for p in 0..pts.len() {
        if simplex.contains(&p) {
            continue;
        }
        let visible: Vec<bool> = faces
            .iter()
            .map(|f| orient(&pts[f[0]], &pts[f[1]], &pts[f[2]], &pts[p]) == Ordering::Greater)
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let visible_edges: HashSet<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
            .collect();
        let horizon: Vec<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
            .filter(|&(a, b)| !visible_edges.contains(&(b, a)))
            .collect();
        let mut kept: Vec<[usize; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        kept.extend(horizon.into_iter().map(|(a, b)| [a, b, p]));
        faces = kept;
    }
    Hull3 { points: pts, faces }
}

impl<T: HullField> Hull3<T> {
    /// Fan triangulation from the centroid of the points: the sum of the
    /// cone volumes over every outward face.
    pub fn volume(&self) -> T {
        if self.faces.is_empty() {
            return T::zero();
        }
        let n = T::from_usize(self.points.len());
        let sum = |sel: fn(&Point3<T>) -> &T| {
            self.points
                .iter()
                .fold(T::zero(), |acc, p| acc + sel(p).clone())
        };
        let centroid = Point3::new(
            sum(|p| &p.f) / n.clone(),
            sum(|p| &p.x1) / n.clone(),
            sum(|p| &p.x2) / n,
        );
        let six = T::from_usize(6);
        let total = self.faces.iter().fold(T::zero(), |acc, f| {
            let (a, b, c) = (&self.points[f[0]], &self.points[f[1]], &self.points[f[2]]);
            acc - det3(&b.sub(a), &c.sub(a), &centroid.sub(a))
        });
        total / six
    }
}

/// Volume of the convex hull of `points`; zero when they are coplanar.
pub fn hull3d_volume<T: HullField>(points: &[Point3<T>]) -> T {
    convex_hull(points).volume()
}
