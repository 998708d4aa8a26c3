//! Cross-section quadrature: the 4D volume as the integral over `x3` of the
//! 3D volume of the slice `(1-t) Q + t R`, computed from explicit slice hulls
//! without any closed form.

use crate::boxdom::BoxDomain3;
use crate::hullgeom;
use crate::oracle::hull3d::{hull3d_volume, HullField, Point3};
use crate::scalar::{self, Scalar};

/// The 16 points `(1-t) q_i + t r_j` projected to `(f, x1, x2)`. Their hull
/// is the cross-section of the 4D hull at `x3 = (1-t)(c3-l3) + t(c3+l3)`.
pub fn slice_points(domain: &BoxDomain3, t: &Scalar) -> Vec<Point3<Scalar>> {
    let verts = hullgeom::extreme_points(domain);
    let (q, r) = verts.v.split_at(4);
    let s = scalar::one() - t;
    let mut out = Vec::with_capacity(16);
    for qi in q {
        for rj in r {
            out.push(Point3::new(
                &s * &qi.f + t * &rj.f,
                &s * &qi.x1 + t * &rj.x1,
                &s * &qi.x2 + t * &rj.x2,
            ));
        }
    }
    out
}

pub fn slice_volume(domain: &BoxDomain3, t: &Scalar) -> Scalar {
    hull3d_volume(&slice_points(domain, t))
}

pub fn slice_volume_f64(domain: &BoxDomain3, t: &Scalar) -> f64 {
    let pts: Vec<Point3<f64>> = slice_points(domain, t).iter().map(Point3::to_f64).collect();
    hull3d_volume(&pts)
}

/// Simpson 3/8 on nodes `t = 0, 1/3, 2/3, 1`; exact for the cubic integrand.
fn simpson_three_eighths<T: HullField>(g: [T; 4], half_length: T) -> T {
    let three = T::from_usize(3);
    let width = half_length.clone() + half_length;
    let [g0, g1, g2, g3] = g;
    width / T::from_usize(8) * (g0 + three.clone() * g1 + three * g2 + g3)
}

fn nodes() -> [Scalar; 4] {
    [
        scalar::int(0),
        scalar::frac(1, 3),
        scalar::frac(2, 3),
        scalar::int(1),
    ]
}

/// Slice-hull volumes at the four quadrature nodes.
pub fn slice_samples(domain: &BoxDomain3) -> [Scalar; 4] {
    nodes().map(|t| slice_volume(domain, &t))
}

/// Exact 4D hull volume from four slice hulls. Any valid domain works;
/// no normalization is needed.
pub fn oracle_volume_quadrature(domain: &BoxDomain3) -> Scalar {
    simpson_three_eighths(slice_samples(domain), domain.half_length(2).clone())
}

/// Same as [`oracle_volume_quadrature`] with the slice hulls built in `f64`.
pub fn oracle_volume_quadrature_f64(domain: &BoxDomain3) -> f64 {
    let g = nodes().map(|t| slice_volume_f64(domain, &t));
    simpson_three_eighths(g, scalar::to_f64(domain.half_length(2)))
}

/// Value at `t` of the cubic through `(0, g0), (1/3, g1), (2/3, g2), (1, g3)`.
pub fn cubic_through_nodes(g: &[Scalar; 4], t: &Scalar) -> Scalar {
    let xs = nodes();
    let mut total = scalar::zero();
    for i in 0..4 {
        let mut basis = scalar::one();
        for j in 0..4 {
            if i != j {
                basis *= (t - &xs[j]) / (&xs[i] - &xs[j]);
            }
        }
        total += &g[i] * basis;
    }
    total
}
