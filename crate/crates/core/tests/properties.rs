mod common;

use proptest::prelude::*;
use trivol_core::formula::{
    case_formula, case_subcases, classify, hull_volume, hull_volume_any, hull_volume_nonneg,
};
use trivol_core::hullgeom::{
    extreme_points, outer_normals_q, outer_normals_r, split_qr, support, tetra_volume_det, vol3_q,
    vol3_r, NormalSet, Point4, Tetra,
};
use trivol_core::mixedvol::{
    mixed_volume_from_z, mixed_volume_qqr, mixed_volume_qrr, z_values_qqr, z_values_qrr,
};
use trivol_core::oracle::hull3d::{hull3d_volume, Point3};
use trivol_core::oracle::quadrature::{cubic_through_nodes, slice_samples, slice_volume};
use trivol_core::scalar::{abs, frac, int, one, zero};
use trivol_core::{BoxDomain3, CanonicalDomain, Scalar};

fn rational(
    num: std::ops::Range<i64>,
    den: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = Scalar> {
    (num, den).prop_map(|(n, d)| frac(n, d))
}

fn positive() -> impl Strategy<Value = Scalar> {
    rational(1..40, 1..=8)
}

fn raw_domain() -> impl Strategy<Value = BoxDomain3> {
    proptest::array::uniform3((rational(-60..60, 1..=8), positive()))
        .prop_map(|iv| BoxDomain3::from_centers(iv).unwrap())
}

fn canonical() -> impl Strategy<Value = CanonicalDomain> {
    raw_domain().prop_map(|d| d.normalize().0)
}

/// Ratios biased toward the region where the cases change.
fn canonical_small() -> impl Strategy<Value = CanonicalDomain> {
    proptest::array::uniform3((rational(0..30, 1..=10), positive())).prop_map(|mut iv| {
        iv.sort_by(|a, b| a.0.cmp(&b.0));
        CanonicalDomain::from_centers(iv.map(|(r, l)| (r * &l, l))).unwrap()
    })
}

fn ratio_multiset(d: &BoxDomain3) -> Vec<Scalar> {
    let mut v: Vec<Scalar> = (0..3)
        .map(|i| abs(d.center(i)) / d.half_length(i))
        .collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<Scalar>) -> Vec<Scalar> {
    v.sort();
    v
}

/// `(f, x1, x2)` cross product of two edges; its squared length is four
/// times the squared triangle area.
fn cross_fx(a: &Point4, b: &Point4, c: &Point4) -> [Scalar; 3] {
    let u = [&b.f - &a.f, &b.x1 - &a.x1, &b.x2 - &a.x2];
    let v = [&c.f - &a.f, &c.x1 - &a.x1, &c.x2 - &a.x2];
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn check_normal_set(t: &Tetra, set: &NormalSet) -> Result<(), TestCaseError> {
    prop_assert_eq!(set.sum(), Point4::zero());
    for n in &set.normals {
        let dots: Vec<Scalar> = t.vertices.iter().map(|v| v.dot(n)).collect();
        let max = dots.iter().max().unwrap().clone();
        let on: Vec<usize> = (0..4).filter(|&k| dots[k] == max).collect();
        prop_assert_eq!(on.len(), 3, "facet of {:?}", n);
        let off = (0..4).find(|k| !on.contains(k)).unwrap();
        // outer: the opposite vertex is strictly below the facet
        prop_assert!(dots[off] < max);
        let [a, b, c] = [&t.vertices[on[0]], &t.vertices[on[1]], &t.vertices[on[2]]];
        for e in [b - a, c - a] {
            prop_assert_eq!(e.dot(n), zero());
        }
        let cr = cross_fx(a, b, c);
        let area_sq = (&cr[0] * &cr[0] + &cr[1] * &cr[1] + &cr[2] * &cr[2]) / int(4);
        prop_assert_eq!(n.norm_squared(), area_sq);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normalize_is_idempotent(d in raw_domain()) {
        let (c, _) = d.normalize();
        let (again, rec) = c.domain().normalize();
        prop_assert_eq!(&again, &c);
        prop_assert!(rec.is_identity());
    }

    #[test]
    fn normalize_preserves_multisets(d in raw_domain()) {
        let (c, _) = d.normalize();
        prop_assert_eq!(
            sorted((0..3).map(|i| d.half_length(i).clone()).collect()),
            sorted((0..3).map(|i| c.half_length(i).clone()).collect())
        );
        prop_assert_eq!(
            sorted((0..3).map(|i| abs(d.center(i))).collect()),
            sorted((0..3).map(|i| c.center(i).clone()).collect())
        );
        prop_assert_eq!(ratio_multiset(&d), ratio_multiset(c.domain()));
    }

    #[test]
    fn normalize_output_is_ordered(d in raw_domain()) {
        let (c, _) = d.normalize();
        let [r1, r2, r3] = c.ratios();
        prop_assert!(r1 <= r2 && r2 <= r3);
        prop_assert!(r1 >= zero());
    }

    #[test]
    fn normalize_round_trips(d in raw_domain()) {
        let (c, rec) = d.normalize();
        prop_assert_eq!(rec.restore(c.domain()), d);
    }

    #[test]
    fn vertices_lie_on_the_graph(d in raw_domain()) {
        for v in &extreme_points(&d).v {
            prop_assert_eq!(&v.f, &(&v.x1 * &v.x2 * &v.x3));
        }
    }

    #[test]
    fn tetra_volumes_match_determinants(d in canonical()) {
        let (q, r) = split_qr(&extreme_points(&d));
        prop_assert_eq!(tetra_volume_det(&q), vol3_q(&d).0);
        prop_assert_eq!(tetra_volume_det(&r), vol3_r(&d));
    }

    #[test]
    fn normals_are_outer_area_weighted_and_closed(d in canonical()) {
        let (q, r) = split_qr(&extreme_points(&d));
        check_normal_set(&r, &outer_normals_r(&d))?;
        if d.c(2) != d.l(2) {
            check_normal_set(&q, &outer_normals_q(&d).0)?;
        } else {
            prop_assert_eq!(outer_normals_q(&d).0.sum(), Point4::zero());
        }
    }

    #[test]
    fn support_is_sublinear(
        d in canonical(),
        u in proptest::array::uniform4(rational(-20..20, 1..=5)),
        w in proptest::array::uniform4(rational(-20..20, 1..=5)),
        lambda in rational(0..20, 1..=5),
    ) {
        let (q, r) = split_qr(&extreme_points(&d));
        let [a, b, c, e] = u;
        let u = Point4::new(a, b, c, e);
        let [a, b, c, e] = w;
        let w = Point4::new(a, b, c, e);
        for t in [&q, &r] {
            prop_assert_eq!(support(t, &u.scale(&lambda)).value, &lambda * support(t, &u).value);
            prop_assert!(support(t, &(&u + &w)).value <= support(t, &u).value + support(t, &w).value);
            prop_assert_eq!(support(t, &Point4::zero()).value, zero());
        }
    }

    #[test]
    fn z_sums_give_mixed_volumes(d in canonical_small()) {
        let zq = z_values_qqr(&d);
        let zr = z_values_qrr(&d);
        prop_assert_eq!(mixed_volume_from_z(&d, &zq), mixed_volume_qqr(&d).value);
        prop_assert_eq!(mixed_volume_from_z(&d, &zr), mixed_volume_qrr(&d).value);
        prop_assert!(mixed_volume_qqr(&d).value > zero());
        prop_assert!(mixed_volume_qrr(&d).value > zero());
    }

    #[test]
    fn argmax_matches_predicted_branch(d in canonical_small()) {
        let zq = z_values_qqr(&d);
        for e in &zq.entries {
            prop_assert_eq!(&e.value, &e.predicted_value(&d, zq.negated), "{}", e.branch);
        }
        for e in &z_values_qrr(&d).entries {
            prop_assert_eq!(&e.value, &e.predicted_value(&d, false), "{}", e.branch);
        }
    }

    #[test]
    fn mixed_volumes_survive_renormalization(d in raw_domain(), s in 0usize..8, p in 0usize..6) {
        let a = d.normalize().0;
        let b = d.transformed(common::SIGNS[s], common::PERMUTATIONS[p]).normalize().0;
        prop_assert_eq!(mixed_volume_qqr(&a).value, mixed_volume_qqr(&b).value);
        prop_assert_eq!(mixed_volume_qrr(&a).value, mixed_volume_qrr(&b).value);
    }

    #[test]
    fn every_domain_is_in_exactly_one_case(d in canonical_small()) {
        let [r1, r2, r3] = d.ratios();
        let o = one();
        let sum = &r1 + &r2 + &r3;
        let pair = &r2 + &r3;
        let holds = [
            r1 >= o,
            r1 < o && r2 >= o,
            r2 < o && r3 >= o,
            r3 < o && sum >= o && pair >= &o + &r1,
            r3 < o && sum >= o && pair < &o + &r1,
            r3 < o && sum < o,
        ];
        // Case 1 implies r2, r3 >= 1, so the printed conditions are disjoint
        // once case 2 is read as r1 < 1.
        prop_assert_eq!(holds.iter().filter(|&&h| h).count(), 1);
        let idx = holds.iter().position(|&h| h).unwrap();
        prop_assert_eq!(classify(&d).id() as usize, idx + 1);
    }

    #[test]
    fn pipeline_and_table_agree(d in canonical_small()) {
        let rep = hull_volume_any(d.domain());
        prop_assert_eq!(&rep.closed_form, &rep.assembled);
        prop_assert_eq!(rep.subcases, case_subcases(rep.case));
    }

    #[test]
    fn volume_scales_quadratically_in_one_variable(
        d in raw_domain(),
        i in 0usize..3,
        s in rational(1..30, 1..=6),
    ) {
        let mut iv: [(Scalar, Scalar); 3] = std::array::from_fn(|k| (d.center(k).clone(), d.half_length(k).clone()));
        iv[i] = (&iv[i].0 * &s, &iv[i].1 * &s);
        let scaled = BoxDomain3::from_centers(iv).unwrap();
        prop_assert_eq!(
            hull_volume_any(&scaled).closed_form,
            &s * &s * hull_volume_any(&d).closed_form
        );
    }

    #[test]
    fn nonnegative_boxes_use_the_simple_formula(d in canonical()) {
        match hull_volume_nonneg(&d) {
            Ok(v) => prop_assert_eq!(v, hull_volume(&d)),
            Err(_) => prop_assert!((0..3).any(|i| d.c(i) < d.l(i))),
        }
    }

    #[test]
    fn hull3d_ignores_order_and_interior_points(d in canonical(), t in rational(0..7, 6..=6), rot in 0usize..16) {
        let pts = trivol_core::oracle::slice_points(d.domain(), &t);
        let base = hull3d_volume(&pts);
        let mut shuffled = pts.clone();
        shuffled.rotate_left(rot);
        shuffled.reverse();
        prop_assert_eq!(hull3d_volume(&shuffled), base.clone());
        let n = int(pts.len() as i64);
        let centroid = Point3::new(
            pts.iter().map(|p| &p.f).sum::<Scalar>() / &n,
            pts.iter().map(|p| &p.x1).sum::<Scalar>() / &n,
            pts.iter().map(|p| &p.x2).sum::<Scalar>() / &n,
        );
        let mid = Point3::new(
            (&pts[0].f + &pts[5].f) / int(2),
            (&pts[0].x1 + &pts[5].x1) / int(2),
            (&pts[0].x2 + &pts[5].x2) / int(2),
        );
        shuffled.push(centroid);
        shuffled.insert(3, mid);
        prop_assert_eq!(hull3d_volume(&shuffled), base);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn slices_start_at_q_and_end_at_r(d in canonical_small()) {
        prop_assert_eq!(slice_volume(d.domain(), &zero()), vol3_q(&d).0);
        prop_assert_eq!(slice_volume(d.domain(), &one()), vol3_r(&d));
    }

    #[test]
    fn slice_volume_is_cubic(d in canonical_small()) {
        let g = slice_samples(d.domain());
        let t = frac(1, 2);
        prop_assert_eq!(slice_volume(d.domain(), &t), cubic_through_nodes(&g, &t));
    }
}

#[test]
fn adjacent_case_formulas_agree_on_shared_boundaries() {
    let ls = [frac(3, 2), int(1), frac(2, 3)];
    for (a, b, r) in common::boundary_points(5, 60) {
        let d =
            CanonicalDomain::from_centers(std::array::from_fn(|i| (&r[i] * &ls[i], ls[i].clone())))
                .unwrap();
        assert_eq!(case_formula(a, &d), case_formula(b, &d), "{a}/{b} at {r:?}");
    }
}
