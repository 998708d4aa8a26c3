//! Embedded golden checks. Stops at the first failure and names it.

use serde_json::{json, Value};
use trivol_core::formula::{classify, hull_volume_nonneg, CaseId};
use trivol_core::oracle::oracle_volume_quadrature;
use trivol_core::scalar::{fmt_exact, frac, int, Scalar};
use trivol_core::{BoxDomain3, CanonicalDomain};

use crate::{envelope, ClosedForm, Output, EXIT_OK, EXIT_VERIFY_FAILED};

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn bounds(b: [(i64, i64); 3]) -> BoxDomain3 {
    BoxDomain3::from_bounds(b.map(|(lo, hi)| (int(lo), int(hi)))).expect("valid golden bounds")
}

fn canonical(c: [Scalar; 3], l: [Scalar; 3]) -> CanonicalDomain {
    let [c1, c2, c3] = c;
    let [l1, l2, l3] = l;
    CanonicalDomain::from_centers([(c1, l1), (c2, l2), (c3, l3)]).expect("canonical golden domain")
}

/// One canonical domain strictly inside each case region.
pub fn case_domains() -> [(CaseId, CanonicalDomain); 6] {
    [
        (
            CaseId::One,
            canonical([int(2), int(3), int(4)], [int(1), int(1), int(1)]),
        ),
        (
            CaseId::Two,
            canonical([int(1), int(2), int(5)], [int(3), int(1), int(2)]),
        ),
        (
            CaseId::Three,
            canonical([frac(1, 4), frac(1, 2), int(3)], [int(1), int(1), int(2)]),
        ),
        (
            CaseId::Four,
            canonical(
                [frac(1, 4), frac(3, 2), frac(3, 4)],
                [int(1), int(2), int(1)],
            ),
        ),
        (
            CaseId::Five,
            canonical([int(1), frac(1, 2), frac(3, 2)], [int(2), int(1), int(2)]),
        ),
        (
            CaseId::Six,
            canonical([int(0), frac(1, 2), frac(1, 2)], [int(1), int(2), int(1)]),
        ),
    ]
}

fn evaluate(f: ClosedForm, d: &CanonicalDomain) -> Scalar {
    f(classify(d), d)
}

/// Runs the checks in order, stopping after the first failure.
pub fn checks(f: ClosedForm) -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |c: Check| {
        let ok = c.passed;
        out.push(c);
        ok
    };

    let (d, norm) = bounds([(3, 7), (-2, 4), (-3, -1)]).normalize();
    let v = evaluate(f, &d);
    let case = classify(&d);
    if !push(check(
        "golden-960",
        v == int(960) && case == CaseId::Two && norm.permutation_one_based() == [3, 1, 2],
        format!("volume {}, case {case}, {norm}", fmt_exact(&v)),
    )) {
        return out;
    }

    let (d, _) = bounds([(-1, 1), (-1, 1), (-1, 1)]).normalize();
    let v = evaluate(f, &d);
    if !push(check(
        "symmetric-box",
        v == frac(32, 3) && classify(&d) == CaseId::Six,
        format!("volume {}, case {}", fmt_exact(&v), classify(&d)),
    )) {
        return out;
    }

    let nonneg = [
        bounds([(1, 3), (2, 4), (3, 5)]),
        bounds([(0, 2), (1, 7), (5, 6)]),
        bounds([(-9, -2), (4, 5), (1, 3)]),
    ];
    let mismatch = nonneg.iter().find_map(|b| {
        let (d, _) = b.normalize();
        let v = evaluate(f, &d);
        let simple = hull_volume_nonneg(&d).expect("nonnegative golden bounds");
        (v != simple).then(|| format!("{} vs {}", fmt_exact(&v), fmt_exact(&simple)))
    });
    if !push(check(
        "nonneg-agreement",
        mismatch.is_none(),
        mismatch.unwrap_or_else(|| format!("{} domains agree", nonneg.len())),
    )) {
        return out;
    }

    for (case, d) in case_domains() {
        let v = evaluate(f, &d);
        let q = oracle_volume_quadrature(d.domain());
        let name = format!("case{}-oracle", case.id());
        let ok = classify(&d) == case && v == q;
        if !push(check(
            name,
            ok,
            format!(
                "closed form {}, quadrature {}",
                fmt_exact(&v),
                fmt_exact(&q)
            ),
        )) {
            return out;
        }
    }
    out
}

pub fn run(f: ClosedForm, json: bool) -> Output {
    let results = checks(f);
    let failed = results.iter().find(|c| !c.passed).map(|c| c.name.clone());
    let stdout = if json {
        let list: Vec<Value> = results
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        envelope::render(
            &json!({
                "schema_version": envelope::SCHEMA_VERSION,
                "command": "selftest",
                "passed": failed.is_none(),
                "failed_check": failed,
                "checks": list,
            }),
            true,
        )
    } else {
        let mut s = String::new();
        for c in &results {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            s.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
        }
        match &failed {
            None => s.push_str(&format!("selftest passed ({} checks)\n", results.len())),
            Some(name) => s.push_str(&format!("selftest failed at {name}\n")),
        }
        s
    };
    Output {
        stdout,
        stderr: failed
            .as_ref()
            .map(|n| format!("selftest: check {n} failed\n"))
            .unwrap_or_default(),
        code: if failed.is_none() {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    }
}
