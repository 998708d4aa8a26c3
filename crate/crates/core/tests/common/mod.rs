#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trivol_core::formula::{classify, CaseId};
use trivol_core::scalar::{frac, int};
use trivol_core::{BoxDomain3, CanonicalDomain, Scalar};

pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

pub const SIGNS: [[i8; 3]; 8] = [
    [1, 1, 1],
    [-1, 1, 1],
    [1, -1, 1],
    [-1, -1, 1],
    [1, 1, -1],
    [-1, 1, -1],
    [1, -1, -1],
    [-1, -1, -1],
];

pub struct Sample {
    pub raw: BoxDomain3,
    pub canonical: CanonicalDomain,
    pub target: CaseId,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational in `[0, max)` with a small denominator; hits the grid
/// often enough that boundary ties occur.
pub fn ratio(rng: &mut ChaCha8Rng, max: i64) -> Scalar {
    let den = rng.gen_range(1..=12);
    frac(rng.gen_range(0..max * den), den)
}

pub fn half_length(rng: &mut ChaCha8Rng) -> Scalar {
    let den = rng.gen_range(1..=7);
    frac(rng.gen_range(1..=5 * den), den)
}

/// Canonical domain with sorted ratios drawn from `[0, max)` and random
/// half-lengths.
pub fn canonical_in(rng: &mut ChaCha8Rng, max: i64) -> CanonicalDomain {
    let mut rs = [ratio(rng, max), ratio(rng, max), ratio(rng, max)];
    rs.sort();
    let intervals = rs.map(|r| {
        let l = half_length(rng);
        (r * &l, l)
    });
    CanonicalDomain::from_centers(intervals).expect("sorted nonnegative ratios")
}

/// Canonical domain that falls in `case`, by rejection.
pub fn canonical_for_case(rng: &mut ChaCha8Rng, case: CaseId) -> CanonicalDomain {
    let max = if case.id() <= 3 { 3 } else { 1 };
    loop {
        let d = canonical_in(rng, max);
        if classify(&d) == case {
            return d;
        }
    }
}

/// Raw domain that normalizes to a domain with the same ratios as `d`:
/// random reflections and a random relabeling.
pub fn scramble(rng: &mut ChaCha8Rng, d: &CanonicalDomain) -> BoxDomain3 {
    let signs = *SIGNS.choose(rng).unwrap();
    let perm = *PERMUTATIONS.choose(rng).unwrap();
    d.domain().transformed(signs, perm)
}

/// `per_case` domains for each of the six cases, each with a scrambled raw
/// form (mixed-sign bounds included).
pub fn stratified_corpus(seed: u64, per_case: usize) -> Vec<Sample> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(6 * per_case);
    for case in CaseId::ALL {
        for _ in 0..per_case {
            let canonical = canonical_for_case(&mut rng, case);
            let raw = scramble(&mut rng, &canonical);
            out.push(Sample {
                raw,
                canonical,
                target: case,
            });
        }
    }
    out
}

pub fn bounds(b: [(i64, i64); 3]) -> BoxDomain3 {
    BoxDomain3::from_bounds(b.map(|(lo, hi)| (int(lo), int(hi)))).unwrap()
}

/// Ratio triples on the surfaces where two case formulas meet, `n` per
/// adjacent pair, tagged with the pair.
pub fn boundary_points(seed: u64, n: usize) -> Vec<(CaseId, CaseId, [Scalar; 3])> {
    let mut rng = rng(seed);
    let one = || int(1);
    let mut out = Vec::new();
    for _ in 0..n {
        let x = ratio(&mut rng, 1);
        let y = ratio(&mut rng, 1);
        let big = one() + ratio(&mut rng, 2);
        let (lo, hi) = if x <= y {
            (x.clone(), y)
        } else {
            (y, x.clone())
        };
        out.push((CaseId::One, CaseId::Two, [one(), one() + &x, &big + one()]));
        out.push((CaseId::Two, CaseId::Three, [x.clone(), one(), big]));
        out.push((CaseId::Three, CaseId::Four, [lo.clone(), hi.clone(), one()]));
        // with r3 = 1 the 3/5 surface needs r2 + 1 < 1 + r1, so only r1 = r2
        out.push((CaseId::Three, CaseId::Five, [hi.clone(), hi.clone(), one()]));
        // r2 + r3 = 1 + r1 with r1 <= r2 <= r3 < 1 forces r3 >= 1/2
        let r3 = (one() + &hi) / int(2);
        let r1 = &lo * (int(2) * &r3 - one());
        let r2 = one() - &r3 + &r1;
        out.push((CaseId::Four, CaseId::Five, [r1, r2, r3]));
        // r1 + r2 + r3 = 1
        let a = &lo / int(3);
        let b = (one() - &a) * &hi / int(2);
        let c = one() - &a - &b;
        let mut s = [a, b, c];
        s.sort();
        out.push((CaseId::Five, CaseId::Six, s));
        // r1 = 0, r2 + r3 = 1 lies on both the 4/6 and the 5/6 surfaces
        let r2 = &lo / int(2);
        let r3 = one() - &r2;
        out.push((CaseId::Four, CaseId::Six, [int(0), r2, r3]));
    }
    out
}
