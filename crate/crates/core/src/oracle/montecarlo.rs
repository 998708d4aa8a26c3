//! Rejection-sampling estimate of the hull volume.
//!
//! Points are drawn uniformly from the bounding box
//! `[f_min, f_max] x [a1, b1] x [a2, b2] x [a3, b3]`, where the `f` range
//! comes from the extreme points. Membership is decided by [`lp_membership`].
//!
//! RNG: ChaCha8 seeded with `seed`, one stream per batch of
//! [`BATCH_SIZE`] samples (`set_stream(batch_index)`). Batches run in
//! parallel and only their hit counts are merged, so the result depends on
//! `(seed, samples)` alone.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boxdom::BoxDomain3;
use crate::hullgeom;
use crate::oracle::lp::lp_membership;
use crate::scalar::to_f64;

pub const BATCH_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    /// Binomial standard error of `estimate`; zero for a single sample.
    pub std_error: f64,
    pub samples: u64,
    pub hits: u64,
    pub seed: u64,
    pub bounding_volume: f64,
}

fn batch_hits(
    lo: &[f64; 4],
    hi: &[f64; 4],
    verts: &[[f64; 4]; 8],
    seed: u64,
    batch: u64,
    n: u64,
) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    let mut hits = 0;
    for _ in 0..n {
        let p: [f64; 4] = std::array::from_fn(|i| rng.gen_range(lo[i]..=hi[i]));
        if lp_membership(&p, verts) {
            hits += 1;
        }
    }
    hits
}

pub fn oracle_volume_montecarlo(domain: &BoxDomain3, samples: u64, seed: u64) -> McEstimate {
    let verts = hullgeom::extreme_points(domain)
        .v
        .map(|p| p.coords().map(to_f64));
    let mut lo = [f64::INFINITY; 4];
    let mut hi = [f64::NEG_INFINITY; 4];
    for v in &verts {
        for i in 0..4 {
            lo[i] = lo[i].min(v[i]);
            hi[i] = hi[i].max(v[i]);
        }
    }
    let bounding_volume: f64 = (0..4).map(|i| hi[i] - lo[i]).product();

    let batches = samples.div_ceil(BATCH_SIZE);
    let hits: u64 = (0..batches)
        .into_par_iter()
        .map(|b| {
            let n = BATCH_SIZE.min(samples - b * BATCH_SIZE);
            batch_hits(&lo, &hi, &verts, seed, b, n)
        })
        .sum();

    let (estimate, std_error) = if samples == 0 {
        (0.0, 0.0)
    } else {
        let n = samples as f64;
        let p = hits as f64 / n;
        let se = if samples > 1 {
            (p * (1.0 - p) * n / (n - 1.0)).sqrt() * bounding_volume / n.sqrt()
        } else {
            0.0
        };
        (p * bounding_volume, se)
    };
    McEstimate {
        estimate,
        std_error,
        samples,
        hits,
        seed,
        bounding_volume,
    }
}
