//! Independent volume oracles that never touch the closed form or the
//! mixed-volume pipeline.

pub mod hull3d;
pub mod lp;
pub mod montecarlo;
pub mod quadrature;

pub use montecarlo::{oracle_volume_montecarlo, McEstimate};
pub use quadrature::{
    oracle_volume_quadrature, oracle_volume_quadrature_f64, slice_points, slice_volume,
};
