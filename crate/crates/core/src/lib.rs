//! Exact volume of the convex hull of the graph of `x1 * x2 * x3` over a box.
//!
//! The hull is a 4D polytope with eight vertices. Splitting them by the value
//! of `x3` gives two tetrahedra `Q` (lower face) and `R` (upper face); the 4D
//! volume is the integral over `x3` of the 3D volume of the Minkowski
//! combination of the two, which is a cubic in the mixed volumes
//! `V(Q,Q,R)` and `V(Q,R,R)`. This crate computes every piece of that
//! pipeline in exact rational arithmetic, the six-case closed form that
//! summarizes it, and two brute-force oracles (slice-hull quadrature and
//! Monte-Carlo membership) that check it independently.
//!
//! ```
//! use trivol_core::{boxdom::BoxDomain3, formula, scalar::parse_scalar};
//!
//! let b = |s: &str| parse_scalar(s).unwrap();
//! let domain = BoxDomain3::from_bounds([
//!     (b("3"), b("7")),
//!     (b("-2"), b("4")),
//!     (b("-3"), b("-1")),
//! ])
//! .unwrap();
//! let report = formula::hull_volume_any(&domain);
//! assert_eq!(report.closed_form, b("960"));
//! assert_eq!(report.case.id(), 2);
//! ```

pub mod boxdom;
pub mod error;
pub mod formula;
pub mod hullgeom;
pub mod mixedvol;
pub mod oracle;
pub mod scalar;

pub use boxdom::{BoxDomain3, CanonicalDomain, Interval, Normalization};
pub use error::{Error, Result};
pub use formula::{CaseId, VolumeReport};
pub use scalar::Scalar;
