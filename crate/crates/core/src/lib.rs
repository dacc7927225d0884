//! Sharp polynomial inequalities for 2-homogeneous polynomials
//! `P(x, y) = ax² + by² + cxy` on the `π/4` sector.
//!
//! Every closed form is paired with a brute-force oracle in [`oracle`] and
//! [`extremals`], and [`verify`] runs the full cross-check suite.

pub mod bernstein;
pub mod branch;
pub mod consts;
pub mod error;
pub mod extremals;
pub mod figures;
pub mod oracle;
pub mod polarization;
pub mod poly;
pub mod relations;
pub mod tables;
pub mod unconditional;
pub mod verify;

pub use bernstein::{phi, phi_squared, CCurve};
pub use branch::BranchCurve;
pub use error::{Error, Result};
pub use extremals::{scan_extremes, ExtremalParam, ExtremeScan, Family, Sign};
pub use figures::{Curve, Figure, FigureData};
pub use oracle::{numeric_poly_norm, ScanConfig};
pub use polarization::{bilinear_sup_norm, differential_norm, psi, DCurve};
pub use poly::{Poly, SectorPoint, SymBilinearForm};
pub use tables::{comparison_table, ComparisonTable, TableKind};
pub use verify::{Check, Report, VerifyConfig};
