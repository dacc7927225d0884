//! Algebraic constants that recur throughout the sector computations.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

/// Upper end of the sector, in radians.
pub const SECTOR_ANGLE: f64 = FRAC_PI_4;

/// `5 + 4√2`: right end of the `Q_s` family and the unconditional constant.
pub const Q_MAX: f64 = 5.0 + 4.0 * SQRT_2;

/// `52 + 32√2 = 4(13 + 8√2)`: the squared Markov constant.
pub const MARKOV_SQUARED: f64 = 52.0 + 32.0 * SQRT_2;

/// `4 + √2`: maximum of the differential bound over the unit arc.
pub const PSI_MAX: f64 = 4.0 + SQRT_2;

/// `2 + √2/2`: the polarization constant.
pub const POLARIZATION: f64 = 2.0 + SQRT_2 / 2.0;

/// `5 + 4√2`: the unconditional constant of the canonical basis.
pub const UNCONDITIONAL: f64 = Q_MAX;

/// The extremal polynomial `x² + (5+4√2)y² − (4+4√2)xy` attaining every sharp constant.
pub const WITNESS: (f64, f64, f64) = (1.0, Q_MAX, -4.0 - 4.0 * SQRT_2);
