//! Unconditional constant of the canonical basis `{x², y², xy}`.
//!
//! The constant is the least `C` with `‖|P|‖ ≤ C‖P‖`, where `|P|` replaces
//! each coefficient by its absolute value. It is found by maximizing
//! `‖|P|‖` over the extreme points of the unit ball.

use crate::consts::WITNESS;
use crate::error::{Error, Result};
use crate::extremals::scan_extremes;
use crate::poly::Poly;

/// `‖|P|‖ / ‖P‖`.
pub fn modulus_norm_ratio(p: &Poly) -> Result<f64> {
    let norm = p.sector_norm();
    if norm == 0.0 {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.modulus().sector_norm() / norm)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnconditionalConstant {
    pub value: f64,
    pub witness: Poly,
}

/// Maximum of [`modulus_norm_ratio`] over the extreme points.
pub fn unconditional_constant(resolution: usize) -> Result<UnconditionalConstant> {
    let scan = scan_extremes(|p| p.modulus().sector_norm(), resolution)?;
    Ok(UnconditionalConstant {
        value: scan.value,
        witness: scan.argmax.to_poly(),
    })
}

/// `‖|P_t|‖ = ½(|t| + 6 + 3t + 8√(1+t))`.
pub fn p_profile(t: f64) -> f64 {
    0.5 * (t.abs() + 6.0 + 3.0 * t + 8.0 * (1.0 + t).sqrt())
}

/// `‖|Q_s|‖ = ½(1 + s + 2√(2(1+s)))`.
pub fn q_profile(s: f64) -> f64 {
    0.5 * (1.0 + s + 2.0 * (2.0 * (1.0 + s)).sqrt())
}

/// All eight coefficient sign patterns `(±a, ±b, ±c)`.
pub fn sign_patterns(p: &Poly) -> [Poly; 8] {
    let mut out = [Poly::ZERO; 8];
    for (mask, slot) in out.iter_mut().enumerate() {
        let flip = |bit: usize| if mask & (1 << bit) != 0 { -1.0 } else { 1.0 };
        *slot = Poly::new(flip(0) * p.a, flip(1) * p.b, flip(2) * p.c);
    }
    out
}

/// The polynomial attaining the constant.
pub fn witness() -> Poly {
    Poly::new(WITNESS.0, WITNESS.1, WITNESS.2)
}
