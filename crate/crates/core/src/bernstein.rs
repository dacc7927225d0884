//! Pointwise Bernstein bound on the Euclidean gradient and the Markov constant.
//!
//! For a fixed sector point the sharp multiplier is the maximum of
//! `‖∇P(x, y)‖₂²` over the extreme points. Along `P_t` (with `u = √(1+t)`)
//! and `Q_s` (with `v = √(2(1+s))`) the squared gradient norm is a quartic in
//! the substituted parameter, and the candidates are its interior critical
//! points and the family endpoints:
//!
//! | curve | extreme point                       | value at `(1, λ)`                  |
//! |-------|-------------------------------------|------------------------------------|
//! | `C1`  | `P_t`, `t = (3λ²+2λ−1)/(1−λ)²`       | `4(1+λ²)`                          |
//! | `C2`  | `P_t`, `t = (5λ²+2λ−3)/(4(1−λ)²)`    | `(3−2λ+3λ²)² / (2(1−λ)²)`          |
//! | `C3`  | `P_{−1}`                            | `4(1+9λ²)`                         |
//! | `C4`  | `P_1`                               | `4[(13+8√2) + (69+48√2)λ² − 2(28+20√2)λ]` |
//! | `C5`  | `Q_s`, `s = (1−2λ²)/(2λ²)`           | `1/λ² + 4(1+λ²)`                   |
//! | `C6`  | `Q_s`, `s = (2−λ²)/λ²`               | `4(1+λ²)`                          |
//! | `C7`  | `Q_1`                               | `4(1+λ²) + 16(1−λ)²`               |
//! | `C8`  | `Q_{5+4√2}`                         | same polynomial as `C4`            |
//!
//! Taking the upper envelope gives the three-branch function implemented by
//! [`phi_squared`]. The tabulated values are squared norms; [`phi`] is the
//! square root, i.e. the multiplier in `‖∇P(x,y)‖₂ ≤ Φ(x,y)·‖P‖`.

use std::f64::consts::SQRT_2;

use crate::branch::BranchCurve;
use crate::consts::{MARKOV_SQUARED, SECTOR_ANGLE, WITNESS};
use crate::error::Result;
use crate::extremals::{
    p_poly, q_poly, scan_extremes, ExtremalParam, Sign, REFINE_ITERS, S_RANGE, T_RANGE,
};
use crate::oracle::{max_1d, max_2d, ScanConfig};
use crate::poly::{Poly, SectorPoint};

/// `(√2 − 1)/2`: end of the first `C4` region.
pub const BOUNDARY_C4_C5: f64 = (SQRT_2 - 1.0) / 2.0;
/// `√2 − 1`: switch from `C5` to `C2`.
pub const BOUNDARY_C5_C2: f64 = SQRT_2 - 1.0;
/// `4√2 − 5`: start of the second `C4` region.
pub const BOUNDARY_C2_C4: f64 = 4.0 * SQRT_2 - 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CCurve {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
}

impl CCurve {
    pub const ALL: [CCurve; 8] = [
        CCurve::C1,
        CCurve::C2,
        CCurve::C3,
        CCurve::C4,
        CCurve::C5,
        CCurve::C6,
        CCurve::C7,
        CCurve::C8,
    ];

    pub fn from_name(name: &str) -> Option<CCurve> {
        CCurve::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(name))
    }
}

fn c4(l: f64) -> f64 {
    4.0 * ((13.0 + 8.0 * SQRT_2) + (69.0 + 48.0 * SQRT_2) * l * l
        - 2.0 * (28.0 + 20.0 * SQRT_2) * l)
}

fn c5(l: f64) -> f64 {
    1.0 / (l * l) + 4.0 * (1.0 + l * l)
}

fn c2(l: f64) -> f64 {
    let num = 3.0 - 2.0 * l + 3.0 * l * l;
    num * num / (2.0 * (1.0 - l) * (1.0 - l))
}

impl BranchCurve for CCurve {
    fn name(&self) -> &'static str {
        match self {
            CCurve::C1 => "C1",
            CCurve::C2 => "C2",
            CCurve::C3 => "C3",
            CCurve::C4 => "C4",
            CCurve::C5 => "C5",
            CCurve::C6 => "C6",
            CCurve::C7 => "C7",
            CCurve::C8 => "C8",
        }
    }

    fn domain(&self) -> (f64, f64) {
        match self {
            CCurve::C1 => (0.0, SQRT_2 - 1.0),
            CCurve::C2 => (1.0 / 3.0, BOUNDARY_C2_C4),
            CCurve::C5 => (BOUNDARY_C4_C5, 0.5),
            CCurve::C6 => (SQRT_2 - 1.0, 1.0),
            CCurve::C3 | CCurve::C4 | CCurve::C7 | CCurve::C8 => (0.0, 1.0),
        }
    }

    fn formula(&self, l: f64) -> f64 {
        match self {
            CCurve::C1 | CCurve::C6 => 4.0 * (1.0 + l * l),
            CCurve::C2 => c2(l),
            CCurve::C3 => 4.0 * (1.0 + 9.0 * l * l),
            CCurve::C4 => c4(l),
            CCurve::C5 => c5(l),
            CCurve::C7 => 4.0 * (1.0 + l * l) + 16.0 * (1.0 - l) * (1.0 - l),
            CCurve::C8 => {
                // ‖∇Q_{5+4√2}(1, λ)‖² in the factored form of the Q-family expansion.
                let k = 12.0 + 8.0 * SQRT_2;
                k * (4.0 + k * l * l - (8.0 + 8.0 * SQRT_2) * l) + 4.0 * (1.0 + l * l)
            }
        }
    }
}

/// Branch of the squared Bernstein bound in force at a given ratio.
pub fn phi_branch(lambda: f64) -> CCurve {
    if lambda <= BOUNDARY_C4_C5 {
        CCurve::C4
    } else if lambda <= BOUNDARY_C5_C2 {
        CCurve::C5
    } else if lambda < BOUNDARY_C2_C4 {
        CCurve::C2
    } else {
        CCurve::C4
    }
}

/// `sup{‖∇P(x,y)‖₂² : ‖P‖ ≤ 1}`, homogeneous of degree 2.
pub fn phi_squared(pt: SectorPoint) -> Result<f64> {
    let (lambda, x) = pt.ratio_and_scale()?;
    Ok(x * x * phi_branch(lambda).formula(lambda))
}

/// Sharp multiplier in `‖∇P(x,y)‖₂ ≤ Φ(x,y)·‖P‖`.
pub fn phi(pt: SectorPoint) -> Result<f64> {
    phi_squared(pt).map(f64::sqrt)
}

pub fn branch_curve_c(id: CCurve, lambda: f64) -> Result<f64> {
    id.value(lambda)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarkovConstant {
    /// `4(13 + 8√2)`, the squared-norm form.
    pub squared: f64,
    /// `√(52 + 32√2)`, the sharp `M` in `‖∇P‖₂ ≤ M‖P‖`.
    pub linear: f64,
    pub witness: Poly,
}

pub fn markov_constant() -> MarkovConstant {
    MarkovConstant {
        squared: MARKOV_SQUARED,
        linear: MARKOV_SQUARED.sqrt(),
        witness: Poly::new(WITNESS.0, WITNESS.1, WITNESS.2),
    }
}

/// Result of [`markov_oracle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarkovScan {
    pub squared: f64,
    pub argmax: ExtremalParam,
    pub theta: f64,
}

fn gradient_norm_sq(p: &Poly, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let [gx, gy] = p.gradient_at(c, s);
    gx * gx + gy * gy
}

/// Brute-force `max ‖∇P(cosθ, sinθ)‖₂²` jointly over the arc and the
/// extreme points, with no reference to the closed-form bound.
pub fn markov_oracle(resolution: usize) -> Result<MarkovScan> {
    let cfg = ScanConfig::new(resolution, REFINE_ITERS);
    let arc = (0.0, SECTOR_ANGLE);
    let mut best: Option<MarkovScan> = None;
    let mut consider = |scan: MarkovScan| match best {
        Some(b) if scan.squared <= b.squared => {}
        _ => best = Some(scan),
    };
    for sign in [Sign::Plus, Sign::Minus] {
        let k = sign.factor();
        let m = max_2d(
            |theta, t| gradient_norm_sq(&(k * p_poly(t)), theta),
            arc,
            T_RANGE,
            &cfg,
        )?;
        consider(MarkovScan {
            squared: m.value,
            argmax: ExtremalParam::P { t: m.arg[1], sign },
            theta: m.arg[0],
        });
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let k = sign.factor();
        let m = max_2d(
            |theta, s| gradient_norm_sq(&(k * q_poly(s)), theta),
            arc,
            S_RANGE,
            &cfg,
        )?;
        consider(MarkovScan {
            squared: m.value,
            argmax: ExtremalParam::Q { s: m.arg[1], sign },
            theta: m.arg[0],
        });
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let corner = ExtremalParam::Corner { sign }.to_poly();
        let m = max_1d(|theta| gradient_norm_sq(&corner, theta), arc.0, arc.1, &cfg)?;
        consider(MarkovScan {
            squared: m.value,
            argmax: ExtremalParam::Corner { sign },
            theta: m.arg,
        });
    }
    Ok(best.expect("at least one family scanned"))
}

/// Oracle for the pointwise bound: `max ‖∇P(pt)‖₂²` over the extreme points.
pub fn phi_squared_oracle(pt: SectorPoint, resolution: usize) -> Result<f64> {
    let scan = scan_extremes(
        |p| {
            let [gx, gy] = p.gradient(pt);
            gx * gx + gy * gy
        },
        resolution,
    )?;
    Ok(scan.value)
}
