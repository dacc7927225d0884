//! Sharp bound on the sector norm of the differential `DP(x, y)` and the
//! polarization constant of the space.
//!
//! `DP(x, y)` is the linear form `(u, v) ↦ ∂ₓP·u + ∂ᵧP·v`, so its sector
//! norm is [`sup_linear`] of the gradient. Writing `λ = y/x`,
//! `‖DP_t(x,y)‖ = 2x·sup_θ |f_λ(t, θ)|` and `‖DQ_s(x,y)‖ = 2x·sup_θ |g_λ(s, θ)|`
//! with
//!
//! ```text
//! f_λ(t,θ) = [t − (1+t+2√(1+t))λ] cosθ + [(4+t+4√(1+t))λ − (1+t+2√(1+t))] sinθ
//! g_λ(s,θ) = (1 − √(2(1+s))λ) cosθ + (sλ − √(2(1+s))) sinθ
//! ```
//!
//! The curves `D11..D102` are the candidate suprema of `|f_λ|` and `|g_λ|`
//! from the interior critical points and each edge of the `(t, θ)` and
//! `(s, θ)` rectangles. Their upper envelope, doubled, is [`psi`].

use std::f64::consts::SQRT_2;

use crate::branch::BranchCurve;
use crate::consts::{SECTOR_ANGLE, WITNESS};
use crate::error::Result;
use crate::extremals::scan_extremes;
use crate::oracle::{max_1d, max_2d, ScanConfig};
use crate::poly::{sup_linear, Poly, SectorPoint, SymBilinearForm};

/// `(2√2 − 1)/7`
pub const BOUNDARY_1: f64 = (2.0 * SQRT_2 - 1.0) / 7.0;
/// `√2 − 1`
pub const BOUNDARY_2: f64 = SQRT_2 - 1.0;
/// `2 − √2`
pub const BOUNDARY_3: f64 = 2.0 - SQRT_2;

/// `(3 + 4√2)/23`
const L_A: f64 = (3.0 + 4.0 * SQRT_2) / 23.0;
/// `(6 − 2√2)/7`
const L_B: f64 = (6.0 - 2.0 * SQRT_2) / 7.0;
/// `(5 − 3√2)/7`
const L_C: f64 = (5.0 - 3.0 * SQRT_2) / 7.0;
/// `(2√2 + 1)/7`
const L_D: f64 = (2.0 * SQRT_2 + 1.0) / 7.0;
/// `(1 + √2)/3`
const L_E: f64 = (1.0 + SQRT_2) / 3.0;
/// `(2 − √2)/2`
const L_F: f64 = (2.0 - SQRT_2) / 2.0;

/// Grid for [`bilinear_sup_norm`] when no resolution is given.
pub const BILINEAR_GRID: usize = 512;
/// Golden-section iterations for [`bilinear_sup_norm`].
pub const BILINEAR_REFINE_ITERS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DCurve {
    D11,
    D12,
    D21,
    D22,
    D31,
    D32,
    D41,
    D42,
    D51,
    D52,
    D53,
    D6,
    D71,
    D72,
    D81,
    D82,
    D83,
    D91,
    D92,
    D101,
    D102,
}

impl DCurve {
    pub const ALL: [DCurve; 21] = [
        DCurve::D11,
        DCurve::D12,
        DCurve::D21,
        DCurve::D22,
        DCurve::D31,
        DCurve::D32,
        DCurve::D41,
        DCurve::D42,
        DCurve::D51,
        DCurve::D52,
        DCurve::D53,
        DCurve::D6,
        DCurve::D71,
        DCurve::D72,
        DCurve::D81,
        DCurve::D82,
        DCurve::D83,
        DCurve::D91,
        DCurve::D92,
        DCurve::D101,
        DCurve::D102,
    ];

    pub fn from_name(name: &str) -> Option<DCurve> {
        DCurve::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(name))
    }
}

/// `(√2/2)[(1+2√2) − (3+2√2)λ]`: the `θ = π/4` edge at `t = 1`.
fn top_edge(l: f64) -> f64 {
    SQRT_2 / 2.0 * ((1.0 + 2.0 * SQRT_2) - (3.0 + 2.0 * SQRT_2) * l)
}

/// `(2+2√2)λ − 1`: the `θ = 0` edge at `t = 1`.
fn axis_edge(l: f64) -> f64 {
    (2.0 + 2.0 * SQRT_2) * l - 1.0
}

/// `√(a² + b²)` for the linear form of `P_1 = Q_{5+4√2}` at `(1, λ)`.
fn witness_interior(l: f64) -> f64 {
    ((69.0 + 48.0 * SQRT_2) * l * l - (56.0 + 40.0 * SQRT_2) * l + 13.0 + 8.0 * SQRT_2).sqrt()
}

fn diagonal_edge(l: f64) -> f64 {
    SQRT_2 / 2.0 * (3.0 * l - 1.0)
}

impl BranchCurve for DCurve {
    fn name(&self) -> &'static str {
        match self {
            DCurve::D11 => "D11",
            DCurve::D12 => "D12",
            DCurve::D21 => "D21",
            DCurve::D22 => "D22",
            DCurve::D31 => "D31",
            DCurve::D32 => "D32",
            DCurve::D41 => "D41",
            DCurve::D42 => "D42",
            DCurve::D51 => "D51",
            DCurve::D52 => "D52",
            DCurve::D53 => "D53",
            DCurve::D6 => "D6",
            DCurve::D71 => "D71",
            DCurve::D72 => "D72",
            DCurve::D81 => "D81",
            DCurve::D82 => "D82",
            DCurve::D83 => "D83",
            DCurve::D91 => "D91",
            DCurve::D92 => "D92",
            DCurve::D101 => "D101",
            DCurve::D102 => "D102",
        }
    }

    fn domain(&self) -> (f64, f64) {
        match self {
            DCurve::D11 => (0.0, 1.0),
            DCurve::D12 => (0.0, 0.2),
            DCurve::D21 => (0.0, BOUNDARY_3),
            DCurve::D22 => (BOUNDARY_3, 1.0),
            DCurve::D31 => (0.0, L_D),
            DCurve::D32 => (L_D, 1.0),
            DCurve::D41 => (0.0, L_E),
            DCurve::D42 => (L_E, 1.0),
            DCurve::D51 | DCurve::D81 => (0.0, L_A),
            DCurve::D52 | DCurve::D82 => (L_A, L_B),
            DCurve::D53 | DCurve::D83 => (L_B, 1.0),
            DCurve::D6 => (SQRT_2 - 1.0, 1.0),
            DCurve::D71 => (0.0, L_C),
            DCurve::D72 => (L_C, 1.0),
            DCurve::D91 => (0.0, L_F),
            DCurve::D92 => (L_F, 1.0),
            DCurve::D101 => (0.0, BOUNDARY_1),
            DCurve::D102 => (BOUNDARY_1, 1.0),
        }
    }

    fn formula(&self, l: f64) -> f64 {
        match self {
            DCurve::D11 | DCurve::D6 => (1.0 + l * l).sqrt(),
            DCurve::D12 => {
                (39.0 * l * l - 26.0 * l + 7.0) / (2.0 * (74.0 * l * l - 52.0 * l + 10.0).sqrt())
            }
            DCurve::D21 => 1.0 + l * l / (1.0 - l),
            DCurve::D22 | DCurve::D53 | DCurve::D83 | DCurve::D92 => axis_edge(l),
            DCurve::D31 | DCurve::D51 | DCurve::D81 | DCurve::D101 => top_edge(l),
            DCurve::D32 | DCurve::D42 => diagonal_edge(l),
            DCurve::D41 => 1.0,
            DCurve::D52 | DCurve::D82 => witness_interior(l),
            DCurve::D71 | DCurve::D91 => 1.0 - 2.0 * l,
            DCurve::D72 => SQRT_2 / 2.0 * (1.0 + l),
            DCurve::D102 => SQRT_2 * (1.0 + 3.0 * l * l) / (4.0 * l),
        }
    }
}

pub fn branch_curve_d(id: DCurve, lambda: f64) -> Result<f64> {
    id.value(lambda)
}

/// Branch of `Ψ(1, λ)/2` in force at a given ratio.
pub fn psi_branch(lambda: f64) -> DCurve {
    if lambda < BOUNDARY_1 {
        DCurve::D51
    } else if lambda < BOUNDARY_2 {
        DCurve::D102
    } else if lambda < BOUNDARY_3 {
        DCurve::D21
    } else {
        DCurve::D22
    }
}

/// `sup{‖DP(x,y)‖ : ‖P‖ ≤ 1}`, homogeneous of degree 1.
///
/// ```text
/// √2[(1+2√2)x − (3+2√2)y]   0 ≤ y < ((2√2−1)/7)x
/// √2(x² + 3y²)/(2y)         ((2√2−1)/7)x ≤ y < (√2−1)x
/// 2(x + y²/(x−y))           (√2−1)x ≤ y < (2−√2)x
/// 4(1+√2)y − 2x             (2−√2)x ≤ y ≤ x
/// ```
pub fn psi(pt: SectorPoint) -> Result<f64> {
    let (lambda, x) = pt.ratio_and_scale()?;
    Ok(2.0 * x * psi_branch(lambda).formula(lambda))
}

/// Sector norm of the linear form `DP(pt)`.
pub fn differential_norm(p: &Poly, pt: SectorPoint) -> f64 {
    let [gx, gy] = p.gradient(pt);
    sup_linear(gx, gy)
}

/// `sup_{θ,φ ∈ [0,π/4]} |L(e^{iθ}, e^{iφ})|` by grid scan and refinement.
pub fn bilinear_sup_norm(form: &SymBilinearForm, resolution: usize) -> Result<f64> {
    let cfg = ScanConfig::new(resolution, BILINEAR_REFINE_ITERS);
    let arc = (0.0, SECTOR_ANGLE);
    let m = max_2d(
        |theta, phi| {
            let (s1, c1) = theta.sin_cos();
            let (s2, c2) = phi.sin_cos();
            form.apply([c1, s1], [c2, s2]).abs()
        },
        arc,
        arc,
        &cfg,
    )?;
    Ok(m.value)
}

/// Oracle for [`psi`]: maximum of [`differential_norm`] over the extreme points.
pub fn psi_oracle(pt: SectorPoint, resolution: usize) -> Result<f64> {
    Ok(scan_extremes(|p| differential_norm(p, pt), resolution)?.value)
}

/// Maximum of `Ψ` over the unit arc, with its location.
pub fn psi_arc_max(cfg: &ScanConfig) -> Result<(f64, f64)> {
    let m = max_1d(
        |theta| psi(SectorPoint::from_angle(theta).expect("angle in range")).expect("not origin"),
        0.0,
        SECTOR_ANGLE,
        cfg,
    )?;
    Ok((m.arg, m.value))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationConstant {
    pub value: f64,
    pub witness: Poly,
}

/// `½·max_{arc} Ψ = 2 + √2/2`, attained by `x² + (5+4√2)y² − (4+4√2)xy`.
pub fn polarization_constant() -> Result<PolarizationConstant> {
    let (_, max_psi) = psi_arc_max(&ScanConfig::default())?;
    Ok(PolarizationConstant {
        value: 0.5 * max_psi,
        witness: Poly::new(WITNESS.0, WITNESS.1, WITNESS.2),
    })
}

/// `‖L‖ / ‖P‖` for the polar `L` of `p`, computed numerically.
pub fn polarization_ratio(p: &Poly, resolution: usize) -> Result<f64> {
    let norm = p.sector_norm();
    if norm == 0.0 {
        return Err(crate::error::Error::ZeroPolynomial);
    }
    Ok(bilinear_sup_norm(&p.polar(), resolution)? / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::{POLARIZATION, PSI_MAX};
    use crate::error::Error;

    fn pt(x: f64, y: f64) -> SectorPoint {
        SectorPoint::new(x, y).unwrap()
    }

    fn witness() -> Poly {
        Poly::new(WITNESS.0, WITNESS.1, WITNESS.2)
    }

    #[test]
    fn psi_examples() {
        assert!((psi(pt(1.0, 0.0)).unwrap() - PSI_MAX).abs() < 1e-12);
        let d = SectorPoint::from_angle(SECTOR_ANGLE).unwrap();
        assert!((psi(d).unwrap() - PSI_MAX).abs() < 1e-12);
        assert!((psi(pt(1.0, 0.5)).unwrap() - 3.0).abs() < 1e-12);
        assert!((psi(pt(1.0, 0.3)).unwrap() - SQRT_2 * 1.27 / 0.6).abs() < 1e-12);
        assert_eq!(psi(pt(0.0, 0.0)), Err(Error::Origin));
    }

    #[test]
    fn differential_norm_examples() {
        assert_eq!(
            differential_norm(&Poly::new(1.0, 1.0, 0.0), pt(1.0, 0.0)),
            2.0
        );
        let d = SectorPoint::from_angle(SECTOR_ANGLE).unwrap();
        assert!((differential_norm(&witness(), d) - PSI_MAX).abs() < 1e-12);
        assert_eq!(differential_norm(&Poly::ZERO, d), 0.0);
    }

    #[test]
    fn branch_curve_examples() {
        assert_eq!(branch_curve_d(DCurve::D11, 0.0).unwrap(), 1.0);
        assert!((branch_curve_d(DCurve::D22, 1.0).unwrap() - (1.0 + 2.0 * SQRT_2)).abs() < 1e-15);
        assert!((branch_curve_d(DCurve::D102, 1.0).unwrap() - SQRT_2).abs() < 1e-15);
        assert!(branch_curve_d(DCurve::D21, 0.9).is_err());
        assert!(branch_curve_d(DCurve::D102, 0.01).is_err());
        assert!(branch_curve_d(DCurve::D12, 0.5).is_err());
    }

    #[test]
    fn psi_is_continuous_at_branch_boundaries() {
        for (b, left, right) in [
            (BOUNDARY_1, DCurve::D51, DCurve::D102),
            (BOUNDARY_2, DCurve::D102, DCurve::D21),
            (BOUNDARY_3, DCurve::D21, DCurve::D22),
        ] {
            let gap = (left.formula(b) - right.formula(b)).abs();
            assert!(
                gap < 1e-9,
                "{} / {} at {b}: {gap}",
                left.name(),
                right.name()
            );
        }
    }

    #[test]
    fn psi_matches_oracle_at_sample_points() {
        for l in [0.0, 0.1, 0.27, 0.3, 0.42, 0.5, 0.7, 1.0] {
            let p = pt(1.0, l);
            let closed = psi(p).unwrap();
            let oracle = psi_oracle(p, 512).unwrap();
            assert!(
                (closed - oracle).abs() <= 1e-6 * closed,
                "λ={l}: {closed} vs {oracle}"
            );
        }
    }

    #[test]
    fn bilinear_examples() {
        let id = Poly::new(1.0, 1.0, 0.0).polar();
        assert!((bilinear_sup_norm(&id, 128).unwrap() - 1.0).abs() < 1e-12);
        let w = bilinear_sup_norm(&witness().polar(), BILINEAR_GRID).unwrap();
        assert!((w - POLARIZATION).abs() < 1e-6);
        assert_eq!(
            bilinear_sup_norm(&SymBilinearForm::default(), 16).unwrap(),
            0.0
        );
    }

    #[test]
    fn polarization_constant_value() {
        let k = polarization_constant().unwrap();
        assert!((k.value - 2.707_106_781).abs() < 1e-9);
        let d = SectorPoint::from_angle(SECTOR_ANGLE).unwrap();
        assert!((0.5 * psi(d).unwrap() - k.value).abs() < 1e-9);
        let r = polarization_ratio(&Poly::new(1.0, 1.0, 0.0), 128).unwrap();
        assert!((r - 1.0).abs() < 1e-12 && r <= k.value);
        assert!(polarization_ratio(&Poly::ZERO, 16).is_err());
    }

    #[test]
    fn polar_identity() {
        let p = Poly::new(1.3, -2.1, 0.7);
        let l = p.polar();
        let (u, v) = ([0.3, -1.2], [2.0, 0.4]);
        let plus = p.eval(u[0] + v[0], u[1] + v[1]);
        let minus = p.eval(u[0] - v[0], u[1] - v[1]);
        assert!((l.apply(u, v) - 0.25 * (plus - minus)).abs() < 1e-12);
    }
}
