//! Full closed-form versus oracle cross-check suite.
//!
//! Each [`Check`] reduces to a single worst-case gap compared against a
//! tolerance. A tolerance override applies to every check at once, which is
//! how the CLI exposes `--tolerance`.

use rayon::prelude::*;

use crate::bernstein::{
    markov_oracle, phi_squared, phi_squared_oracle, CCurve, BOUNDARY_C2_C4, BOUNDARY_C4_C5,
    BOUNDARY_C5_C2,
};
use crate::branch::BranchCurve;
use crate::consts::{MARKOV_SQUARED, POLARIZATION, PSI_MAX, SECTOR_ANGLE, UNCONDITIONAL};
use crate::error::{Error, Result};
use crate::extremals::{p_family, q_family, DEFAULT_RESOLUTION, S_RANGE, T_RANGE};
use crate::oracle::{numeric_poly_norm, random_polys, random_unit_polys, ScanConfig};
use crate::polarization::{
    bilinear_sup_norm, psi, psi_arc_max, psi_oracle, DCurve, BILINEAR_GRID, BOUNDARY_1, BOUNDARY_2,
    BOUNDARY_3,
};
use crate::poly::{Poly, SectorPoint};
use crate::relations::all_relations;
use crate::unconditional::{
    modulus_norm_ratio, p_profile, q_profile, sign_patterns, unconditional_constant, witness,
};

/// Points on the arc used by the pointwise sharpness checks.
pub const ARC_POINTS: usize = 64;
/// Grid size for the extreme-point sphere and profile checks.
pub const FAMILY_POINTS: usize = 1000;
/// Grid size for the dominance relation checks.
pub const RELATION_POINTS: usize = 200;
/// Grid used by the joint Markov scan.
pub const MARKOV_GRID: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Size of each random corpus.
    pub samples: usize,
    /// Replaces every per-check tolerance when set.
    pub tolerance: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            samples: 1000,
            tolerance: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub tolerance: f64,
    /// Worst observed gap; the check passes when `gap ≤ tolerance`.
    pub gap: f64,
    pub passed: bool,
    /// Input at which the worst gap occurred.
    pub worst_case: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Running maximum of a gap together with a description of where it occurred.
struct Worst {
    gap: f64,
    at: String,
}

impl Worst {
    fn new() -> Self {
        Worst {
            gap: f64::NEG_INFINITY,
            at: String::new(),
        }
    }

    fn update(&mut self, gap: f64, at: impl FnOnce() -> String) {
        // NaN gaps must surface as failures
        if gap > self.gap || gap.is_nan() && !self.gap.is_nan() {
            self.gap = gap;
            self.at = at();
        }
    }
}

fn rel_err(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(f64::MIN_POSITIVE)
}

fn arc_points() -> Vec<(f64, SectorPoint)> {
    (0..ARC_POINTS)
        .map(|i| {
            let theta = SECTOR_ANGLE * i as f64 / (ARC_POINTS - 1) as f64;
            (
                theta,
                SectorPoint::from_angle(theta).expect("angle in range"),
            )
        })
        .collect()
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| {
        if i + 1 == n {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    })
}

struct Suite {
    cfg: VerifyConfig,
    checks: Vec<Check>,
}

impl Suite {
    fn push(&mut self, name: &str, tolerance: f64, worst: Worst) {
        let tolerance = self.cfg.tolerance.unwrap_or(tolerance);
        let passed = worst.gap <= tolerance;
        self.checks.push(Check {
            name: name.to_string(),
            tolerance,
            gap: worst.gap,
            passed,
            worst_case: worst.at,
        });
    }
}

pub fn run(cfg: &VerifyConfig) -> Result<Report> {
    if let Some(t) = cfg.tolerance {
        if t.is_nan() || t < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be non-negative, got {t}"
            )));
        }
    }
    let mut suite = Suite {
        cfg: *cfg,
        checks: Vec::new(),
    };
    let polys = random_polys(cfg.seed, cfg.samples);
    norm_checks(&mut suite, &polys)?;
    bernstein_checks(&mut suite)?;
    bernstein_sampled(&mut suite, cfg)?;
    markov_check(&mut suite)?;
    psi_checks(&mut suite)?;
    polarization_checks(&mut suite, &polys)?;
    unconditional_checks(&mut suite, &polys)?;
    relation_checks(&mut suite)?;
    profile_checks(&mut suite)?;
    Ok(Report {
        checks: suite.checks,
    })
}

fn norm_checks(suite: &mut Suite, polys: &[Poly]) -> Result<()> {
    let oracle_cfg = ScanConfig::default();
    let oracle = polys
        .par_iter()
        .map(|p| numeric_poly_norm(p, &oracle_cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut w = Worst::new();
    for (p, numeric) in polys.iter().zip(oracle) {
        let closed = p.sector_norm();
        w.update((closed - numeric).abs() / closed.max(1.0), || {
            format!("P = {p}")
        });
    }
    suite.push("norm: closed form vs oracle", 1e-6, w);

    let mut w = Worst::new();
    for t in grid(T_RANGE.0, T_RANGE.1, FAMILY_POINTS) {
        let p = p_family(t)?;
        w.update((p.sector_norm() - 1.0).abs(), || format!("P_t, t = {t}"));
    }
    for s in grid(S_RANGE.0, S_RANGE.1, FAMILY_POINTS) {
        let q = q_family(s)?;
        w.update((q.sector_norm() - 1.0).abs(), || format!("Q_s, s = {s}"));
    }
    suite.push("extremals: unit norm on both families", 1e-12, w);
    Ok(())
}

fn grad_sq(p: &Poly, pt: SectorPoint) -> f64 {
    let [gx, gy] = p.gradient(pt);
    gx * gx + gy * gy
}

fn bernstein_checks(suite: &mut Suite) -> Result<()> {
    let points = arc_points();
    let oracle = points
        .par_iter()
        .map(|(_, pt)| phi_squared_oracle(*pt, DEFAULT_RESOLUTION))
        .collect::<Result<Vec<_>>>()?;
    let mut w = Worst::new();
    for ((theta, pt), o) in points.iter().zip(oracle) {
        w.update(rel_err(phi_squared(*pt)?, o), || format!("theta = {theta}"));
    }
    suite.push("bernstein: pointwise bound vs oracle", 1e-6, w);

    let mut w = Worst::new();
    for (lambda, lhs, rhs) in [
        (BOUNDARY_C4_C5, CCurve::C4, CCurve::C5),
        (BOUNDARY_C5_C2, CCurve::C5, CCurve::C2),
        (BOUNDARY_C2_C4, CCurve::C2, CCurve::C4),
    ] {
        let gap = (lhs.value(lambda)? - rhs.value(lambda)?).abs();
        w.update(gap, || {
            format!("{}/{} at lambda = {lambda}", lhs.name(), rhs.name())
        });
    }
    suite.push("bernstein: branch continuity", 1e-9, w);
    Ok(())
}

/// `‖∇P(v)‖² ≤ Φ²(v)` for unit-norm random `P` at every arc point.
fn bernstein_sampled(suite: &mut Suite, cfg: &VerifyConfig) -> Result<()> {
    let units = random_unit_polys(cfg.seed, cfg.samples);
    let points = arc_points();
    let bounds = points
        .iter()
        .map(|(_, pt)| phi_squared(*pt))
        .collect::<Result<Vec<_>>>()?;
    let mut w = Worst::new();
    for p in &units {
        for ((theta, pt), bound) in points.iter().zip(&bounds) {
            let excess = (grad_sq(p, *pt) - bound) / bound;
            w.update(excess, || format!("P = {p}, theta = {theta}"));
        }
    }
    suite.push(
        "bernstein: random unit polynomials respect the bound",
        1e-9,
        w,
    );
    Ok(())
}

fn markov_check(suite: &mut Suite) -> Result<()> {
    let scan = markov_oracle(MARKOV_GRID)?;
    let mut w = Worst::new();
    w.update(rel_err(scan.squared, MARKOV_SQUARED), || {
        format!("oracle max at {} theta = {}", scan.argmax, scan.theta)
    });
    let witness_value = grad_sq(&witness(), SectorPoint::new(1.0, 0.0)?);
    w.update(rel_err(witness_value, MARKOV_SQUARED), || {
        "witness at (1, 0)".to_string()
    });
    suite.push("markov: global maximum and witness", 1e-6, w);
    Ok(())
}

fn psi_checks(suite: &mut Suite) -> Result<()> {
    let points = arc_points();
    let oracle = points
        .par_iter()
        .map(|(_, pt)| psi_oracle(*pt, DEFAULT_RESOLUTION))
        .collect::<Result<Vec<_>>>()?;
    let mut w = Worst::new();
    for ((theta, pt), o) in points.iter().zip(oracle) {
        w.update(rel_err(psi(*pt)?, o), || format!("theta = {theta}"));
    }
    suite.push("differential: pointwise bound vs oracle", 1e-6, w);

    let mut w = Worst::new();
    let (arg, max) = psi_arc_max(&ScanConfig::default())?;
    w.update((max - PSI_MAX).abs(), || {
        format!("arc maximum at theta = {arg}")
    });
    let at_diagonal = psi(SectorPoint::from_angle(SECTOR_ANGLE)?)?;
    w.update((at_diagonal - PSI_MAX).abs(), || "theta = pi/4".to_string());
    suite.push("differential: arc maximum", 1e-9, w);

    let mut w = Worst::new();
    for (lambda, lhs, rhs) in [
        (BOUNDARY_1, DCurve::D51, DCurve::D102),
        (BOUNDARY_2, DCurve::D102, DCurve::D21),
        (BOUNDARY_3, DCurve::D21, DCurve::D22),
    ] {
        let gap = (lhs.value(lambda)? - rhs.value(lambda)?).abs();
        w.update(gap, || {
            format!("{}/{} at lambda = {lambda}", lhs.name(), rhs.name())
        });
    }
    suite.push("differential: branch continuity", 1e-9, w);
    Ok(())
}

fn polarization_checks(suite: &mut Suite, polys: &[Poly]) -> Result<()> {
    let mut w = Worst::new();
    let value = bilinear_sup_norm(&witness().polar(), BILINEAR_GRID)?;
    w.update((value - POLARIZATION).abs(), || {
        "polar of the witness".to_string()
    });
    suite.push("polarization: witness attains the constant", 1e-6, w);

    let ratios = polys
        .par_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            Ok((
                *p,
                bilinear_sup_norm(&p.polar(), BILINEAR_GRID)? / p.sector_norm(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut w = Worst::new();
    for (p, r) in ratios {
        w.update((r - POLARIZATION) / POLARIZATION, || format!("P = {p}"));
    }
    suite.push(
        "polarization: random polynomials respect the bound",
        1e-6,
        w,
    );
    Ok(())
}

fn unconditional_checks(suite: &mut Suite, polys: &[Poly]) -> Result<()> {
    let scan = unconditional_constant(DEFAULT_RESOLUTION)?;
    let mut w = Worst::new();
    w.update((scan.value - UNCONDITIONAL).abs(), || {
        format!("maximizer {}", scan.witness)
    });
    suite.push("unconditional: extreme-point scan", 1e-9, w);

    let mut w = Worst::new();
    let mut corpus: Vec<Poly> = polys.iter().filter(|p| !p.is_zero()).copied().collect();
    corpus.extend(sign_patterns(&witness()));
    for p in &corpus {
        let r = modulus_norm_ratio(p)?;
        w.update((r - UNCONDITIONAL) / UNCONDITIONAL, || format!("P = {p}"));
    }
    suite.push(
        "unconditional: random polynomials and sign patterns",
        1e-9,
        w,
    );
    Ok(())
}

fn relation_checks(suite: &mut Suite) -> Result<()> {
    let mut w = Worst::new();
    for r in all_relations() {
        let g = r.worst_gap(RELATION_POINTS)?;
        w.update(g.gap, || format!("{} at lambda = {}", r.label, g.lambda));
    }
    suite.push("dominance relations", 1e-9, w);
    Ok(())
}

fn profile_checks(suite: &mut Suite) -> Result<()> {
    let mut w = Worst::new();
    for t in grid(T_RANGE.0, T_RANGE.1, FAMILY_POINTS) {
        let live = p_family(t)?.modulus().sector_norm();
        w.update((live - p_profile(t)).abs(), || format!("P_t, t = {t}"));
    }
    for s in grid(S_RANGE.0, S_RANGE.1, FAMILY_POINTS) {
        let live = q_family(s)?.modulus().sector_norm();
        w.update((live - q_profile(s)).abs(), || format!("Q_s, s = {s}"));
    }
    suite.push("unconditional: family profiles", 1e-12, w);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let cfg = VerifyConfig {
            seed: 7,
            samples: 10,
            tolerance: None,
        };
        let a = run(&cfg).unwrap();
        assert!(a.passed(), "{:#?}", a.failures().collect::<Vec<_>>());
        let b = run(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_tolerance_reports_float_gaps() {
        let cfg = VerifyConfig {
            seed: 7,
            samples: 10,
            tolerance: Some(0.0),
        };
        let report = run(&cfg).unwrap();
        assert!(!report.passed());
        for c in report.failures() {
            assert!(c.gap > 0.0 && c.gap < 1e-6, "{}: {}", c.name, c.gap);
            assert!(!c.worst_case.is_empty());
        }
    }

    #[test]
    fn negative_tolerance_is_rejected() {
        let cfg = VerifyConfig {
            tolerance: Some(-1.0),
            ..Default::default()
        };
        assert!(matches!(run(&cfg), Err(Error::InvalidConfig(_))));
    }
}
