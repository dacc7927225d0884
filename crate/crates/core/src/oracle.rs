//! Brute-force global maximizers used to cross-check every closed form.
//!
//! Nothing in here knows the closed forms: objectives are sampled on a
//! uniform grid, and the best grid cell is polished with golden-section
//! search. Results are deterministic for a fixed [`ScanConfig`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::consts::SECTOR_ANGLE;
use crate::error::{Error, Result};
use crate::poly::Poly;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Number of alternating axis sweeps performed by [`max_2d`].
const SWEEPS_2D: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    /// Uniform samples per axis, endpoints included.
    pub grid: usize,
    /// Golden-section iterations in the refinement stage.
    pub refine_iters: usize,
    /// Seed for the randomized corpora.
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            grid: 4096,
            refine_iters: 60,
            seed: 42,
        }
    }
}

impl ScanConfig {
    pub fn new(grid: usize, refine_iters: usize) -> Self {
        ScanConfig {
            grid,
            refine_iters,
            ..Default::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid < 2 {
            return Err(Error::InvalidConfig(format!(
                "grid must be at least 2, got {}",
                self.grid
            )));
        }
        Ok(())
    }
}

/// Location and value of a maximum found by a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum1d {
    pub arg: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum2d {
    pub arg: [f64; 2],
    pub value: f64,
}

fn checked(value: f64, location: impl FnOnce() -> String) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite {
            value,
            location: location(),
        })
    }
}

fn grid_point(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
    }
}

/// Golden-section maximization of `f` on `[lo, hi]`, returning the best
/// point seen (never worse than the bracket midpoint probes).
fn golden_max<F>(f: &F, mut lo: f64, mut hi: f64, iters: usize) -> Result<Maximum1d>
where
    F: Fn(f64) -> f64,
{
    let eval = |x: f64| checked(f(x), || format!("x = {x}"));
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    let mut best = if f2 > f1 {
        Maximum1d { arg: x2, value: f2 }
    } else {
        Maximum1d { arg: x1, value: f1 }
    };
    for _ in 0..iters {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = eval(x1)?;
            if f1 > best.value {
                best = Maximum1d { arg: x1, value: f1 };
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = eval(x2)?;
            if f2 > best.value {
                best = Maximum1d { arg: x2, value: f2 };
            }
        }
    }
    Ok(best)
}

/// Maximize `f` over `[lo, hi]`: uniform grid scan, then golden-section
/// refinement inside the two cells adjacent to the best grid point.
///
/// Ties on the grid resolve to the smallest argument. The returned value is
/// never below the grid maximum.
pub fn max_1d<F>(f: F, lo: f64, hi: f64, cfg: &ScanConfig) -> Result<Maximum1d>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(Error::InvalidConfig(format!("empty interval [{lo}, {hi}]")));
    }
    let n = cfg.grid;
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let x = grid_point(lo, hi, i, n);
        let v = checked(f(x), || format!("x = {x}"))?;
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let grid_best = Maximum1d {
        arg: grid_point(lo, hi, best_i, n),
        value: best,
    };
    if cfg.refine_iters == 0 || hi == lo {
        return Ok(grid_best);
    }
    let a = grid_point(lo, hi, best_i.saturating_sub(1), n);
    let b = grid_point(lo, hi, (best_i + 1).min(n - 1), n);
    let mut refined = golden_max(&f, a, b, cfg.refine_iters)?;
    // Golden section never probes the bracket ends; a maximum sitting on the
    // interval boundary is caught here.
    for x in [a, b] {
        let v = checked(f(x), || format!("x = {x}"))?;
        if v > refined.value {
            refined = Maximum1d { arg: x, value: v };
        }
    }
    Ok(if refined.value > grid_best.value {
        refined
    } else {
        grid_best
    })
}

/// Maximize `f` over the box `[lo1, hi1] × [lo2, hi2]`.
///
/// The grid is `cfg.grid × cfg.grid` and is evaluated row-parallel with a
/// deterministic reduction (first maximum in row-major order). The best cell
/// is then refined by alternating golden-section sweeps along each axis.
pub fn max_2d<F>(f: F, box1: (f64, f64), box2: (f64, f64), cfg: &ScanConfig) -> Result<Maximum2d>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    cfg.validate()?;
    let (lo1, hi1) = box1;
    let (lo2, hi2) = box2;
    if !(lo1 <= hi1 && lo2 <= hi2) {
        return Err(Error::InvalidConfig(format!(
            "empty box [{lo1}, {hi1}] x [{lo2}, {hi2}]"
        )));
    }
    let n = cfg.grid;
    let ys: Vec<f64> = (0..n).map(|j| grid_point(lo2, hi2, j, n)).collect();
    let rows: Vec<Result<(usize, f64)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x = grid_point(lo1, hi1, i, n);
            let mut best_j = 0;
            let mut best = f64::NEG_INFINITY;
            for (j, &y) in ys.iter().enumerate() {
                let v = checked(f(x, y), || format!("({x}, {y})"))?;
                if v > best {
                    best = v;
                    best_j = j;
                }
            }
            Ok((best_j, best))
        })
        .collect();
    let mut best = (0, 0, f64::NEG_INFINITY);
    for (i, row) in rows.into_iter().enumerate() {
        let (j, v) = row?;
        if v > best.2 {
            best = (i, j, v);
        }
    }
    let (bi, bj, grid_value) = best;
    let mut arg = [grid_point(lo1, hi1, bi, n), grid_point(lo2, hi2, bj, n)];
    let mut value = grid_value;
    if cfg.refine_iters == 0 {
        return Ok(Maximum2d { arg, value });
    }
    let bracket1 = (
        grid_point(lo1, hi1, bi.saturating_sub(1), n),
        grid_point(lo1, hi1, (bi + 1).min(n - 1), n),
    );
    let bracket2 = (
        grid_point(lo2, hi2, bj.saturating_sub(1), n),
        grid_point(lo2, hi2, (bj + 1).min(n - 1), n),
    );
    let line_cfg = ScanConfig {
        grid: 3,
        refine_iters: cfg.refine_iters,
        seed: cfg.seed,
    };
    for _ in 0..SWEEPS_2D {
        let y = arg[1];
        let m = max_1d(|x| f(x, y), bracket1.0, bracket1.1, &line_cfg)?;
        if m.value > value {
            value = m.value;
            arg[0] = m.arg;
        }
        let x = arg[0];
        let m = max_1d(|y| f(x, y), bracket2.0, bracket2.1, &line_cfg)?;
        if m.value > value {
            value = m.value;
            arg[1] = m.arg;
        }
    }
    Ok(Maximum2d { arg, value })
}

/// `sup_{θ∈[0,π/4]} |P(cosθ, sinθ)|` by direct scanning.
pub fn numeric_poly_norm(p: &Poly, cfg: &ScanConfig) -> Result<f64> {
    let m = max_1d(
        |theta| {
            let (s, c) = theta.sin_cos();
            p.eval(c, s).abs()
        },
        0.0,
        SECTOR_ANGLE,
        cfg,
    )?;
    Ok(m.value)
}

/// Seeded corpus of polynomials with coefficients uniform in `[-10, 10]`.
pub fn random_polys(seed: u64, count: usize) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            Poly::new(
                rng.random_range(-10.0..=10.0),
                rng.random_range(-10.0..=10.0),
                rng.random_range(-10.0..=10.0),
            )
        })
        .collect()
}

/// Seeded corpus of polynomials rescaled to unit sector norm.
pub fn random_unit_polys(seed: u64, count: usize) -> Vec<Poly> {
    random_polys(seed, count)
        .into_iter()
        .filter_map(|p| {
            let n = p.sector_norm();
            (n > 0.0).then(|| (1.0 / n) * p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    #[test]
    fn max_1d_examples() {
        let cfg = ScanConfig::default();
        let m = max_1d(f64::sin, 0.0, FRAC_PI_4, &cfg).unwrap();
        assert_eq!(m.arg, FRAC_PI_4);
        assert!((m.value - SQRT_2 / 2.0).abs() < 1e-15);

        let m = max_1d(|t| (t.cos() * t.sin()).abs(), 0.0, FRAC_PI_4, &cfg).unwrap();
        assert!((m.value - 0.5).abs() < 1e-15);

        let m = max_1d(|_| 3.0, 0.0, 1.0, &cfg).unwrap();
        assert_eq!(m.value, 3.0);
    }

    #[test]
    fn max_1d_refines_interior_peak() {
        let cfg = ScanConfig::new(7, 60);
        let m = max_1d(|x| -(x - 0.3141).powi(2), 0.0, 1.0, &cfg).unwrap();
        assert!((m.arg - 0.3141).abs() < 1e-7);
        let coarse = max_1d(|x| -(x - 0.3141).powi(2), 0.0, 1.0, &ScanConfig::new(7, 0)).unwrap();
        assert!(m.value >= coarse.value);
    }

    #[test]
    fn max_1d_reports_non_finite_location() {
        let err = max_1d(
            |x| if x > 0.5 { f64::NAN } else { x },
            0.0,
            1.0,
            &ScanConfig::new(5, 10),
        )
        .unwrap_err();
        match err {
            Error::NonFinite { location, .. } => assert!(location.contains("0.75")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn config_rejects_tiny_grid() {
        assert!(max_1d(|x| x, 0.0, 1.0, &ScanConfig::new(1, 5)).is_err());
        assert!(max_1d(|x| x, 1.0, 0.0, &ScanConfig::new(5, 5)).is_err());
    }

    #[test]
    fn max_2d_examples() {
        let cfg = ScanConfig::new(128, 40);
        let q = (0.0, FRAC_PI_4);
        let m = max_2d(|t, p| (t - p).cos(), q, q, &cfg).unwrap();
        assert!((m.value - 1.0).abs() < 1e-15);
        let m = max_2d(|t, p| -(t * t + p * p), q, q, &cfg).unwrap();
        assert_eq!(m.value, 0.0);
        assert_eq!(m.arg, [0.0, 0.0]);
    }

    #[test]
    fn max_2d_is_deterministic() {
        let cfg = ScanConfig::new(97, 30);
        let f = |a: f64, b: f64| (3.0 * a).sin() * (2.0 * b).cos() + a * b;
        let m1 = max_2d(f, (0.0, 2.0), (0.0, 2.0), &cfg).unwrap();
        let m2 = max_2d(f, (0.0, 2.0), (0.0, 2.0), &cfg).unwrap();
        assert_eq!(m1.value.to_bits(), m2.value.to_bits());
        assert_eq!(m1.arg, m2.arg);
    }

    #[test]
    fn numeric_norm_examples() {
        let cfg = ScanConfig::default();
        assert!((numeric_poly_norm(&Poly::new(1.0, 1.0, 0.0), &cfg).unwrap() - 1.0).abs() < 1e-15);
        assert!((numeric_poly_norm(&Poly::new(0.0, 0.0, 1.0), &cfg).unwrap() - 0.5).abs() < 1e-15);
        let w = Poly::new(1.0, 5.0 + 4.0 * SQRT_2, -4.0 - 4.0 * SQRT_2);
        assert!((numeric_poly_norm(&w, &cfg).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn corpus_is_seeded() {
        assert_eq!(random_polys(42, 10), random_polys(42, 10));
        assert_ne!(random_polys(42, 10), random_polys(43, 10));
        for p in random_polys(1, 200) {
            assert!(p.coefficients().iter().all(|c| (-10.0..=10.0).contains(c)));
        }
    }
}
