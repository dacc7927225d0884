use sectorpoly::bernstein::phi_squared;
use sectorpoly::consts::SECTOR_ANGLE;
use sectorpoly::oracle::{numeric_poly_norm, random_polys, random_unit_polys, ScanConfig};
use sectorpoly::polarization::psi_arc_max;
use sectorpoly::{differential_norm, psi, SectorPoint};

#[test]
fn closed_form_norm_matches_oracle_on_seeded_corpus() {
    let cfg = ScanConfig::default();
    for p in random_polys(cfg.seed, 1000) {
        let v = p.sector_norm();
        let o = numeric_poly_norm(&p, &cfg).unwrap();
        assert!((v - o).abs() <= 1e-6 * v.max(1.0), "P = {p}: {v} vs {o}");
        // the oracle never overshoots the true supremum
        assert!(o <= v * (1.0 + 1e-12) + 1e-15);
    }
}

#[test]
fn sampled_bernstein_and_differential_inequalities() {
    let points: Vec<SectorPoint> = (0..64)
        .map(|i| SectorPoint::from_angle(SECTOR_ANGLE * i as f64 / 63.0).unwrap())
        .collect();
    for p in random_unit_polys(42, 1000) {
        for pt in &points {
            let [gx, gy] = p.gradient(*pt);
            assert!(gx * gx + gy * gy <= phi_squared(*pt).unwrap() * (1.0 + 1e-9));
            assert!(differential_norm(&p, *pt) <= psi(*pt).unwrap() * (1.0 + 1e-9));
        }
    }
}

#[test]
fn oracle_is_deterministic_for_a_fixed_config() {
    let cfg = ScanConfig::default().with_seed(7);
    let a: Vec<f64> = random_polys(cfg.seed, 50)
        .iter()
        .map(|p| numeric_poly_norm(p, &cfg).unwrap())
        .collect();
    let b: Vec<f64> = random_polys(cfg.seed, 50)
        .iter()
        .map(|p| numeric_poly_norm(p, &cfg).unwrap())
        .collect();
    assert_eq!(a, b);
}

#[test]
fn oracle_converges_as_the_grid_grows() {
    let polys = random_polys(3, 200);
    let mut previous = f64::INFINITY;
    for grid in [8, 64, 512, 4096] {
        let cfg = ScanConfig::new(grid, 0);
        let worst = polys
            .iter()
            .map(|p| p.sector_norm() - numeric_poly_norm(p, &cfg).unwrap())
            .fold(0.0f64, f64::max);
        assert!(
            worst <= previous + 1e-15,
            "grid {grid}: {worst} > {previous}"
        );
        previous = worst;
    }
    assert!(previous < 1e-4);
}

#[test]
fn psi_arc_maximum_is_stable_under_refinement() {
    let coarse = psi_arc_max(&ScanConfig::new(64, 60)).unwrap().1;
    let fine = psi_arc_max(&ScanConfig::default()).unwrap().1;
    assert!((coarse - fine).abs() < 1e-12);
}
