use sectorpoly::extremals::{scan_extremes, Sign, DEFAULT_RESOLUTION, S_RANGE, T_RANGE};
use sectorpoly::oracle::random_unit_polys;
use sectorpoly::unconditional::{p_profile, q_profile, sign_patterns};
use sectorpoly::{differential_norm, ExtremalParam, Poly, SectorPoint};

type Functional = (&'static str, Box<dyn Fn(&Poly) -> f64>);

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn functionals() -> Vec<Functional> {
    let pts: Vec<SectorPoint> = [(1.0, 0.0), (1.0, 0.3), (1.0, 0.5), (1.0, 1.0)]
        .iter()
        .map(|&(x, y)| SectorPoint::new(x, y).unwrap())
        .collect();
    let mut out: Vec<Functional> = vec![(
        "modulus norm",
        Box::new(|p: &Poly| p.modulus().sector_norm()),
    )];
    for pt in pts {
        out.push((
            "gradient norm",
            Box::new(move |p: &Poly| {
                let [gx, gy] = p.gradient(pt);
                gx.hypot(gy)
            }),
        ));
        out.push((
            "differential norm",
            Box::new(move |p: &Poly| differential_norm(p, pt)),
        ));
    }
    out
}

#[test]
fn random_unit_polynomials_never_beat_the_extreme_scan() {
    let polys = random_unit_polys(42, 100);
    for (name, f) in functionals() {
        let max = scan_extremes(&f, DEFAULT_RESOLUTION).unwrap().value;
        for p in &polys {
            assert!(f(p) <= max + 1e-6, "{name}: {p} gives {} > {max}", f(p));
        }
    }
}

#[test]
fn signed_families_give_equal_maxima_for_even_functionals() {
    for (name, f) in functionals() {
        let best = |sign: Sign| {
            grid(T_RANGE.0, T_RANGE.1, 501)
                .into_iter()
                .map(|t| f(&ExtremalParam::p(t, sign).unwrap().to_poly()))
                .chain(
                    grid(S_RANGE.0, S_RANGE.1, 501)
                        .into_iter()
                        .map(|s| f(&ExtremalParam::q(s, sign).unwrap().to_poly())),
                )
                .fold(f64::NEG_INFINITY, f64::max)
        };
        assert_eq!(best(Sign::Plus), best(Sign::Minus), "{name}");
    }
}

#[test]
fn family_profiles_are_nondecreasing() {
    let ts = grid(T_RANGE.0, T_RANGE.1, 1000);
    assert!(ts.windows(2).all(|w| p_profile(w[0]) <= p_profile(w[1])));
    let ss = grid(S_RANGE.0, S_RANGE.1, 1000);
    assert!(ss.windows(2).all(|w| q_profile(w[0]) <= q_profile(w[1])));
    assert!((p_profile(1.0) - q_profile(S_RANGE.1)).abs() < 1e-12);
}

#[test]
fn sign_changes_never_exceed_the_modulus() {
    for p in random_unit_polys(9, 1000) {
        let bound = p.modulus().sector_norm();
        for q in sign_patterns(&p) {
            assert!(q.sector_norm() <= bound * (1.0 + 1e-12), "{q} vs |{p}|");
        }
    }
}
