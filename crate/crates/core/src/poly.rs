//! Coefficient-level 2-homogeneous polynomials, the exact sector sup-norm and
//! the objects derived from a polynomial (gradient, modulus, polar form).

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::consts::SECTOR_ANGLE;
use crate::error::{Error, Result};

/// `P(x, y) = a·x² + b·y² + c·xy`, stored as the triple `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Poly {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Poly {
    pub const ZERO: Poly = Poly::new(0.0, 0.0, 0.0);

    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Poly { a, b, c }
    }

    /// Like [`Poly::new`] but rejects NaN and infinite coefficients.
    pub fn try_new(a: f64, b: f64, c: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && c.is_finite() {
            Ok(Poly { a, b, c })
        } else {
            Err(Error::NonFiniteCoefficient { a, b, c })
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.a * x * x + self.b * y * y + self.c * x * y
    }

    /// `(∂P/∂x, ∂P/∂y)` at an arbitrary point of the plane.
    pub fn gradient_at(&self, x: f64, y: f64) -> [f64; 2] {
        [2.0 * self.a * x + self.c * y, 2.0 * self.b * y + self.c * x]
    }

    pub fn gradient(&self, pt: SectorPoint) -> [f64; 2] {
        self.gradient_at(pt.x(), pt.y())
    }

    /// `|P| = (|a|, |b|, |c|)`.
    pub fn modulus(&self) -> Poly {
        Poly::new(self.a.abs(), self.b.abs(), self.c.abs())
    }

    /// The symmetric bilinear form `L` with `L(v, v) = P(v)`.
    pub fn polar(&self) -> SymBilinearForm {
        SymBilinearForm {
            m11: self.a,
            m22: self.b,
            m12: self.c / 2.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0.0 && self.b == 0.0 && self.c == 0.0
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Sup of `|P|` over the sector, in closed form.
    ///
    /// With `s = sign(c)` (and `sign(0) = 0`):
    ///
    /// ```text
    /// c(a−b) > 0:  max{|a|, ½|a+b+c|, ½|a+b+s·√((a−b)²+c²)|}
    /// c(a−b) ≤ 0:  max{|a|, ½|a+b+c|}
    /// ```
    ///
    /// The first two terms are the values at the arc endpoints `θ = 0` and
    /// `θ = π/4`. The third is the interior critical value of
    /// `½(a+b) + ½(a−b)cos2θ + ½c·sin2θ`, which only lies inside the sector
    /// when `c` and `a − b` have the same strict sign.
    pub fn sector_norm(&self) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        let endpoints = a.abs().max(0.5 * (a + b + c).abs());
        if c * (a - b) > 0.0 {
            endpoints.max(interior_critical_value(a, b, c))
        } else {
            endpoints
        }
    }
}

/// `½|a + b + sign(c)·√((a−b)² + c²)|` with `sign(0) = 0`.
pub(crate) fn interior_critical_value(a: f64, b: f64, c: f64) -> f64 {
    let sign = if c > 0.0 {
        1.0
    } else if c < 0.0 {
        -1.0
    } else {
        0.0
    };
    0.5 * (a + b + sign * (a - b).hypot(c)).abs()
}

/// Norm evaluated by each case formula separately, exposed for the
/// branch-agreement checks at `c(a−b) = 0`.
pub fn sector_norm_branches(p: &Poly) -> (f64, f64) {
    let (a, b, c) = (p.a, p.b, p.c);
    let endpoints = a.abs().max(0.5 * (a + b + c).abs());
    (endpoints.max(interior_critical_value(a, b, c)), endpoints)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        Poly::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        Poly::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(-self.a, -self.b, -self.c)
    }
}

impl Mul<Poly> for f64 {
    type Output = Poly;
    fn mul(self, p: Poly) -> Poly {
        Poly::new(self * p.a, self * p.b, self * p.c)
    }
}

/// `sup_{θ∈[0,π/4]} |a·cosθ + b·sinθ|`.
///
/// Endpoint values are `|a|` and `(√2/2)|a+b|`; the interior stationary
/// point `tanθ = b/a` contributes `√(a²+b²)` only when `0 ≤ b/a ≤ 1`.
pub fn sup_linear(a: f64, b: f64) -> f64 {
    let endpoints = a.abs().max(FRAC_1_SQRT_2 * (a + b).abs());
    if a * b > 0.0 && b.abs() <= a.abs() {
        endpoints.max(a.hypot(b))
    } else {
        endpoints
    }
}

/// A point `(x, y)` of the closed cone `0 ≤ y ≤ x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorPoint {
    x: f64,
    y: f64,
}

impl SectorPoint {
    /// Relative slack allowed on `y ≤ x`, so that `from_angle(π/4)` and
    /// user-typed diagonal points are accepted. Such points are clamped to `y = x`.
    const DIAGONAL_SLACK: f64 = 1e-12;

    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) || y < 0.0 || x < 0.0 {
            return Err(Error::OutsideSector { x, y });
        }
        if y > x {
            if y - x <= Self::DIAGONAL_SLACK * x {
                return Ok(SectorPoint { x, y: x });
            }
            return Err(Error::OutsideSector { x, y });
        }
        Ok(SectorPoint { x, y })
    }

    /// `(cosθ, sinθ)` for `θ ∈ [0, π/4]`.
    pub fn from_angle(theta: f64) -> Result<Self> {
        if !(0.0..=SECTOR_ANGLE).contains(&theta) {
            return Err(Error::AngleOutOfRange(theta));
        }
        let (s, c) = theta.sin_cos();
        Ok(SectorPoint { x: c, y: s.min(c) })
    }

    /// The point `(1, λ)`.
    pub fn from_ratio(lambda: f64) -> Result<Self> {
        SectorPoint::new(1.0, lambda)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// `λ = y/x`, defined away from the origin.
    pub fn ratio(&self) -> Option<f64> {
        (self.x > 0.0).then(|| self.y / self.x)
    }

    pub fn is_origin(&self) -> bool {
        self.x == 0.0
    }

    pub fn scale(&self, k: f64) -> Result<Self> {
        SectorPoint::new(k * self.x, k * self.y)
    }

    /// Ratio plus scale, rejecting the origin.
    pub(crate) fn ratio_and_scale(&self) -> Result<(f64, f64)> {
        match self.ratio() {
            Some(lambda) => Ok((lambda, self.x)),
            None => Err(Error::Origin),
        }
    }
}

/// Symmetric bilinear form `L(u, v) = m11·u₁v₁ + m22·u₂v₂ + m12·(u₁v₂ + u₂v₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymBilinearForm {
    pub m11: f64,
    pub m22: f64,
    pub m12: f64,
}

impl SymBilinearForm {
    pub fn apply(&self, u: [f64; 2], v: [f64; 2]) -> f64 {
        self.m11 * u[0] * v[0] + self.m22 * u[1] * v[1] + self.m12 * (u[0] * v[1] + u[1] * v[0])
    }

    /// The polynomial `v ↦ L(v, v)`.
    pub fn diagonal(&self) -> Poly {
        Poly::new(self.m11, self.m22, 2.0 * self.m12)
    }
}
