//! Extreme points of the unit ball of the sector polynomial space and a
//! scanner that maximizes a functional over all of them.
//!
//! The extreme points are `±P_t` for `t ∈ [-1, 1]`, `±Q_s` for
//! `s ∈ [1, 5+4√2]`, and the isolated pair `±(1, 1, 0)`. A continuous convex
//! functional attains its maximum over the unit ball at one of these, so
//! maximizing over the two one-parameter families plus the corner gives the
//! sharp constant.

use std::fmt;

use crate::consts::Q_MAX;
use crate::error::{Error, Result};
use crate::oracle::{max_1d, ScanConfig};
use crate::poly::Poly;

pub const T_RANGE: (f64, f64) = (-1.0, 1.0);
pub const S_RANGE: (f64, f64) = (1.0, Q_MAX);

/// Default grid resolution for [`scan_extremes`].
pub const DEFAULT_RESOLUTION: usize = 2048;
/// Golden-section iterations used after the grid stage.
pub const REFINE_ITERS: usize = 60;

/// Relative gap below which two candidate maxima count as a tie.
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    P,
    Q,
    Corner,
}

/// Selects one extreme point of the unit ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtremalParam {
    P { t: f64, sign: Sign },
    Q { s: f64, sign: Sign },
    Corner { sign: Sign },
}

impl ExtremalParam {
    pub fn p(t: f64, sign: Sign) -> Result<Self> {
        check_range("t", t, T_RANGE)?;
        Ok(ExtremalParam::P { t, sign })
    }

    pub fn q(s: f64, sign: Sign) -> Result<Self> {
        check_range("s", s, S_RANGE)?;
        Ok(ExtremalParam::Q { s, sign })
    }

    pub fn family(&self) -> Family {
        match self {
            ExtremalParam::P { .. } => Family::P,
            ExtremalParam::Q { .. } => Family::Q,
            ExtremalParam::Corner { .. } => Family::Corner,
        }
    }

    pub fn sign(&self) -> Sign {
        match *self {
            ExtremalParam::P { sign, .. }
            | ExtremalParam::Q { sign, .. }
            | ExtremalParam::Corner { sign } => sign,
        }
    }

    /// The family parameter, if the family has one.
    pub fn parameter(&self) -> Option<f64> {
        match *self {
            ExtremalParam::P { t, .. } => Some(t),
            ExtremalParam::Q { s, .. } => Some(s),
            ExtremalParam::Corner { .. } => None,
        }
    }

    pub fn to_poly(&self) -> Poly {
        let (base, sign) = match *self {
            ExtremalParam::P { t, sign } => (p_poly(t), sign),
            ExtremalParam::Q { s, sign } => (q_poly(s), sign),
            ExtremalParam::Corner { sign } => (corner(), sign),
        };
        sign.factor() * base
    }
}

impl fmt::Display for ExtremalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign() {
            Sign::Plus => "+",
            Sign::Minus => "-",
        };
        match *self {
            ExtremalParam::P { t, .. } => write!(f, "{sign}P(t={t})"),
            ExtremalParam::Q { s, .. } => write!(f, "{sign}Q(s={s})"),
            ExtremalParam::Corner { .. } => write!(f, "{sign}(1,1,0)"),
        }
    }
}

fn check_range(name: &'static str, value: f64, (lo, hi): (f64, f64)) -> Result<()> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange {
            name,
            value,
            lo,
            hi,
        })
    }
}

pub(crate) fn p_poly(t: f64) -> Poly {
    let r = (1.0 + t).sqrt();
    Poly::new(t, 4.0 + t + 4.0 * r, -2.0 - 2.0 * t - 4.0 * r)
}

pub(crate) fn q_poly(s: f64) -> Poly {
    Poly::new(1.0, s, -2.0 * (2.0 * (1.0 + s)).sqrt())
}

/// `P_t = (t, 4 + t + 4√(1+t), −2 − 2t − 4√(1+t))`, `t ∈ [-1, 1]`.
pub fn p_family(t: f64) -> Result<Poly> {
    check_range("t", t, T_RANGE)?;
    Ok(p_poly(t))
}

/// `Q_s = (1, s, −2√(2(1+s)))`, `s ∈ [1, 5+4√2]`.
pub fn q_family(s: f64) -> Result<Poly> {
    check_range("s", s, S_RANGE)?;
    Ok(q_poly(s))
}

/// The isolated extreme point `(1, 1, 0)`.
pub fn corner() -> Poly {
    Poly::new(1.0, 1.0, 0.0)
}

/// Result of [`scan_extremes`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeScan {
    pub value: f64,
    pub argmax: ExtremalParam,
}

/// Maximize `f` over every extreme point of the unit ball.
///
/// Each signed family is scanned on a uniform grid of `resolution` points and
/// refined by golden-section search; the corner contributes two isolated
/// candidates. Ties go to the first candidate in the order
/// `+P, −P, +Q, −Q, +corner, −corner`, and within a family to the smaller
/// parameter.
pub fn scan_extremes<F>(f: F, resolution: usize) -> Result<ExtremeScan>
where
    F: Fn(&Poly) -> f64,
{
    let cfg = ScanConfig::new(resolution, REFINE_ITERS);
    cfg.validate()?;

    let mut candidates: Vec<ExtremeScan> = Vec::with_capacity(6);
    for sign in [Sign::Plus, Sign::Minus] {
        let m = max_1d(
            |t| f(&(sign.factor() * p_poly(t))),
            T_RANGE.0,
            T_RANGE.1,
            &cfg,
        )?;
        candidates.push(ExtremeScan {
            value: m.value,
            argmax: ExtremalParam::P { t: m.arg, sign },
        });
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let m = max_1d(
            |s| f(&(sign.factor() * q_poly(s))),
            S_RANGE.0,
            S_RANGE.1,
            &cfg,
        )?;
        candidates.push(ExtremeScan {
            value: m.value,
            argmax: ExtremalParam::Q { s: m.arg, sign },
        });
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let argmax = ExtremalParam::Corner { sign };
        let value = f(&argmax.to_poly());
        if !value.is_finite() {
            return Err(Error::NonFinite {
                value,
                location: argmax.to_string(),
            });
        }
        candidates.push(ExtremeScan { value, argmax });
    }

    let mut best = candidates[0];
    for c in &candidates[1..] {
        if c.value > best.value + TIE_TOLERANCE * best.value.abs().max(1.0) {
            best = *c;
        }
    }
    Ok(best)
}
