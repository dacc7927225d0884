//! Curve data behind the thirteen comparison figures.

use crate::bernstein::CCurve;
use crate::branch::BranchCurve;
use crate::error::{Error, Result};
use crate::polarization::DCurve;

pub const FIGURE_COUNT: u32 = 13;
pub const DEFAULT_SAMPLES: usize = 513;

/// A curve of either family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Curve {
    C(CCurve),
    D(DCurve),
}

impl Curve {
    pub fn from_name(name: &str) -> Option<Curve> {
        CCurve::from_name(name)
            .map(Curve::C)
            .or_else(|| DCurve::from_name(name).map(Curve::D))
    }
}

impl BranchCurve for Curve {
    fn name(&self) -> &'static str {
        match self {
            Curve::C(c) => c.name(),
            Curve::D(d) => d.name(),
        }
    }

    fn domain(&self) -> (f64, f64) {
        match self {
            Curve::C(c) => c.domain(),
            Curve::D(d) => d.domain(),
        }
    }

    fn formula(&self, lambda: f64) -> f64 {
        match self {
            Curve::C(c) => c.formula(lambda),
            Curve::D(d) => d.formula(lambda),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub number: u32,
    pub curves: Vec<Curve>,
}

/// Sampled figure: one row per `λ`, one cell per curve (`None` outside the
/// curve's domain).
#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub columns: Vec<&'static str>,
    pub rows: Vec<(f64, Vec<Option<f64>>)>,
}

impl Figure {
    pub fn new(number: u32) -> Result<Figure> {
        use CCurve::*;
        use DCurve::*;
        let curves: Vec<Curve> = match number {
            1 => vec![C1, C6, C7].into_iter().map(Curve::C).collect(),
            2 => vec![C4, C5, C7].into_iter().map(Curve::C).collect(),
            3 => vec![C2, C3, C4].into_iter().map(Curve::C).collect(),
            4 => vec![C2, C4, C5].into_iter().map(Curve::C).collect(),
            5 => vec![D11, D21, D22].into_iter().map(Curve::D).collect(),
            6 => vec![D12, D31].into_iter().map(Curve::D).collect(),
            7 => vec![D22, D42].into_iter().map(Curve::D).collect(),
            8 => vec![D21, D52].into_iter().map(Curve::D).collect(),
            9 => vec![D21, D22, D51].into_iter().map(Curve::D).collect(),
            10 => vec![D6, D82, D83].into_iter().map(Curve::D).collect(),
            11 => vec![D71, D101].into_iter().map(Curve::D).collect(),
            12 => vec![D72, D101, D102].into_iter().map(Curve::D).collect(),
            13 => vec![D82, D83, D102].into_iter().map(Curve::D).collect(),
            _ => return Err(Error::UnknownFigure(number)),
        };
        Ok(Figure { number, curves })
    }

    /// Smallest interval covering every curve's domain.
    pub fn lambda_range(&self) -> (f64, f64) {
        self.curves
            .iter()
            .map(|c| c.domain())
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (a, b)| {
                (lo.min(a), hi.max(b))
            })
    }

    pub fn sample(&self, samples: usize) -> Result<FigureData> {
        if samples < 2 {
            return Err(Error::InvalidConfig(format!(
                "need at least 2 samples, got {samples}"
            )));
        }
        let (lo, hi) = self.lambda_range();
        let rows = (0..samples)
            .map(|i| {
                let lambda = if i + 1 == samples {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (samples - 1) as f64
                };
                let cells = self
                    .curves
                    .iter()
                    .map(|c| c.contains(lambda).then(|| c.formula(lambda)))
                    .collect();
                (lambda, cells)
            })
            .collect();
        Ok(FigureData {
            columns: self.curves.iter().map(|c| c.name()).collect(),
            rows,
        })
    }
}
