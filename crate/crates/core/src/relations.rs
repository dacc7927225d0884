//! Pointwise comparisons between branch curves that decide which branch
//! survives in each `λ`-region of the Bernstein and differential bounds.

use std::f64::consts::SQRT_2;

use crate::bernstein::CCurve;
use crate::branch::BranchCurve;
use crate::error::Result;
use crate::figures::Curve;
use crate::polarization::DCurve;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// `lhs ≤ rhs` on the range.
    AtMost,
    /// `lhs = rhs` on the range.
    Equal,
}

/// One side of a relation: a single curve, or a piecewise curve that uses
/// the first listed piece whose domain contains `λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Side {
    Curve(Curve),
    Piecewise(&'static [Curve]),
}

impl Side {
    fn eval(&self, lambda: f64) -> Result<f64> {
        match self {
            Side::Curve(c) => c.value(lambda),
            Side::Piecewise(pieces) => match pieces.iter().find(|c| c.contains(lambda)) {
                Some(c) => c.value(lambda),
                None => pieces[pieces.len() - 1].value(lambda),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub label: &'static str,
    pub kind: RelationKind,
    pub lhs: Side,
    pub rhs: Side,
    pub range: (f64, f64),
}

/// Largest violation of a relation on a uniform grid, with its location.
///
/// For `AtMost` this is `max(lhs − rhs)` (non-positive when the relation
/// holds); for `Equal` it is `max |lhs − rhs|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationGap {
    pub gap: f64,
    pub lambda: f64,
}

impl Relation {
    pub fn worst_gap(&self, points: usize) -> Result<RelationGap> {
        let (lo, hi) = self.range;
        let mut worst = RelationGap {
            gap: f64::NEG_INFINITY,
            lambda: lo,
        };
        for i in 0..points {
            let lambda = if i + 1 == points {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (points - 1) as f64
            };
            let d = self.lhs.eval(lambda)? - self.rhs.eval(lambda)?;
            let gap = match self.kind {
                RelationKind::AtMost => d,
                RelationKind::Equal => d.abs(),
            };
            if gap > worst.gap {
                worst = RelationGap { gap, lambda };
            }
        }
        Ok(worst)
    }
}

const D2: &[Curve] = &[Curve::D(DCurve::D21), Curve::D(DCurve::D22)];
const D8: &[Curve] = &[Curve::D(DCurve::D82), Curve::D(DCurve::D83)];
const D10: &[Curve] = &[Curve::D(DCurve::D101), Curve::D(DCurve::D102)];

fn c(id: CCurve) -> Side {
    Side::Curve(Curve::C(id))
}

fn d(id: DCurve) -> Side {
    Side::Curve(Curve::D(id))
}

fn rel(
    label: &'static str,
    kind: RelationKind,
    lhs: Side,
    rhs: Side,
    range: (f64, f64),
) -> Relation {
    Relation {
        label,
        kind,
        lhs,
        rhs,
        range,
    }
}

/// Upper end of the region where `D83 ≤ D102`.
pub fn d83_d102_crossover() -> f64 {
    ((4.0 * SQRT_2 - 5.0) * (4.0 * SQRT_2 + 7.0).sqrt() + 8.0 - 5.0 * SQRT_2) / 7.0
}

/// Relations among `C1..C8` used to reduce the gradient bound to three branches.
pub fn bernstein_relations() -> Vec<Relation> {
    use CCurve::*;
    use RelationKind::*;
    vec![
        rel("C1 <= C7", AtMost, c(C1), c(C7), (0.0, SQRT_2 - 1.0)),
        rel("C6 <= C7", AtMost, c(C6), c(C7), (SQRT_2 - 1.0, 1.0)),
        rel(
            "C7 <= C4 (low)",
            AtMost,
            c(C7),
            c(C4),
            (0.0, (2.0 - SQRT_2) / 2.0),
        ),
        rel("C7 <= C4 (high)", AtMost, c(C7), c(C4), (0.5, 1.0)),
        rel(
            "C7 <= C5",
            AtMost,
            c(C7),
            c(C5),
            ((SQRT_2 - 1.0) / 2.0, 0.5),
        ),
        rel(
            "C3 <= C2",
            AtMost,
            c(C3),
            c(C2),
            (1.0 / 3.0, 4.0 * SQRT_2 - 5.0),
        ),
        rel("C3 <= C4 (low)", AtMost, c(C3), c(C4), (0.0, 1.0 / 3.0)),
        rel(
            "C3 <= C4 (high)",
            AtMost,
            c(C3),
            c(C4),
            (4.0 * SQRT_2 - 5.0, 1.0),
        ),
        rel("C8 = C4", Equal, c(C8), c(C4), (0.0, 1.0)),
    ]
}

/// Relations among `D11..D102` used to reduce the differential bound.
pub fn polarization_relations() -> Vec<Relation> {
    use DCurve::*;
    use RelationKind::*;
    let l_a = (3.0 + 4.0 * SQRT_2) / 23.0;
    let l_b = (6.0 - 2.0 * SQRT_2) / 7.0;
    let l_c = (5.0 - 3.0 * SQRT_2) / 7.0;
    let l_e = (1.0 + SQRT_2) / 3.0;
    let b1 = (2.0 * SQRT_2 - 1.0) / 7.0;
    vec![
        rel("D11 <= D2", AtMost, d(D11), Side::Piecewise(D2), (0.0, 1.0)),
        rel("D12 <= D31", AtMost, d(D12), d(D31), (0.0, 0.2)),
        rel("D31 = D51", Equal, d(D31), d(D51), (0.0, l_a)),
        rel("D32 = D42", Equal, d(D32), d(D42), (l_e, 1.0)),
        rel("D41 <= D2", AtMost, d(D41), Side::Piecewise(D2), (0.0, l_e)),
        rel("D42 <= D22", AtMost, d(D42), d(D22), (l_e, 1.0)),
        rel("D52 <= D21", AtMost, d(D52), d(D21), (l_a, l_b)),
        rel("D53 = D22", Equal, d(D53), d(D22), (2.0 - SQRT_2, 1.0)),
        rel(
            "D6 <= D8",
            AtMost,
            d(D6),
            Side::Piecewise(D8),
            (SQRT_2 - 1.0, 1.0),
        ),
        rel("D71 <= D101", AtMost, d(D71), d(D101), (0.0, l_c)),
        rel(
            "D72 <= D10",
            AtMost,
            d(D72),
            Side::Piecewise(D10),
            (l_c, 1.0),
        ),
        rel("D81 = D101", Equal, d(D81), d(D101), (0.0, b1)),
        rel("D91 = D71", Equal, d(D91), d(D71), (0.0, l_c)),
        rel("D92 = D83", Equal, d(D92), d(D83), (l_b, 1.0)),
        rel("D82 <= D102", AtMost, d(D82), d(D102), (l_a, l_b)),
        rel(
            "D83 <= D102",
            AtMost,
            d(D83),
            d(D102),
            (l_b, d83_d102_crossover()),
        ),
        rel("D21 <= D102", AtMost, d(D21), d(D102), (b1, SQRT_2 - 1.0)),
    ]
}

pub fn all_relations() -> Vec<Relation> {
    let mut v = bernstein_relations();
    v.extend(polarization_relations());
    v
}
