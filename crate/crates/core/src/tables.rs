//! Comparison of the sector constants against other 2-homogeneous spaces.
//!
//! Only the `D(π/4)` column is computed; every other cell is a published
//! reference constant for its domain.

use std::f64::consts::SQRT_2;

use crate::bernstein::phi_squared;
use crate::consts::SECTOR_ANGLE;
use crate::error::Result;
use crate::oracle::{max_1d, ScanConfig};
use crate::polarization::polarization_constant;
use crate::poly::SectorPoint;
use crate::unconditional::unconditional_constant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Simplex, quarter disc sector, `π/4` sector and unit square.
    Sectors,
    /// `ℓ₁²`, `ℓ₂²` and `ℓ∞²`.
    Lp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Computed,
    Reference,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub value: f64,
    /// Exact form, e.g. `2√10`.
    pub exact: &'static str,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub label: &'static str,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Row>,
}

fn reference(value: f64, exact: &'static str) -> Cell {
    Cell {
        value,
        exact,
        source: Source::Reference,
    }
}

fn computed(value: f64, exact: &'static str) -> Cell {
    Cell {
        value,
        exact,
        source: Source::Computed,
    }
}

/// The three constants of the `π/4` sector, evaluated from the library.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorConstants {
    /// Maximum over the arc of the squared Bernstein bound, `4(13 + 8√2)`.
    pub markov_squared: f64,
    pub polarization: f64,
    pub unconditional: f64,
}

pub fn sector_constants() -> Result<SectorConstants> {
    let markov = max_1d(
        |theta| phi_squared(SectorPoint::from_angle(theta).expect("in range")).expect("not origin"),
        0.0,
        SECTOR_ANGLE,
        &ScanConfig::default(),
    )?;
    Ok(SectorConstants {
        markov_squared: markov.value,
        polarization: polarization_constant()?.value,
        unconditional: unconditional_constant(crate::extremals::DEFAULT_RESOLUTION)?.value,
    })
}

pub fn comparison_table(kind: TableKind) -> Result<ComparisonTable> {
    match kind {
        TableKind::Sectors => {
            let live = sector_constants()?;
            Ok(ComparisonTable {
                columns: vec!["simplex", "D(pi/2)", "D(pi/4)", "square"],
                rows: vec![
                    Row {
                        label: "Markov constants",
                        cells: vec![
                            reference(2.0 * 10f64.sqrt(), "2√10"),
                            reference(2.0 * 5f64.sqrt(), "2√5"),
                            computed(live.markov_squared, "4(13+8√2)"),
                            reference(13f64.sqrt(), "√13"),
                        ],
                    },
                    Row {
                        label: "Polarization constants",
                        cells: vec![
                            reference(3.0, "3"),
                            reference(2.0, "2"),
                            computed(live.polarization, "2+√2/2"),
                            reference(1.5, "3/2"),
                        ],
                    },
                    Row {
                        label: "Unconditional constants",
                        cells: vec![
                            reference(2.0, "2"),
                            reference(3.0, "3"),
                            computed(live.unconditional, "5+4√2"),
                            reference(5.0, "5"),
                        ],
                    },
                ],
            })
        }
        TableKind::Lp => Ok(ComparisonTable {
            columns: vec!["l1", "l2", "linf"],
            rows: vec![
                Row {
                    label: "Markov constants",
                    cells: vec![
                        reference(4.0, "4"),
                        reference(2.0, "2"),
                        reference(2.0 * SQRT_2, "2√2"),
                    ],
                },
                Row {
                    label: "Polarization constants",
                    cells: vec![
                        reference(2.0, "2"),
                        reference(1.0, "1"),
                        reference(2.0, "2"),
                    ],
                },
                Row {
                    label: "Unconditional constants",
                    cells: vec![
                        reference((1.0 + SQRT_2) / 2.0, "(1+√2)/2"),
                        reference(SQRT_2, "√2"),
                        reference(1.0 + SQRT_2, "1+√2"),
                    ],
                },
            ],
        }),
    }
}
