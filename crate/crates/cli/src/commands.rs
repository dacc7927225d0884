use sectorpoly::bernstein::{markov_constant, markov_oracle, phi_squared};
use sectorpoly::consts::{MARKOV_SQUARED, POLARIZATION, UNCONDITIONAL};
use sectorpoly::extremals::{scan_extremes, DEFAULT_RESOLUTION};
use sectorpoly::figures::Figure;
use sectorpoly::oracle::{numeric_poly_norm, ScanConfig};
use sectorpoly::polarization::{bilinear_sup_norm, differential_norm, psi, BILINEAR_GRID};
use sectorpoly::tables::{comparison_table, Source, TableKind};
use sectorpoly::unconditional::unconditional_constant;
use sectorpoly::verify::{self, MARKOV_GRID};
use sectorpoly::{Poly, SectorPoint, VerifyConfig};

use crate::output::{emit, format_number, Cell, Kind, Record};
use crate::{Command, Common, Failure, Which};

const DEFAULT_TOLERANCE: f64 = 1e-6;

pub fn dispatch(command: &Command, common: &Common) -> Result<(), Failure> {
    let (record, failure) = match command {
        Command::Norm { a, b, c, verify } => norm(Poly::try_new(*a, *b, *c)?, *verify, common)?,
        Command::Phi {
            x,
            y,
            verify,
            witness,
        } => phi(SectorPoint::new(*x, *y)?, *verify, *witness, common)?,
        Command::Psi {
            x,
            y,
            verify,
            witness,
        } => psi_cmd(SectorPoint::new(*x, *y)?, *verify, *witness, common)?,
        Command::Constants => constants(common)?,
        Command::Figure { n, samples } => (figure(*n, *samples)?, None),
        Command::Table { which } => (table(*which)?, None),
        Command::Verify { seed, samples } => verify_cmd(*seed, *samples, common)?,
    };
    emit(&record.render(common.format)?, common.out.as_deref())?;
    match failure {
        Some(msg) => Err(Failure::Verification(msg)),
        None => Ok(()),
    }
}

type Outcome = Result<(Record, Option<String>), Failure>;

fn scan_config(common: &Common) -> Result<ScanConfig, Failure> {
    let base = ScanConfig::default();
    let cfg = ScanConfig::new(
        common.grid.unwrap_or(base.grid),
        common.refine_iters.unwrap_or(base.refine_iters),
    );
    cfg.validate()?;
    Ok(cfg)
}

fn tolerance(common: &Common) -> Result<f64, Failure> {
    match common.tolerance {
        Some(t) if t.is_nan() || t < 0.0 => Err(Failure::Usage(format!(
            "tolerance must be non-negative, got {t}"
        ))),
        Some(t) => Ok(t),
        None => Ok(DEFAULT_TOLERANCE),
    }
}

fn mismatch(name: &str, gap: f64, tol: f64) -> Option<String> {
    (gap.is_nan() || gap > tol).then(|| {
        format!(
            "{name}: gap {} exceeds tolerance {}",
            format_number(gap),
            format_number(tol)
        )
    })
}

fn rel_gap(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(f64::MIN_POSITIVE)
}

fn norm(p: Poly, verify: bool, common: &Common) -> Outcome {
    let value = p.sector_norm();
    let mut rec = Record::new(Kind::Scalar, &["quantity", "value"]);
    rec.push(vec!["norm".into(), value.into()]);
    let mut failure = None;
    if verify {
        let oracle = numeric_poly_norm(&p, &scan_config(common)?)?;
        let gap = (value - oracle).abs();
        rec.push(vec!["oracle".into(), oracle.into()]);
        rec.push(vec!["gap".into(), gap.into()]);
        failure = mismatch("norm", gap / value.max(1.0), tolerance(common)?);
    }
    Ok((rec, failure))
}

fn extreme_resolution(common: &Common) -> usize {
    common.grid.unwrap_or(DEFAULT_RESOLUTION)
}

fn phi(pt: SectorPoint, verify: bool, witness: bool, common: &Common) -> Outcome {
    let squared = phi_squared(pt)?;
    let mut rec = Record::new(Kind::Scalar, &["quantity", "value"]);
    rec.push(vec!["phi_squared".into(), squared.into()]);
    rec.push(vec!["phi".into(), squared.sqrt().into()]);
    let mut failure = None;
    if verify || witness {
        let scan = scan_extremes(
            |p| {
                let [gx, gy] = p.gradient(pt);
                gx * gx + gy * gy
            },
            extreme_resolution(common),
        )?;
        if verify {
            let gap = rel_gap(squared, scan.value);
            rec.push(vec!["oracle_squared".into(), scan.value.into()]);
            rec.push(vec!["relative_gap".into(), gap.into()]);
            failure = mismatch("phi", gap, tolerance(common)?);
        }
        if witness {
            rec.push(vec!["witness".into(), scan.argmax.to_string().into()]);
        }
    }
    Ok((rec, failure))
}

fn psi_cmd(pt: SectorPoint, verify: bool, witness: bool, common: &Common) -> Outcome {
    let value = psi(pt)?;
    let mut rec = Record::new(Kind::Scalar, &["quantity", "value"]);
    rec.push(vec!["psi".into(), value.into()]);
    let mut failure = None;
    if verify || witness {
        let scan = scan_extremes(|p| differential_norm(p, pt), extreme_resolution(common))?;
        if verify {
            let gap = rel_gap(value, scan.value);
            rec.push(vec!["oracle".into(), scan.value.into()]);
            rec.push(vec!["relative_gap".into(), gap.into()]);
            failure = mismatch("psi", gap, tolerance(common)?);
        }
        if witness {
            rec.push(vec!["witness".into(), scan.argmax.to_string().into()]);
        }
    }
    Ok((rec, failure))
}

fn constants(common: &Common) -> Outcome {
    let tol = tolerance(common)?;
    let markov = markov_constant();
    let markov_scan = markov_oracle(common.grid.unwrap_or(MARKOV_GRID))?;
    let witness = markov.witness;
    let polar = bilinear_sup_norm(&witness.polar(), common.grid.unwrap_or(BILINEAR_GRID))?
        / witness.sector_norm();
    let unconditional = unconditional_constant(extreme_resolution(common))?;

    let rows: [(&str, f64, f64, String); 4] = [
        (
            "markov_squared",
            MARKOV_SQUARED,
            markov_scan.squared,
            witness.to_string(),
        ),
        (
            "markov",
            markov.linear,
            markov_scan.squared.sqrt(),
            witness.to_string(),
        ),
        ("polarization", POLARIZATION, polar, witness.to_string()),
        (
            "unconditional",
            UNCONDITIONAL,
            unconditional.value,
            unconditional.witness.to_string(),
        ),
    ];
    let mut rec = Record::new(
        Kind::Table,
        &[
            "constant",
            "closed_form",
            "oracle",
            "relative_gap",
            "witness",
        ],
    );
    let mut failures = Vec::new();
    for (name, closed, oracle, wit) in rows {
        let gap = rel_gap(oracle, closed);
        failures.extend(mismatch(name, gap, tol));
        rec.push(vec![
            name.into(),
            closed.into(),
            oracle.into(),
            gap.into(),
            wit.into(),
        ]);
    }
    let failure = (!failures.is_empty()).then(|| failures.join("\n  "));
    Ok((rec, failure))
}

fn figure(n: u32, samples: usize) -> Result<Record, Failure> {
    let data = Figure::new(n)?.sample(samples)?;
    let mut columns = vec!["lambda"];
    columns.extend(&data.columns);
    let mut rec = Record::new(Kind::Curve, &columns);
    for (lambda, cells) in data.rows {
        let mut row: Vec<Cell> = vec![lambda.into()];
        row.extend(cells.into_iter().map(Cell::from));
        rec.push(row);
    }
    Ok(rec)
}

fn table(which: Which) -> Result<Record, Failure> {
    let kind = match which {
        Which::Sectors => TableKind::Sectors,
        Which::Lp => TableKind::Lp,
    };
    let t = comparison_table(kind)?;
    let mut rec = Record::new(
        Kind::Table,
        &["constant", "domain", "value", "exact", "source"],
    );
    for row in &t.rows {
        for (column, cell) in t.columns.iter().zip(&row.cells) {
            let source = match cell.source {
                Source::Computed => "computed",
                Source::Reference => "reference",
            };
            rec.push(vec![
                row.label.into(),
                (*column).into(),
                cell.value.into(),
                cell.exact.into(),
                source.into(),
            ]);
        }
    }
    Ok(rec)
}

fn verify_cmd(seed: u64, samples: usize, common: &Common) -> Outcome {
    let cfg = VerifyConfig {
        seed,
        samples,
        tolerance: common.tolerance,
    };
    let report = verify::run(&cfg)?;
    let mut rec = Record::new(
        Kind::Verification,
        &["check", "result", "gap", "tolerance", "worst_case"],
    );
    for c in &report.checks {
        rec.push(vec![
            c.name.as_str().into(),
            c.passed.into(),
            c.gap.into(),
            c.tolerance.into(),
            c.worst_case.as_str().into(),
        ]);
    }
    let failure = (!report.passed()).then(|| {
        report
            .failures()
            .map(|c| {
                format!(
                    "{}: gap {} at {}",
                    c.name,
                    format_number(c.gap),
                    c.worst_case
                )
            })
            .collect::<Vec<_>>()
            .join("\n  ")
    });
    Ok((rec, failure))
}
