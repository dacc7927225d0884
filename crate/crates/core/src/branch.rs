//! Named scalar curves of `λ = y/x` that make up the piecewise bounds.

use crate::error::{Error, Result};

/// Slack on the domain check, so that endpoints computed in floating point
/// (e.g. `√2 − 1`) are accepted.
const DOMAIN_SLACK: f64 = 1e-12;

pub trait BranchCurve: Copy {
    /// Display name, e.g. `C4` or `D102`.
    fn name(&self) -> &'static str;

    /// Closed `λ`-interval on which the curve is defined.
    fn domain(&self) -> (f64, f64);

    /// The formula itself, without a domain check.
    fn formula(&self, lambda: f64) -> f64;

    fn contains(&self, lambda: f64) -> bool {
        let (lo, hi) = self.domain();
        lambda >= lo - DOMAIN_SLACK && lambda <= hi + DOMAIN_SLACK
    }

    fn value(&self, lambda: f64) -> Result<f64> {
        if self.contains(lambda) {
            Ok(self.formula(lambda))
        } else {
            let (lo, hi) = self.domain();
            Err(Error::OutsideBranchDomain {
                curve: self.name(),
                lambda,
                lo,
                hi,
            })
        }
    }
}
