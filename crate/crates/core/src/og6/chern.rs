use serde::Serialize;

use super::OG6_DIM;
use crate::error::{HodgeError, Result};
use crate::hodge::HodgeDiamond;

/// Chern numbers of a hyperkähler sixfold together with the `χ^p` they are
/// computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChernReport {
    pub chi0: i64,
    pub chi1: i64,
    pub chi2: i64,
    pub c2_cubed: i64,
    pub c2_c4: i64,
    pub c6: i64,
}

/// Chern numbers `∫c2³, ∫c2c4, ∫c6` of a hyperkähler sixfold as linear forms
/// in `χ^0, χ^1, χ^2`.
pub fn chern_numbers(d: &HodgeDiamond) -> Result<ChernReport> {
    if d.complex_dimension() != Some(OG6_DIM) {
        return Err(HodgeError::DimensionMismatch { expected: OG6_DIM, found: d.complex_dimension() });
    }
    let (chi0, chi1, chi2) = (d.chi_p(0)?, d.chi_p(1)?, d.chi_p(2)?);
    let report = ChernReport {
        chi0,
        chi1,
        chi2,
        c2_cubed: 7272 * chi0 - 184 * chi1 - 8 * chi2,
        c2_c4: 1368 * chi0 - 208 * chi1 - 8 * chi2,
        c6: 36 * chi0 - 16 * chi1 + 4 * chi2,
    };
    let euler = d.euler_characteristic()?;
    if report.c6 != euler {
        return Err(HodgeError::Inconsistent(format!(
            "∫c6 = {} differs from the Euler characteristic {euler}",
            report.c6
        )));
    }
    Ok(report)
}
