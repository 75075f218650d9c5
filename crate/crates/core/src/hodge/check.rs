use std::fmt;

use super::diamond::HodgeDiamond;
use crate::error::{HodgeError, Result};

/// A failed symmetry of a Hodge diamond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `h^{p,q} != h^{q,p}`
    HodgeSymmetry { p: u32, q: u32, value: u64, mirror: u64 },
    /// `h^{p,q} != h^{n-p,n-q}`
    PoincareDuality { p: u32, q: u32, value: u64, mirror: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HodgeSymmetry { p, q, value, mirror } => {
                write!(f, "Hodge symmetry: h^{{{p},{q}}} = {value} but h^{{{q},{p}}} = {mirror}")
            }
            Violation::PoincareDuality { p, q, value, mirror } => {
                write!(f, "Poincaré duality: h^{{{p},{q}}} = {value} but its dual is {mirror}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiamondReport {
    pub violations: Vec<Violation>,
}

impl DiamondReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks Hodge symmetry and Poincaré duality. Nonnegativity is guaranteed by
/// construction of [`HodgeDiamond`].
pub fn check_diamond(d: &HodgeDiamond) -> Result<DiamondReport> {
    let n = d.complex_dimension().ok_or(HodgeError::MissingDimension)?;
    let mut violations = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            let value = d.get(p, q);
            if p < q {
                let mirror = d.get(q, p);
                if value != mirror {
                    violations.push(Violation::HodgeSymmetry { p, q, value, mirror });
                }
            }
            if (p, q) < (n - p, n - q) {
                let mirror = d.get(n - p, n - q);
                if value != mirror {
                    violations.push(Violation::PoincareDuality { p, q, value, mirror });
                }
            }
        }
    }
    Ok(DiamondReport { violations })
}
