use std::collections::BTreeMap;

use super::{NamedConstants, OG6_DIM};
use crate::error::{HodgeError, Result};
use crate::goettsche::abelian_fourfold_diamond;
use crate::hodge::{check_diamond, HodgeDiamond};

/// Classes added by blowing up a smooth centre `Z` of codimension `codim`:
/// `Σ_{k=1}^{codim-1} h^{p-k,q-k}(Z)`.
pub fn blowup_correction(center: &HodgeDiamond, codim: u32) -> HodgeDiamond {
    (1..codim).fold(HodgeDiamond::zero(), |acc, k| {
        acc.direct_sum(&center.tate_twist(k as i32).expect("positive twist"))
    })
}

/// Hodge diamond of the blow-up of `x` along `z`, where `z` has codimension
/// `codim`.
pub fn blowup_diamond(x: &HodgeDiamond, z: &HodgeDiamond, codim: u32) -> Result<HodgeDiamond> {
    let n = x.complex_dimension().ok_or(HodgeError::MissingDimension)?;
    if z.is_empty() {
        return Ok(x.clone());
    }
    let expected = n.checked_sub(codim).ok_or(HodgeError::DimensionMismatch { expected: 0, found: z.complex_dimension() })?;
    if z.complex_dimension() != Some(expected) {
        return Err(HodgeError::DimensionMismatch { expected, found: z.complex_dimension() });
    }
    x.direct_sum(&blowup_correction(z, codim)).into_abstract().with_dimension(n)
}

/// Smooth quadric threefold: one class in each even degree.
pub fn quadric3_diamond() -> HodgeDiamond {
    HodgeDiamond::new(Some(3), (0..=3).map(|k| (k, k, 1))).expect("valid quadric table")
}

/// Dimensions of the swap-invariant part of `H^{k,k}` of the incidence
/// divisor `{σ(v, w) = 0} ⊂ P^3 × P^3`, for `k = 0, 1, 2`.
pub fn incidence_swap_invariants() -> [u64; 3] {
    [1, 1, 2]
}

/// The fixed locus of the involution on Ȳ: the blow-up of `A × A^∨` in its
/// 2-torsion points, modulo `±1`. Odd classes of the torus are
/// anti-invariant, and each blown-up point adds one class in degrees
/// `(1,1), (2,2), (3,3)`.
pub fn delta_bar_diamond(constants: NamedConstants) -> HodgeDiamond {
    let torus = abelian_fourfold_diamond();
    let even = torus.entries().filter(|((p, q), _)| (p + q) % 2 == 0);
    let mut entries: BTreeMap<(u32, u32), u64> = even.collect();
    for k in 1..=3 {
        *entries.entry((k, k)).or_insert(0) += constants.two_torsion_count;
    }
    HodgeDiamond::new(Some(4), entries.into_iter().map(|((p, q), v)| (p, q, v as i64))).expect("valid fixed-locus table")
}

fn lower_half(d: &HodgeDiamond) -> HodgeDiamond {
    d.truncate_weight(OG6_DIM)
}

/// Corrections from the exceptional divisor over the 256 projective spaces:
/// its swap-invariant classes shifted by `(1,1)`.
pub(crate) fn ybar_correction(constants: NamedConstants) -> HodgeDiamond {
    let entries = incidence_swap_invariants()
        .into_iter()
        .zip(0u32..)
        .map(|(dim, k)| (k, k, (dim * constants.two_torsion_count) as i64));
    let invariants = HodgeDiamond::new(None, entries).expect("valid incidence table");
    invariants.tate_twist(1).expect("positive twist")
}

/// Invariant Hodge numbers of Ȳ from the monodromy-invariant numbers of Y,
/// for `p + q <= 6`.
pub fn ybar_invariants(y_inv: &HodgeDiamond, constants: NamedConstants) -> HodgeDiamond {
    lower_half(&y_inv.direct_sum(&ybar_correction(constants)))
}

pub(crate) fn yhat_correction(constants: NamedConstants) -> HodgeDiamond {
    blowup_correction(&delta_bar_diamond(constants), 2)
}

/// Invariant Hodge numbers of Ŷ. Every class coming from the exceptional
/// divisor over Δ̄ is invariant since that divisor is fixed pointwise.
pub fn yhat_invariants(ybar_inv: &HodgeDiamond, constants: NamedConstants) -> HodgeDiamond {
    lower_half(&ybar_inv.direct_sum(&yhat_correction(constants)))
}

/// The quotient K̂ = Ŷ / involution has exactly the invariant Hodge numbers.
pub fn khat_diamond(yhat_inv: &HodgeDiamond) -> HodgeDiamond {
    yhat_inv.clone()
}

pub(crate) fn quadric_correction(constants: NamedConstants) -> HodgeDiamond {
    blowup_correction(&quadric3_diamond(), 3).scale(constants.two_torsion_count)
}

/// Removes the classes of the exceptional divisors over the 256 quadrics
/// from the lower half of K̂ and completes the result by duality.
pub fn og6_diamond(khat: &HodgeDiamond, constants: NamedConstants) -> Result<HodgeDiamond> {
    let corrections = lower_half(&quadric_correction(constants));
    let mut entries = BTreeMap::new();
    for ((p, q), value) in lower_half(khat).entries() {
        entries.insert((p, q), value);
    }
    for ((p, q), correction) in corrections.entries() {
        let value = entries.get(&(p, q)).copied().unwrap_or(0);
        let reduced = value
            .checked_sub(correction)
            .ok_or(HodgeError::NegativeAfterCorrection { p, q, value, correction })?;
        entries.insert((p, q), reduced);
    }
    let lower = HodgeDiamond::new(None, entries.into_iter().map(|((p, q), v)| (p, q, v as i64)))?;
    let full = lower.complete_by_duality(OG6_DIM)?;
    let report = check_diamond(&full)?;
    if let Some(v) = report.violations.first() {
        return Err(HodgeError::Inconsistent(format!("OG6 diamond fails its symmetry check: {v}")));
    }
    Ok(full)
}
