//! Cohomology of a `K3^[3]`-type manifold in terms of its second cohomology:
//! `H^4 = Sym^2 H^2 ⊕ H^2` and `H^6 = Sym^3 H^2 ⊕ Λ^2 H^2 ⊕ C`, as
//! representations of the monodromy group. The summands `H^2` in `H^4` and
//! `Λ^2 H^2` in `H^6` sit with a `(1,1)` shift; `C` is the trivial
//! representation in bidegree `(3,3)`.

use crate::equivariant::EquivariantDiamond;
use crate::error::{HodgeError, Result};
use crate::goettsche::{hilbert_scheme_diamond, surface_diamond, GoettscheConfig, SurfaceKind};
use crate::hodge::HodgeDiamond;

fn require_weight_two(entries: impl Iterator<Item = (u32, u32)>) -> Result<()> {
    for (p, q) in entries {
        if p + q != 2 {
            return Err(HodgeError::WrongSupport { expected: 2 });
        }
    }
    Ok(())
}

/// Splits `H^2` of a `K3^[3]`-type manifold into monodromy-invariant and
/// anti-invariant parts, given the second Betti number of the sixfold.
///
/// The symplectic form is invariant (`h^{2,0}_+ = h^{0,2}_+ = 1`) and
/// `h^{1,1}_+ = (b2 - 2) - 1`: one invariant `(1,1)` class of the quotient
/// comes from the exceptional divisor rather than from `H^2` of Y.
pub fn derive_invariant_h2(b2: i64) -> Result<EquivariantDiamond> {
    if b2 < 3 {
        return Err(HodgeError::InvalidSecondBetti(b2));
    }
    let k3_cubed = hilbert_scheme_diamond(&surface_diamond(SurfaceKind::K3), 3, GoettscheConfig::default())?;
    let total = k3_cubed.weight_part(2);
    let invariant = HodgeDiamond::new(None, [(2, 0, 1), (1, 1, b2 - 3), (0, 2, 1)])?;
    match EquivariantDiamond::split_from_invariant(&total, &invariant) {
        Err(HodgeError::InvariantExceedsTotal { .. }) => Err(HodgeError::InvalidSecondBetti(b2)),
        other => other,
    }
}

/// The weight-4 or weight-6 part of the cohomology as a representation.
pub fn markman_equivariant(h2: &EquivariantDiamond, weight: u32) -> Result<EquivariantDiamond> {
    require_weight_two(h2.entries().map(|(k, _)| k))?;
    match weight {
        4 => Ok(h2.eq_sym_power(2)?.eq_sum(&h2.eq_tate_twist(1)?)),
        6 => {
            let twisted = h2.eq_ext_power(2)?.eq_tate_twist(1)?;
            Ok(h2.eq_sym_power(3)?.eq_sum(&twisted).eq_sum(&EquivariantDiamond::trivial_line(3, 3)))
        }
        w => Err(HodgeError::UnsupportedWeight(w)),
    }
}

/// All weights up to the middle: `C ⊕ H^2 ⊕ H^4 ⊕ H^6`.
pub fn markman_assembly(h2: &EquivariantDiamond) -> Result<EquivariantDiamond> {
    Ok(EquivariantDiamond::trivial_line(0, 0)
        .eq_sum(h2)
        .eq_sum(&markman_equivariant(h2, 4)?)
        .eq_sum(&markman_equivariant(h2, 6)?))
}

/// The same assembly without the group action, from plain dimension tables.
pub fn markman_plain(h2: &HodgeDiamond) -> Result<HodgeDiamond> {
    require_weight_two(h2.entries().map(|(k, _)| k))?;
    let weight4 = h2.sym_power(2)?.direct_sum(&h2.tate_twist(1)?);
    let weight6 = h2
        .sym_power(3)?
        .direct_sum(&h2.ext_power(2)?.tate_twist(1)?)
        .direct_sum(&HodgeDiamond::single(3, 3, 1));
    Ok(HodgeDiamond::single(0, 0, 1).direct_sum(h2).direct_sum(&weight4).direct_sum(&weight6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::Split;

    #[test]
    fn invariant_h2_split() {
        let h2 = derive_invariant_h2(8).unwrap();
        assert_eq!(h2.get(2, 0), Split::new(1, 0));
        assert_eq!(h2.get(0, 2), Split::new(1, 0));
        assert_eq!(h2.get(1, 1), Split::new(5, 16));
        assert_eq!(derive_invariant_h2(3).unwrap().get(1, 1), Split::new(0, 21));
        assert_eq!(derive_invariant_h2(30), Err(HodgeError::InvalidSecondBetti(30)));
        assert_eq!(derive_invariant_h2(2), Err(HodgeError::InvalidSecondBetti(2)));
    }

    #[test]
    fn invariant_rows() {
        let h2 = derive_invariant_h2(8).unwrap();
        let w4 = markman_equivariant(&h2, 4).unwrap().invariant_part();
        assert_eq!((w4.get(4, 0), w4.get(3, 1), w4.get(2, 2)), (1, 6, 157));
        let w6 = markman_equivariant(&h2, 6).unwrap().invariant_part();
        assert_eq!((w6.get(6, 0), w6.get(5, 1), w6.get(4, 2), w6.get(3, 3)), (1, 5, 157, 852));
    }

    #[test]
    fn all_invariant_input_gives_k3_cubed() {
        let total = derive_invariant_h2(8).unwrap().forget();
        let w4 = markman_equivariant(&EquivariantDiamond::all_invariant(&total), 4).unwrap().forget();
        assert_eq!((w4.get(3, 1), w4.get(2, 2)), (22, 253));
    }

    #[test]
    fn support_checks() {
        let bad = EquivariantDiamond::trivial_line(1, 0);
        assert_eq!(markman_equivariant(&bad, 4), Err(HodgeError::WrongSupport { expected: 2 }));
        let h2 = derive_invariant_h2(8).unwrap();
        assert_eq!(markman_equivariant(&h2, 8), Err(HodgeError::UnsupportedWeight(8)));
    }
}
