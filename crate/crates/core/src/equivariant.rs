//! Bigraded spaces carrying an involution.
//!
//! Every bidegree holds the dimensions of the `+1` and `-1` eigenspaces. The
//! involution is assumed complex-linear and bidegree-preserving, so the two
//! eigenspace tables are kept per `(p, q)` without conjugation bookkeeping.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{HodgeError, Result};
use crate::hodge::plethysm::{convolve, ext_dim, graded_power, sym_dim, Multiplicity};
use crate::hodge::{Bidegree, HodgeDiamond};

/// Dimensions of the invariant and anti-invariant parts of one bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Split {
    pub plus: u64,
    pub minus: u64,
}

impl Split {
    pub const fn new(plus: u64, minus: u64) -> Self {
        Split { plus, minus }
    }

    pub fn total(self) -> u64 {
        self.plus + self.minus
    }
}

impl Multiplicity for Split {
    fn zero() -> Self {
        Split::new(0, 0)
    }
    fn one() -> Self {
        Split::new(1, 0)
    }
    fn add(self, o: Self) -> Self {
        Split::new(self.plus + o.plus, self.minus + o.minus)
    }
    fn mul(self, o: Self) -> Self {
        Split::new(self.plus * o.plus + self.minus * o.minus, self.plus * o.minus + self.minus * o.plus)
    }
}

// Sym^j / Λ^j of one homogeneous piece: ⊕_{i+l=j} P^i(V+) ⊗ P^l(V-), the
// sign being (-1)^l.
fn piece_power(s: Split, j: u32, dim: fn(u64, u64) -> u64) -> Split {
    let mut out = Split::zero();
    for l in 0..=j as u64 {
        let term = dim(s.plus, j as u64 - l) * dim(s.minus, l);
        if l % 2 == 0 {
            out.plus += term;
        } else {
            out.minus += term;
        }
    }
    out
}

/// Table `(p, q) -> (plus, minus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawEquivariant", into = "RawEquivariant")]
pub struct EquivariantDiamond {
    dim: Option<u32>,
    entries: BTreeMap<Bidegree, Split>,
}

#[derive(Serialize, Deserialize)]
struct RawEquivariant {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complex_dimension: Option<u32>,
    entries: Vec<(u32, u32, i64, i64)>,
}

impl TryFrom<RawEquivariant> for EquivariantDiamond {
    type Error = HodgeError;

    fn try_from(raw: RawEquivariant) -> Result<Self> {
        EquivariantDiamond::new(raw.complex_dimension, raw.entries)
    }
}

impl From<EquivariantDiamond> for RawEquivariant {
    fn from(d: EquivariantDiamond) -> Self {
        RawEquivariant {
            complex_dimension: d.dim,
            entries: d.entries.iter().map(|(&(p, q), s)| (p, q, s.plus as i64, s.minus as i64)).collect(),
        }
    }
}

impl EquivariantDiamond {
    /// Builds a table from `(p, q, plus, minus)` rows.
    pub fn new<I>(dim: Option<u32>, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, i64, i64)>,
    {
        let mut entries = BTreeMap::new();
        for (p, q, plus, minus) in rows {
            for value in [plus, minus] {
                if value < 0 {
                    return Err(HodgeError::NegativeDimension { p, q, value });
                }
            }
            if let Some(n) = dim {
                if p > n || q > n {
                    return Err(HodgeError::OutOfBounds { p, q, dim: n });
                }
            }
            if entries.insert((p, q), Split::new(plus as u64, minus as u64)).is_some() {
                return Err(HodgeError::DuplicateEntry { p, q });
            }
        }
        Ok(Self::from_map(dim, entries))
    }

    pub(crate) fn from_map(dim: Option<u32>, mut entries: BTreeMap<Bidegree, Split>) -> Self {
        entries.retain(|_, s| !s.is_zero());
        EquivariantDiamond { dim, entries }
    }

    /// A table on which the involution acts trivially.
    pub fn all_invariant(d: &HodgeDiamond) -> Self {
        let entries = d.entries().map(|(k, v)| (k, Split::new(v, 0))).collect();
        Self::from_map(d.complex_dimension(), entries)
    }

    /// One-dimensional trivial representation at `(p, q)`.
    pub fn trivial_line(p: u32, q: u32) -> Self {
        Self::from_map(None, BTreeMap::from([((p, q), Split::new(1, 0))]))
    }

    pub fn complex_dimension(&self) -> Option<u32> {
        self.dim
    }

    pub fn get(&self, p: u32, q: u32) -> Split {
        self.entries.get(&(p, q)).copied().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Bidegree, Split)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight_part(&self, weight: u32) -> EquivariantDiamond {
        let entries = self.entries.iter().filter(|(&(p, q), _)| p + q == weight).map(|(&k, &v)| (k, v)).collect();
        Self::from_map(None, entries)
    }

    pub fn eq_sum(&self, other: &EquivariantDiamond) -> EquivariantDiamond {
        let mut entries = self.entries.clone();
        for (&k, &v) in &other.entries {
            let slot = entries.entry(k).or_default();
            *slot = slot.add(v);
        }
        let dim = match (self.dim, other.dim) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        Self::from_map(dim, entries)
    }

    /// Tensor product with the sign rule `(+)(+) = (-)(-) = +`.
    pub fn eq_tensor(&self, other: &EquivariantDiamond) -> EquivariantDiamond {
        let dim = self.dim.zip(other.dim).map(|(a, b)| a + b);
        Self::from_map(dim, convolve(&self.entries, &other.entries))
    }

    pub fn eq_tate_twist(&self, k: i32) -> Result<EquivariantDiamond> {
        let mut entries = BTreeMap::new();
        for (&(p, q), &v) in &self.entries {
            let (np, nq) = (p as i64 + k as i64, q as i64 + k as i64);
            if np < 0 || nq < 0 {
                return Err(HodgeError::NegativeIndex { p, q, shift: k });
            }
            entries.insert((np as u32, nq as u32), v);
        }
        Ok(Self::from_map(None, entries))
    }

    fn require_even_support(&self) -> Result<()> {
        match self.entries.keys().find(|(p, q)| (p + q) % 2 == 1) {
            Some(&(p, q)) => Err(HodgeError::OddSupport { p, q }),
            None => Ok(()),
        }
    }

    pub fn eq_sym_power(&self, k: u32) -> Result<EquivariantDiamond> {
        self.require_even_support()?;
        let out = graded_power(&self.entries, k, |s, j| piece_power(s, j, sym_dim));
        Ok(Self::from_map(None, out))
    }

    pub fn eq_ext_power(&self, k: u32) -> Result<EquivariantDiamond> {
        self.require_even_support()?;
        let out = graded_power(&self.entries, k, |s, j| piece_power(s, j, ext_dim));
        Ok(Self::from_map(None, out))
    }

    fn project(&self, f: impl Fn(Split) -> u64) -> HodgeDiamond {
        let entries = self.entries.iter().map(|(&k, &s)| (k, f(s))).collect();
        HodgeDiamond::from_map(self.dim, entries)
    }

    pub fn invariant_part(&self) -> HodgeDiamond {
        self.project(|s| s.plus)
    }

    pub fn anti_invariant_part(&self) -> HodgeDiamond {
        self.project(|s| s.minus)
    }

    /// Drops the group action.
    pub fn forget(&self) -> HodgeDiamond {
        self.project(Split::total)
    }

    /// Builds the split whose invariant part is `invariant` and whose
    /// underlying space is `total`.
    pub fn split_from_invariant(total: &HodgeDiamond, invariant: &HodgeDiamond) -> Result<EquivariantDiamond> {
        let mut entries = BTreeMap::new();
        for ((p, q), inv) in invariant.entries() {
            let t = total.get(p, q);
            if inv > t {
                return Err(HodgeError::InvariantExceedsTotal { p, q, invariant: inv, total: t });
            }
        }
        for ((p, q), t) in total.entries() {
            let inv = invariant.get(p, q);
            entries.insert((p, q), Split::new(inv, t - inv));
        }
        Ok(Self::from_map(total.complex_dimension(), entries))
    }

    /// Bidegrees where `plus^{p,q} != plus^{q,p}` or `minus^{p,q} != minus^{q,p}`.
    pub fn symmetry_violations(&self) -> Vec<Bidegree> {
        let pairs: std::collections::BTreeSet<Bidegree> =
            self.entries.keys().filter(|(p, q)| p != q).map(|&(p, q)| (p.min(q), p.max(q))).collect();
        pairs.into_iter().filter(|&(p, q)| self.get(p, q) != self.get(q, p)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("equivariant serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| HodgeError::Json(e.to_string()))
    }
}
