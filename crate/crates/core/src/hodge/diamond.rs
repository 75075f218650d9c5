use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::betti::BettiVector;
use super::plethysm::{convolve, ext_dim, graded_power, sym_dim};
use crate::error::{HodgeError, Result};

/// A bidegree `(p, q)`.
pub type Bidegree = (u32, u32);

/// Dimensions `h^{p,q}` of a bigraded space, zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawDiamond", into = "RawDiamond")]
pub struct HodgeDiamond {
    dim: Option<u32>,
    entries: BTreeMap<Bidegree, u64>,
}

#[derive(Serialize, Deserialize)]
struct RawDiamond {
    complex_dimension: Option<u32>,
    entries: Vec<(u32, u32, i64)>,
}

impl TryFrom<RawDiamond> for HodgeDiamond {
    type Error = HodgeError;

    fn try_from(raw: RawDiamond) -> Result<Self> {
        HodgeDiamond::new(raw.complex_dimension, raw.entries)
    }
}

impl From<HodgeDiamond> for RawDiamond {
    fn from(d: HodgeDiamond) -> Self {
        RawDiamond {
            complex_dimension: d.dim,
            entries: d.entries.iter().map(|(&(p, q), &h)| (p, q, h as i64)).collect(),
        }
    }
}

fn in_bounds(dim: u32, (p, q): Bidegree) -> bool {
    p <= dim && q <= dim
}

impl HodgeDiamond {
    /// Builds a validated table from `(p, q, h)` triples.
    ///
    /// Zero values are dropped. With `dim = Some(n)` every entry must satisfy
    /// `p, q <= n`.
    pub fn new<I>(dim: Option<u32>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, i64)>,
    {
        let mut map = BTreeMap::new();
        for (p, q, value) in entries {
            if value < 0 {
                return Err(HodgeError::NegativeDimension { p, q, value });
            }
            if map.insert((p, q), value as u64).is_some() {
                return Err(HodgeError::DuplicateEntry { p, q });
            }
            if let Some(n) = dim {
                if !in_bounds(n, (p, q)) {
                    return Err(HodgeError::OutOfBounds { p, q, dim: n });
                }
            }
        }
        map.retain(|_, v| *v != 0);
        Ok(HodgeDiamond { dim, entries: map })
    }

    /// Internal constructor for tables produced by the algebra itself.
    pub(crate) fn from_map(dim: Option<u32>, mut entries: BTreeMap<Bidegree, u64>) -> Self {
        entries.retain(|_, v| *v != 0);
        debug_assert!(dim.is_none_or(|n| entries.keys().all(|&k| in_bounds(n, k))));
        HodgeDiamond { dim, entries }
    }

    /// The zero space.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The point: `h^{0,0} = 1` in complex dimension zero.
    pub fn point() -> Self {
        Self::from_map(Some(0), BTreeMap::from([((0, 0), 1)]))
    }

    /// Abstract table with a single entry.
    pub fn single(p: u32, q: u32, value: u64) -> Self {
        Self::from_map(None, BTreeMap::from([((p, q), value)]))
    }

    pub fn complex_dimension(&self) -> Option<u32> {
        self.dim
    }

    fn require_dim(&self) -> Result<u32> {
        self.dim.ok_or(HodgeError::MissingDimension)
    }

    /// Same entries, viewed as an abstract bigraded space.
    pub fn into_abstract(mut self) -> Self {
        self.dim = None;
        self
    }

    /// Attaches a complex dimension, checking the bounds.
    pub fn with_dimension(self, n: u32) -> Result<Self> {
        if let Some(&(p, q)) = self.entries.keys().find(|&&k| !in_bounds(n, k)) {
            return Err(HodgeError::OutOfBounds { p, q, dim: n });
        }
        Ok(HodgeDiamond { dim: Some(n), ..self })
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Nonzero entries in lexicographic `(p, q)` order.
    pub fn entries(&self) -> impl Iterator<Item = (Bidegree, u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `Σ_{p+q=w} h^{p,q}` for `w = 0..=max_weight`.
    pub fn weight_totals(&self, max_weight: u32) -> Vec<u64> {
        let mut out = vec![0; max_weight as usize + 1];
        for (&(p, q), &h) in &self.entries {
            if let Some(slot) = out.get_mut((p + q) as usize) {
                *slot += h;
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Entries of total degree `p + q = weight`.
    pub fn weight_part(&self, weight: u32) -> HodgeDiamond {
        let entries = self.entries.iter().filter(|(&(p, q), _)| p + q == weight).map(|(&k, &v)| (k, v)).collect();
        Self::from_map(None, entries)
    }

    /// Entries of total degree at most `max_weight`.
    pub fn truncate_weight(&self, max_weight: u32) -> HodgeDiamond {
        let entries = self.entries.iter().filter(|(&(p, q), _)| p + q <= max_weight).map(|(&k, &v)| (k, v)).collect();
        Self::from_map(None, entries)
    }

    pub fn betti(&self) -> Result<BettiVector> {
        let n = self.require_dim()?;
        let mut b = vec![0u64; 2 * n as usize + 1];
        for (&(p, q), &h) in &self.entries {
            b[(p + q) as usize] += h;
        }
        BettiVector::new(n, b)
    }

    /// `χ^p = Σ_q (-1)^q h^{p,q}`.
    pub fn chi_p(&self, p: u32) -> Result<i64> {
        let n = self.require_dim()?;
        if p > n {
            return Err(HodgeError::IndexOutOfRange { index: p as i64, max: n as i64 });
        }
        Ok(self
            .entries
            .range((p, 0)..=(p, u32::MAX))
            .map(|(&(_, q), &h)| if q % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum())
    }

    /// Topological Euler characteristic `Σ (-1)^{p+q} h^{p,q}`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        self.require_dim()?;
        Ok(self
            .entries
            .iter()
            .map(|(&(p, q), &h)| if (p + q) % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum())
    }

    /// Entrywise sum. The dimension survives only when both sides agree on it.
    pub fn direct_sum(&self, other: &HodgeDiamond) -> HodgeDiamond {
        let mut entries = self.entries.clone();
        for (&k, &v) in &other.entries {
            *entries.entry(k).or_insert(0) += v;
        }
        let dim = match (self.dim, other.dim) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        Self::from_map(dim, entries)
    }

    /// Künneth product; complex dimensions add.
    pub fn tensor(&self, other: &HodgeDiamond) -> HodgeDiamond {
        let dim = self.dim.zip(other.dim).map(|(a, b)| a + b);
        Self::from_map(dim, convolve(&self.entries, &other.entries))
    }

    /// Multiplies every entry by `factor` (disjoint copies of a space).
    pub fn scale(&self, factor: u64) -> HodgeDiamond {
        let entries = self.entries.iter().map(|(&k, &v)| (k, v * factor)).collect();
        Self::from_map(self.dim, entries)
    }

    /// Shifts every entry by `(k, k)`; the result is abstract.
    pub fn tate_twist(&self, k: i32) -> Result<HodgeDiamond> {
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

    /// `Sym^k` of the bigraded space; only even total degrees are accepted.
    pub fn sym_power(&self, k: u32) -> Result<HodgeDiamond> {
        self.require_even_support()?;
        let out = graded_power(&self.entries, k, |m, j| sym_dim(m, j as u64));
        Ok(Self::from_map(None, out))
    }

    /// `Λ^k` of the bigraded space; only even total degrees are accepted.
    pub fn ext_power(&self, k: u32) -> Result<HodgeDiamond> {
        self.require_even_support()?;
        let out = graded_power(&self.entries, k, |m, j| ext_dim(m, j as u64));
        Ok(Self::from_map(None, out))
    }

    /// Extends a table known for `p + q <= n` to complex dimension `n` by
    /// `h^{p,q} = h^{n-p,n-q}`.
    ///
    /// Entries already present above the middle degree must agree with their
    /// mirror.
    pub fn complete_by_duality(&self, n: u32) -> Result<HodgeDiamond> {
        let mut entries = BTreeMap::new();
        for (&(p, q), &v) in &self.entries {
            if !in_bounds(n, (p, q)) {
                return Err(HodgeError::OutOfBounds { p, q, dim: n });
            }
            match (p + q).cmp(&n) {
                std::cmp::Ordering::Less => {
                    entries.insert((p, q), v);
                    entries.insert((n - p, n - q), v);
                }
                std::cmp::Ordering::Equal => {
                    entries.insert((p, q), v);
                }
                std::cmp::Ordering::Greater => {
                    let mirror = self.get(n - p, n - q);
                    if mirror != v {
                        return Err(HodgeError::DualityConflict { p, q, found: v, mirror });
                    }
                }
            }
        }
        // an explicit upper half must not drop mirrors of lower entries
        let has_upper = self.entries.keys().any(|&(p, q)| p + q > n);
        for (&(p, q), &v) in &self.entries {
            if has_upper && p + q < n && self.get(n - p, n - q) != v {
                return Err(HodgeError::DualityConflict { p: n - p, q: n - q, found: self.get(n - p, n - q), mirror: v });
            }
        }
        Ok(Self::from_map(Some(n), entries))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diamond serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| HodgeError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> HodgeDiamond {
        HodgeDiamond::new(Some(2), [(0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1), (2, 2, 1)]).unwrap()
    }

    #[test]
    fn constructor_validation() {
        assert_eq!(HodgeDiamond::new(Some(0), [(0, 0, 1)]).unwrap(), HodgeDiamond::point());
        assert_eq!(
            HodgeDiamond::new(Some(2), [(1, 1, -3)]),
            Err(HodgeError::NegativeDimension { p: 1, q: 1, value: -3 })
        );
        assert_eq!(
            HodgeDiamond::new(None, [(1, 1, 2), (1, 1, 3)]),
            Err(HodgeError::DuplicateEntry { p: 1, q: 1 })
        );
        assert_eq!(
            HodgeDiamond::new(Some(2), [(3, 0, 1)]),
            Err(HodgeError::OutOfBounds { p: 3, q: 0, dim: 2 })
        );
        let d = HodgeDiamond::new(None, [(1, 0, 0), (0, 0, 2)]).unwrap();
        assert_eq!(d.entries().collect::<Vec<_>>(), vec![((0, 0), 2)]);
    }

    #[test]
    fn abstract_tables_refuse_manifold_queries() {
        let d = HodgeDiamond::single(1, 1, 1);
        assert_eq!(d.betti(), Err(HodgeError::MissingDimension));
        assert_eq!(d.euler_characteristic(), Err(HodgeError::MissingDimension));
    }

    #[test]
    fn chi_p_of_k3_and_point() {
        assert_eq!(k3().chi_p(1), Ok(-20));
        assert_eq!(k3().chi_p(0), Ok(2));
        assert_eq!(HodgeDiamond::point().chi_p(0), Ok(1));
        assert!(matches!(k3().chi_p(3), Err(HodgeError::IndexOutOfRange { .. })));
        assert_eq!(k3().euler_characteristic(), Ok(24));
    }

    #[test]
    fn tensor_examples() {
        let a = HodgeDiamond::single(1, 0, 2);
        let b = HodgeDiamond::single(0, 1, 2);
        assert_eq!(a.tensor(&b), HodgeDiamond::single(1, 1, 4));
        assert_eq!(k3().tensor(&HodgeDiamond::point()), k3());
    }

    #[test]
    fn twist_examples() {
        let d = k3();
        assert_eq!(d.tate_twist(0).unwrap(), d.clone().into_abstract());
        assert_eq!(HodgeDiamond::point().tate_twist(3).unwrap(), HodgeDiamond::single(3, 3, 1));
        assert_eq!(
            HodgeDiamond::single(1, 0, 1).tate_twist(-1),
            Err(HodgeError::NegativeIndex { p: 1, q: 0, shift: -1 })
        );
    }

    #[test]
    fn sym_square_of_k3_weight_two() {
        let h2 = k3().weight_part(2);
        let expected = HodgeDiamond::new(None, [(4, 0, 1), (3, 1, 20), (2, 2, 211), (1, 3, 20), (0, 4, 1)]).unwrap();
        assert_eq!(h2.sym_power(2).unwrap(), expected);
        assert_eq!(h2.sym_power(1).unwrap(), h2);
    }

    #[test]
    fn exterior_powers() {
        let h2 = HodgeDiamond::new(None, [(2, 0, 1), (1, 1, 21), (0, 2, 1)]).unwrap();
        let lam = h2.ext_power(2).unwrap();
        assert_eq!(lam, HodgeDiamond::new(None, [(3, 1, 21), (2, 2, 211), (1, 3, 21)]).unwrap());
        assert_eq!(lam.total_dimension(), 253);
        assert_eq!(h2.sym_power(3).unwrap().total_dimension(), 2300);
        assert!(HodgeDiamond::single(2, 0, 1).ext_power(2).unwrap().is_empty());
    }

    #[test]
    fn odd_support_is_refused() {
        let d = HodgeDiamond::single(1, 0, 2);
        assert_eq!(d.sym_power(2), Err(HodgeError::OddSupport { p: 1, q: 0 }));
        assert_eq!(d.ext_power(2), Err(HodgeError::OddSupport { p: 1, q: 0 }));
    }

    #[test]
    fn duality_completion() {
        let lower = HodgeDiamond::new(None, [(0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1)]).unwrap();
        assert_eq!(lower.complete_by_duality(2).unwrap(), k3());
        let bad = HodgeDiamond::new(None, [(0, 0, 1), (2, 2, 2)]).unwrap();
        assert!(matches!(bad.complete_by_duality(2), Err(HodgeError::DualityConflict { .. })));
    }

    #[test]
    fn json_layout() {
        let text = k3().to_json();
        assert_eq!(
            text,
            r#"{"complex_dimension":2,"entries":[[0,0,1],[0,2,1],[1,1,20],[2,0,1],[2,2,1]]}"#
        );
        assert_eq!(HodgeDiamond::from_json(&text).unwrap(), k3());
        let abs = HodgeDiamond::single(1, 1, 3).to_json();
        assert_eq!(abs, r#"{"complex_dimension":null,"entries":[[1,1,3]]}"#);
        assert!(HodgeDiamond::from_json(r#"{"complex_dimension":1,"entries":[[0,0,-1]]}"#).is_err());
    }
}
