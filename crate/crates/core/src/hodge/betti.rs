use serde::{Serialize, Serializer};

use crate::error::{HodgeError, Result};

/// Betti numbers `b_0, …, b_{2n}` of a compact complex `n`-fold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    dim: u32,
    numbers: Vec<u64>,
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.numbers.serialize(serializer)
    }
}

impl BettiVector {
    pub fn new(dim: u32, numbers: Vec<u64>) -> Result<Self> {
        let expected = 2 * dim as usize + 1;
        if numbers.len() != expected {
            return Err(HodgeError::BettiLength { dim, expected, found: numbers.len() });
        }
        Ok(BettiVector { dim, numbers })
    }

    pub fn complex_dimension(&self) -> u32 {
        self.dim
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.numbers
    }

    pub fn get(&self, k: usize) -> u64 {
        self.numbers.get(k).copied().unwrap_or(0)
    }

    pub fn even_part(&self) -> Vec<u64> {
        self.numbers.iter().step_by(2).copied().collect()
    }

    /// Salamon's relation read from the middle degree downwards:
    /// `2 Σ_{j=1}^{2m} (-1)^j (3j² - m) b_{2m-j} - m b_{2m}` where `m` is half
    /// the complex dimension.
    pub fn salamon_residual_one_sided(&self) -> Result<i64> {
        let m = self.half_dimension()?;
        Ok(one_sided(&self.numbers, m))
    }

    /// Salamon residual evaluated on both halves of the vector.
    ///
    /// The relation is read once from the middle degree downwards and once
    /// upwards (on the reversed vector) and the two readings are added, so a
    /// change of any single even Betti number is visible. On a vector
    /// satisfying Poincaré duality the two readings coincide; zero means the
    /// constraint holds.
    pub fn salamon_residual(&self) -> Result<i64> {
        let m = self.half_dimension()?;
        let reversed: Vec<u64> = self.numbers.iter().rev().copied().collect();
        Ok(one_sided(&self.numbers, m) + one_sided(&reversed, m))
    }

    fn half_dimension(&self) -> Result<i64> {
        if self.dim % 2 == 1 {
            return Err(HodgeError::OddComplexDimension(self.dim));
        }
        Ok(self.dim as i64 / 2)
    }
}

fn one_sided(b: &[u64], m: i64) -> i64 {
    let middle = 2 * m;
    let sum: i64 = (1..=middle)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * (3 * j * j - m) * b[(middle - j) as usize] as i64
        })
        .sum();
    2 * sum - m * b[middle as usize] as i64
}

/// Solves Salamon's relation together with the Euler characteristic for a
/// hyperkähler sixfold with vanishing odd cohomology:
/// `3 b6 = 18 b4 + 90 b2 + 210 b0` and `χ = 2 (b0 + b2 + b4) + b6`.
///
/// Returns `(b4, b6)`.
pub fn solve_betti_dim6(b0: i64, b2: i64, chi: i64) -> Result<(u64, u64)> {
    let fail = HodgeError::NoIntegralSolution { b0, b2, chi };
    // eliminating b6 gives 24 b4 = 3χ - 216 b0 - 96 b2
    let numerator = 3 * chi - 216 * b0 - 96 * b2;
    if numerator % 24 != 0 {
        return Err(fail);
    }
    let b4 = numerator / 24;
    let b6 = chi - 2 * (b0 + b2 + b4);
    if b0 < 0 || b2 < 0 || b4 < 0 || b6 < 0 {
        return Err(fail);
    }
    Ok((b4 as u64, b6 as u64))
}
