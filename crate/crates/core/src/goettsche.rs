//! Hodge numbers of Hilbert schemes of points on a surface.
//!
//! The generating function
//!
//! ```text
//! Σ_n Σ_{p,q} h^{p,q}(S^[n]) x^p y^q t^n
//!     = Π_{k≥1} Π_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} t^k)^{-(-1)^{p+q} h^{p,q}(S)}
//! ```
//!
//! is expanded in a dense series truncated at `t^n` and `x^{2n}, y^{2n}`;
//! factors with `k > n` cannot reach `t^n` and are skipped.

use std::fmt;
use std::str::FromStr;

use crate::error::{HodgeError, Result};
use crate::hodge::{binomial, HodgeDiamond};

/// Cap on `n` used when nothing else is configured.
pub const DEFAULT_MAX_N: u32 = 5;

/// Integer power series in `x, y, t` truncated at `x^max_xy, y^max_xy, t^max_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries3 {
    max_xy: u32,
    max_t: u32,
    coefficients: Vec<i64>,
}

impl TruncatedSeries3 {
    pub fn zero(max_xy: u32, max_t: u32) -> Self {
        let len = ((max_xy + 1) * (max_xy + 1) * (max_t + 1)) as usize;
        TruncatedSeries3 { max_xy, max_t, coefficients: vec![0; len] }
    }

    pub fn one(max_xy: u32, max_t: u32) -> Self {
        let mut s = Self::zero(max_xy, max_t);
        s.coefficients[0] = 1;
        s
    }

    pub fn bounds(&self) -> (u32, u32) {
        (self.max_xy, self.max_t)
    }

    fn in_bounds(&self, a: u32, b: u32, m: u32) -> bool {
        a <= self.max_xy && b <= self.max_xy && m <= self.max_t
    }

    fn index(&self, a: u32, b: u32, m: u32) -> usize {
        let side = self.max_xy + 1;
        ((m * side + a) * side + b) as usize
    }

    /// Coefficient of `x^a y^b t^m`; zero outside the bounds.
    pub fn coefficient(&self, a: u32, b: u32, m: u32) -> i64 {
        if self.in_bounds(a, b, m) {
            self.coefficients[self.index(a, b, m)]
        } else {
            0
        }
    }

    /// Adds `c · x^a y^b t^m`; terms beyond the bounds are discarded.
    pub fn add_term(&mut self, a: u32, b: u32, m: u32, c: i64) {
        if self.in_bounds(a, b, m) {
            let i = self.index(a, b, m);
            self.coefficients[i] += c;
        }
    }

    /// Nonzero terms as `((a, b, m), c)` ordered by `(m, a, b)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), i64)> + '_ {
        let side = self.max_xy + 1;
        self.coefficients.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(i, &c)| {
            let i = i as u32;
            ((i / side % side, i % side, i / (side * side)), c)
        })
    }

    /// Truncated product.
    pub fn mul(&self, other: &TruncatedSeries3) -> Result<TruncatedSeries3> {
        if self.bounds() != other.bounds() {
            return Err(HodgeError::BoundsMismatch { left: self.bounds(), right: other.bounds() });
        }
        let mut out = Self::zero(self.max_xy, self.max_t);
        let rhs: Vec<_> = other.terms().collect();
        for ((a1, b1, m1), c1) in self.terms() {
            for &((a2, b2, m2), c2) in &rhs {
                out.add_term(a1 + a2, b1 + b2, m1 + m2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// `t^m` coefficient as a polynomial table in `x, y`.
    pub fn t_coefficient(&self, m: u32) -> Vec<((u32, u32), i64)> {
        self.terms().filter(|((_, _, mm), _)| *mm == m).map(|((a, b, _), c)| ((a, b), c)).collect()
    }
}

/// `(1 + sign · x^dp y^dq t^dk)^exponent`, expanded by the binomial series
/// and truncated at `bounds = (max_xy, max_t)`.
pub fn factor_power(
    (dp, dq, dk): (u32, u32, u32),
    sign: i64,
    exponent: i64,
    (max_xy, max_t): (u32, u32),
) -> Result<TruncatedSeries3> {
    if dp == 0 && dq == 0 && dk == 0 {
        return Err(HodgeError::DegenerateFactor);
    }
    let mut out = TruncatedSeries3::one(max_xy, max_t);
    // generalized binomial C(e, j) via C(e, j+1) = C(e, j) (e - j) / (j + 1)
    let mut coeff: i128 = 1;
    let mut j: i64 = 1;
    loop {
        let (a, b, m) = (dp as i64 * j, dq as i64 * j, dk as i64 * j);
        if a > max_xy as i64 || b > max_xy as i64 || m > max_t as i64 {
            break;
        }
        coeff = coeff * (exponent - j + 1) as i128 / j as i128;
        if coeff == 0 {
            break;
        }
        let signed = if sign < 0 && j % 2 == 1 { -coeff } else { coeff };
        let c = i64::try_from(signed).expect("series coefficient overflows i64");
        out.add_term(a as u32, b as u32, m as u32, c);
        j += 1;
    }
    Ok(out)
}

/// Base surfaces for the Hilbert scheme construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    K3,
    Abelian,
    Point,
}

impl FromStr for SurfaceKind {
    type Err = HodgeError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k3" => Ok(SurfaceKind::K3),
            "abelian" => Ok(SurfaceKind::Abelian),
            "point" => Ok(SurfaceKind::Point),
            _ => Err(HodgeError::UnknownSurface(s.to_string())),
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::K3 => "k3",
            SurfaceKind::Abelian => "abelian",
            SurfaceKind::Point => "point",
        })
    }
}

pub fn surface_diamond(kind: SurfaceKind) -> HodgeDiamond {
    let entries: &[(u32, u32, i64)] = match kind {
        SurfaceKind::K3 => &[(0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1), (2, 2, 1)],
        SurfaceKind::Abelian => &[
            (0, 0, 1),
            (1, 0, 2),
            (0, 1, 2),
            (2, 0, 1),
            (1, 1, 4),
            (0, 2, 1),
            (2, 1, 2),
            (1, 2, 2),
            (2, 2, 1),
        ],
        SurfaceKind::Point => &[(0, 0, 1)],
    };
    let dim = if kind == SurfaceKind::Point { 0 } else { 2 };
    HodgeDiamond::new(Some(dim), entries.iter().copied()).expect("surface tables are valid")
}

/// `A × A^∨` for an abelian surface `A`: `h^{p,q} = C(4,p) C(4,q)`.
pub fn abelian_fourfold_diamond() -> HodgeDiamond {
    let entries = (0..=4u32).flat_map(|p| (0..=4u32).map(move |q| (p, q, (binomial(4, p as u64) * binomial(4, q as u64)) as i64)));
    HodgeDiamond::new(Some(4), entries).expect("binomial table is valid")
}

/// Truncation settings for the generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoettscheConfig {
    pub max_n: u32,
}

impl Default for GoettscheConfig {
    fn default() -> Self {
        GoettscheConfig { max_n: DEFAULT_MAX_N }
    }
}

/// The truncated product whose `t^n` coefficient is the diamond of `S^[n]`.
pub fn generating_series(surface: &HodgeDiamond, n: u32) -> Result<TruncatedSeries3> {
    if surface.complex_dimension() != Some(2) {
        return Err(HodgeError::DimensionMismatch { expected: 2, found: surface.complex_dimension() });
    }
    let bounds = (2 * n, n);
    let mut series = TruncatedSeries3::one(bounds.0, bounds.1);
    for k in 1..=n {
        for ((p, q), h) in surface.entries() {
            let parity: i64 = if (p + q) % 2 == 0 { 1 } else { -1 };
            // (1 - parity · m)^(-parity · h)
            let factor = factor_power((p + k - 1, q + k - 1, k), -parity, -parity * h as i64, bounds)?;
            series = series.mul(&factor)?;
        }
    }
    Ok(series)
}

/// Hodge diamond of the Hilbert scheme of `n` points on the surface `S`.
pub fn hilbert_scheme_diamond(surface: &HodgeDiamond, n: u32, config: GoettscheConfig) -> Result<HodgeDiamond> {
    if n > config.max_n {
        return Err(HodgeError::TruncationExceeded { n, max: config.max_n });
    }
    let series = generating_series(surface, n)?;
    let mut entries = Vec::new();
    for ((p, q), c) in series.t_coefficient(n) {
        if c < 0 {
            return Err(HodgeError::Inconsistent(format!("negative Hodge number {c} at ({p},{q}) of S^[{n}]")));
        }
        entries.push((p, q, c));
    }
    HodgeDiamond::new(Some(2 * n), entries)
}
