//! Bigraded dimension tables and the numerical operations on them.
//!
//! A [`HodgeDiamond`] is a finite table `(p, q) -> h^{p,q}` with zero entries
//! dropped, optionally attached to a compact complex manifold of a given
//! complex dimension. Tables without a dimension are "abstract" bigraded
//! spaces such as `Sym^2 H^2` or a Tate-twisted summand.

mod betti;
mod check;
mod diamond;
pub(crate) mod plethysm;

pub use betti::{solve_betti_dim6, BettiVector};
pub use check::{check_diamond, DiamondReport, Violation};
pub use diamond::{Bidegree, HodgeDiamond};
pub use plethysm::binomial;
