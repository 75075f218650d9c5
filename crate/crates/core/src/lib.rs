//! Exact Hodge, Betti and Chern numbers of irreducible holomorphic symplectic
//! manifolds.
//!
//! - [`hodge`]: Hodge diamonds, Betti vectors, symmetric and exterior powers,
//!   Salamon's Betti relation.
//! - [`equivariant`]: the same algebra for spaces with an involution.
//! - [`goettsche`]: Hilbert schemes of points on K3 and abelian surfaces.
//! - [`og6`]: the derivation of the Hodge diamond of O'Grady's sixfold from
//!   the monodromy action on a manifold of `K3^[3]` type.
//! - [`cli`] and [`checks`]: the command-line front end and its invariant
//!   suites.

pub mod checks;
pub mod cli;
pub mod equivariant;
mod error;
pub mod goettsche;
pub mod hodge;
pub mod og6;

pub use equivariant::{EquivariantDiamond, Split};
pub use error::{HodgeError, Result};
pub use hodge::{check_diamond, BettiVector, HodgeDiamond};
