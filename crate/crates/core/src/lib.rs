//! Inhomogeneous Gaussian lattice sums with certified truncation error,
//! spherical-design analysis of lattice shells around holes, and
//! machine-checkable certificates that deep holes of highly symmetric
//! lattices are the minimizers of the Gaussian potential for all large
//! enough steepness parameters.
//!
//! The crate is organised around the objects it computes with:
//!
//! * [`lattice`] — exact rational lattices (named constructions and
//!   user-supplied bases), duals, orthogonal sums, deep-hole data.
//! * [`enumerate`] — exact close-vector enumeration and the decomposition
//!   of lattice points into inhomogeneous shells `L(z, r)`.
//! * [`designs`] — spherical-design strength of shells, Gegenbauer
//!   polynomials, exact rational moment tests.
//! * [`potential`] — the Gaussian sum `p(alpha, L, z)`, its gradient and
//!   Hessian with certified tail bounds, critical-point reports and a
//!   multi-start cold-spot search.
//! * [`lp`] — the linear-programming witnesses and the closed-form local
//!   radius / threshold / far-field quantities used by certificates.
//! * [`certify`] — the covering certificate that proves a deep hole is the
//!   unique minimizer for all `alpha >= alpha0`.
//! * [`catalog`] — the Leech deep-hole table, the lexicographic profile
//!   order, and profiles computed from enumeration.
//!
//! All lattice geometry (membership, shell radii, moments of shells) is
//! exact rational; floating point enters only in the numeric layers
//! (potential evaluation, LP feasibility grids, certificate inequalities).

pub mod catalog;
pub mod certify;
pub mod designs;
pub mod enumerate;
pub mod json;
pub mod lattice;
pub mod lp;
pub mod potential;
pub mod ratio;

mod codes;
mod error;
mod numeric;

pub use error::{Error, Result};
pub use lattice::{Family, HolePoint, Lattice};
pub use ratio::Rat;
