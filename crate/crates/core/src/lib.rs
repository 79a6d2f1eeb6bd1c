//! Exact symbolic-numeric engine for the isotropic Dunkl oscillator in three
//! dimensions.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: exact rationals, univariate and multivariate polynomials and the
//!   classical Laguerre, Jacobi and generalized Hermite families.
//! * [`operators`]: composable linear operators (Dunkl derivatives,
//!   reflections, ladder operators, Hamiltonians, symmetry generators) acting
//!   on plain polynomials or on polynomials carried by the Gaussian
//!   `exp(-r^2/2)`.
//! * [`states`]: separated eigenfunctions in Cartesian, cylindrical and
//!   spherical coordinates, written as exact Cartesian polynomials.
//! * [`verify`]: weighted inner products, orthogonality/norm checks, relation
//!   suites and structure-constant discovery.
//! * [`numeric`]: floating-point evaluation, quadrature cross-checks and grid
//!   emission.
//! * [`acceptance`]: the end-to-end criterion runner shared by the CLI and the
//!   acceptance test target.

pub mod acceptance;
pub mod error;
pub mod numeric;
pub mod operators;
pub mod poly;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use operators::{GaussianState, OperatorExpr, Oscillator, Representation, Scalar};
pub use poly::{Axis, MultiPoly, MuParams, Rational, UniPoly};
pub use states::{CoordinateSystem, QuantumNumbers};
pub use verify::GammaScaledRational;
