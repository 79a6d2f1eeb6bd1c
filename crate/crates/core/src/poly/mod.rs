//! Exact rational arithmetic and polynomial algebra.

mod families;
mod multipoly;
mod rational;
mod unipoly;

pub use families::{gen_hermite_unnorm, jacobi, laguerre};
pub use multipoly::{Axis, Coeff, Monomial, MultiPoly};
pub use rational::{int, parse_rational, pochhammer, rat, serialize_rational, MuParams, Rational};
pub use unipoly::UniPoly;
