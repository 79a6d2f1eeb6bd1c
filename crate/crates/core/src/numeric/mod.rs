//! Floating-point evaluation, quadrature cross-checks and grid emission.
//!
//! Error model for [`evaluate`]: the exact coefficients are rounded once to
//! `f64` and the polynomial is evaluated by nested Horner rules in `x3`,
//! `x2`, `x1`. For degree `d` the relative error is bounded by roughly
//! `2 d eps` times the condition number `sum |c_k x^k| / |p(x)|`, which stays
//! below `1e-12` for degree `<= 20` with moderate coefficients away from
//! cancellation.

mod grid;
mod quadrature;

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::GaussianState;
use crate::poly::{MultiPoly, MuParams, Rational};
use crate::verify::GammaScaledRational;

pub use grid::{emit_grid, write_csv, AxisSampling, GridRow, GridSpec};
pub use quadrature::{integrate_adaptive, numeric_inner_product, weighted_moment, QuadratureResult};

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct EvalPoint {
    pub x: [f64; 3],
}

impl EvalPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let x = [x1, x2, x3];
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("evaluation point {x:?}")));
        }
        Ok(EvalPoint { x })
    }
}

fn horner(coeffs: &BTreeMap<u32, f64>, x: f64) -> f64 {
    let top = coeffs.keys().next_back().copied().unwrap_or(0);
    (0..=top).rev().fold(0.0, |acc, k| acc * x + coeffs.get(&k).copied().unwrap_or(0.0))
}

/// Polynomial coefficients nested as `x1 power -> x2 power -> x3 power`.
type Nested = BTreeMap<u32, BTreeMap<u32, BTreeMap<u32, f64>>>;

fn nest(p: &MultiPoly) -> Nested {
    let mut out = Nested::new();
    for (m, c) in p.terms() {
        out.entry(m.0[0]).or_default().entry(m.0[1]).or_default().insert(m.0[2], rational_to_f64(c));
    }
    out
}

fn eval_nested(n: &Nested, x: &[f64; 3]) -> f64 {
    let outer: BTreeMap<u32, f64> = n
        .iter()
        .map(|(&a, inner)| {
            let mid: BTreeMap<u32, f64> = inner.iter().map(|(&b, c3)| (b, horner(c3, x[2]))).collect();
            (a, horner(&mid, x[1]))
        })
        .collect();
    horner(&outer, x[0])
}

/// Horner evaluation of a real polynomial.
pub fn evaluate_poly(p: &MultiPoly, point: &EvalPoint) -> f64 {
    eval_nested(&nest(p), &point.x)
}

/// Value of the state's polynomial at `point`, times `exp(-|x|^2/2)` when
/// `include_gaussian` is set.
pub fn evaluate(st: &GaussianState, point: &EvalPoint, include_gaussian: bool) -> Result<f64> {
    if !st.is_real() {
        return Err(Error::ParameterDomain("only real states can be evaluated".into()));
    }
    let value = evaluate_poly(&st.real_poly(), point);
    Ok(if include_gaussian { value * gaussian(point) } else { value })
}

fn gaussian(point: &EvalPoint) -> f64 {
    (-0.5 * point.x.iter().map(|v| v * v).sum::<f64>()).exp()
}

/// `Gamma(mu1+1/2) Gamma(mu2+1/2) Gamma(mu3+1/2)`.
pub fn gamma_base(mu: &MuParams) -> f64 {
    mu.as_array()
        .iter()
        .map(|m| statrs::function::gamma::gamma(rational_to_f64(m) + 0.5))
        .product()
}

/// Floating value of an exact inner product.
pub fn gamma_scaled_value(v: &GammaScaledRational, mu: &MuParams) -> f64 {
    rational_to_f64(&v.coefficient) * gamma_base(mu)
}

#[cfg(test)]
mod tests;
