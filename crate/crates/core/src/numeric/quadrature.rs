//! Global adaptive 10/21-point Gauss-Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, BTreeMap};

use super::rational_to_f64;
use crate::error::{Error, Result};
use crate::operators::GaussianState;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525428265,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], ..., XGK[9]`.
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

const MAX_INTERVALS: usize = 4000;

fn kronrod21(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    for k in 0..10 {
        let dx = half * XGK[k];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[k] * pair;
        if k % 2 == 1 {
            gauss += WG[k / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

/// Bisects the interval with the largest error estimate until the summed
/// estimate is below `abs_tol`.
pub fn integrate_adaptive(f: impl Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> Result<QuadratureResult> {
    let mut heap = BinaryHeap::new();
    let (value, error) = kronrod21(&f, a, b);
    heap.push(Piece { a, b, value, error });
    let (mut total, mut total_error) = (value, error);
    while total_error > abs_tol {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureNonConvergence { estimate: total_error, requested: abs_tol });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = kronrod21(&f, worst.a, mid);
        let (v2, e2) = kronrod21(&f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_error += e1 + e2 - worst.error;
        heap.push(Piece { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Piece { a: mid, b: worst.b, value: v2, error: e2 });
        if heap.len() % 64 == 0 {
            // refresh the running sums against accumulated rounding
            total = heap.iter().map(|p| p.value).sum();
            total_error = heap.iter().map(|p| p.error).sum();
        }
    }
    Ok(QuadratureResult { value: total, error: total_error, intervals: heap.len() })
}

/// Half-width `L` with `∫_{|x|>L} |x|^s exp(-x^2) dx < bound`, using the
/// log-concave tail estimate `2 f(L) / (2L - s/L)`.
fn truncation(s: f64, bound: f64) -> f64 {
    let mut l: f64 = 2.0_f64.max(s.sqrt() + 1.0);
    loop {
        let tail = 2.0 * l.powf(s) * (-l * l).exp() / (2.0 * l - s / l);
        if tail < bound {
            return l;
        }
        l += 0.25;
    }
}

/// `∫_{-L}^{L} x^k |x|^(2mu) exp(-x^2) dx` by adaptive quadrature on `[0, L]`,
/// mirrored by parity; `L` is chosen so the neglected tails are below
/// `tol / 10`.
pub fn weighted_moment(k: u32, mu: f64, tol: f64) -> Result<QuadratureResult> {
    if k % 2 == 1 {
        return Ok(QuadratureResult { value: 0.0, error: 0.0, intervals: 0 });
    }
    let s = k as f64 + 2.0 * mu;
    let l = truncation(s, tol / 10.0);
    let half = integrate_adaptive(|x| x.powf(s) * (-x * x).exp(), 0.0, l, tol / 4.0)?;
    Ok(QuadratureResult { value: 2.0 * half.value, error: 2.0 * half.error + tol / 10.0, intervals: half.intervals })
}

/// `∫ |x|^s exp(-x^2) dx` over the real line, the magnitude scale of a moment.
fn moment_scale(k: u32, mu: f64) -> f64 {
    statrs::function::gamma::gamma((k as f64 + 2.0 * mu + 1.0) / 2.0)
}

/// Weighted triple integral of `p_a p_b` over the truncated cube, to within
/// the absolute tolerance `tol`. The weight and the monomial basis factor
/// over the axes, so the cube integral is assembled from one-dimensional
/// adaptive moments, each requested to a relative accuracy that makes the
/// propagated error budget fit in `tol`.
pub fn numeric_inner_product(a: &GaussianState, b: &GaussianState, tol: f64) -> Result<f64> {
    if a.mu != b.mu {
        return Err(Error::MuMismatch);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::ParameterDomain(format!("tolerance {tol} must be positive")));
    }
    if !a.is_real() || !b.is_real() {
        return Err(Error::ParameterDomain("numeric inner products need real states".into()));
    }
    let product = a.real_poly() * b.real_poly();
    let mu: Vec<f64> = a.mu.as_array().iter().map(rational_to_f64).collect();
    let even = |m: &crate::poly::Monomial| m.0.iter().all(|e| e % 2 == 0);
    let magnitude: f64 = product
        .terms()
        .filter(|(m, _)| even(m))
        .map(|(m, c)| rational_to_f64(c).abs() * (0..3).map(|i| moment_scale(m.0[i], mu[i])).product::<f64>())
        .sum();
    let relative = (tol / (4.0 * magnitude.max(f64::MIN_POSITIVE))).min(1e-6);
    let mut cache: [BTreeMap<u32, QuadratureResult>; 3] = Default::default();
    let mut value = 0.0;
    let mut error = 0.0;
    for (m, c) in product.terms().filter(|(m, _)| even(m)) {
        let mut vals = [0.0; 3];
        let mut errs = [0.0; 3];
        for i in 0..3 {
            let k = m.0[i];
            let r = match cache[i].get(&k) {
                Some(r) => *r,
                None => {
                    let r = weighted_moment(k, mu[i], relative * moment_scale(k, mu[i]))?;
                    cache[i].insert(k, r);
                    r
                }
            };
            vals[i] = r.value;
            errs[i] = r.error;
        }
        let c = rational_to_f64(c);
        value += c * vals.iter().product::<f64>();
        // first-order propagation of the per-axis errors
        let mut e = 0.0;
        for i in 0..3 {
            let others: f64 = (0..3).filter(|&j| j != i).map(|j| vals[j].abs() + errs[j]).product();
            e += errs[i] * others;
        }
        error += c.abs() * e;
    }
    if error > tol {
        return Err(Error::QuadratureNonConvergence { estimate: error, requested: tol });
    }
    Ok(value)
}
