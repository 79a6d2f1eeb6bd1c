use super::{QuantumNumbers, Sign};
use crate::error::{Error, Result};
use crate::operators::GaussianState;
use crate::poly::{gen_hermite_unnorm, int, jacobi, laguerre, Axis, MultiPoly, MuParams, Rational, UniPoly};

/// For `p` of degree at most `n`, returns `base^n * p(a / base)` expanded as
/// `sum_k c_k a^k base^(n-k)`.
pub fn homogenize(p: &UniPoly, n: u32, a: &MultiPoly, base: &MultiPoly) -> MultiPoly {
    assert!(p.degree().is_none_or(|d| d <= n as usize), "degree exceeds homogenization order");
    let mut out = MultiPoly::zero();
    let mut a_pow = MultiPoly::one();
    for k in 0..=n {
        let c = p.coeff(k as usize);
        if !num_traits::Zero::is_zero(&c) {
            out = out + (&a_pow * &base.pow(n - k)).scale(&c);
        }
        a_pow = &a_pow * a;
    }
    out
}

/// `p(q)` by Horner's rule.
fn substitute(p: &UniPoly, q: &MultiPoly) -> MultiPoly {
    p.coeffs().iter().rev().fold(MultiPoly::zero(), |acc, c| &acc * q + MultiPoly::constant(c.clone()))
}

fn sq(axis: Axis) -> MultiPoly {
    MultiPoly::var(axis).pow(2)
}

fn rho_sq() -> MultiPoly {
    sq(Axis::X1) + sq(Axis::X2)
}

fn r_sq() -> MultiPoly {
    rho_sq() + sq(Axis::X3)
}

fn wrong_system(q: &QuantumNumbers, expected: &str) -> Error {
    Error::InvalidQuantumNumbers { label: q.to_string(), reason: format!("expected a {expected} label") }
}

fn half(r: Rational) -> Rational {
    r - Rational::new(1.into(), 2.into())
}

/// `rho^(2m) Phi_m(phi)`: `x1^e1 x2^e2` times the homogenized Jacobi factor in
/// `cos 2phi = (x1^2 - x2^2) / rho^2`.
fn azimuthal(two_m: u32, s1: Sign, s2: Sign, mu: &MuParams) -> Result<MultiPoly> {
    let (e1, e2) = (s1.indicator(), s2.indicator());
    let n = (two_m - e1 - e2) / 2;
    let p = jacobi(
        n,
        &half(mu.get(1) + int(e2 as i64)),
        &half(mu.get(0) + int(e1 as i64)),
    )?;
    let prefactor = MultiPoly::var(Axis::X1).pow(e1) * MultiPoly::var(Axis::X2).pow(e2);
    Ok(prefactor * homogenize(&p, n, &(sq(Axis::X1) - sq(Axis::X2)), &rho_sq()))
}

pub fn cartesian_state(q: &QuantumNumbers, mu: &MuParams) -> Result<GaussianState> {
    let QuantumNumbers::Cartesian { n } = *q else {
        return Err(wrong_system(q, "Cartesian"));
    };
    let mut poly = MultiPoly::one();
    for axis in Axis::ALL {
        let h = gen_hermite_unnorm(n[axis.index()], mu.get(axis.index()))?;
        poly = poly * MultiPoly::from_univariate(&h, axis);
    }
    Ok(GaussianState::from_real(&poly, mu.clone()))
}

pub fn cylindrical_state(q: &QuantumNumbers, mu: &MuParams) -> Result<GaussianState> {
    let QuantumNumbers::Cylindrical { n_rho, two_m, s1, s2, n_z } = *q else {
        return Err(wrong_system(q, "cylindrical"));
    };
    q.validate()?;
    let angular = azimuthal(two_m, s1, s2, mu)?;
    let alpha = int(two_m as i64) + mu.get(0) + mu.get(1);
    let radial = substitute(&laguerre(n_rho, &alpha)?, &rho_sq());
    let vertical = MultiPoly::from_univariate(&gen_hermite_unnorm(n_z, mu.get(2))?, Axis::X3);
    Ok(GaussianState::from_real(&(angular * radial * vertical), mu.clone()))
}

pub fn spherical_state(q: &QuantumNumbers, mu: &MuParams) -> Result<GaussianState> {
    let QuantumNumbers::Spherical { n_r, two_l, two_m, s } = *q else {
        return Err(wrong_system(q, "spherical"));
    };
    q.validate()?;
    let e3 = s[2].indicator();
    let n_theta = (two_l - e3) / 2;
    let p = jacobi(
        n_theta,
        &(int(two_m as i64) + mu.get(0) + mu.get(1)),
        &half(mu.get(2) + int(e3 as i64)),
    )?;
    // r^(2l) cos^e3(theta) P(cos 2theta), with cos 2theta = (x3^2 - rho^2) / r^2
    let zenithal = MultiPoly::var(Axis::X3).pow(e3)
        * homogenize(&p, n_theta, &(sq(Axis::X3) - rho_sq()), &r_sq());
    let angular = azimuthal(two_m, s[0], s[1], mu)?;
    let alpha = int((two_l + two_m) as i64) + mu.sum() + Rational::new(1.into(), 2.into());
    let radial = substitute(&laguerre(n_r, &alpha)?, &r_sq());
    Ok(GaussianState::from_real(&(zenithal * angular * radial), mu.clone()))
}

/// Dispatches on the coordinate system of the label.
pub fn state(q: &QuantumNumbers, mu: &MuParams) -> Result<GaussianState> {
    match q {
        QuantumNumbers::Cartesian { .. } => cartesian_state(q, mu),
        QuantumNumbers::Cylindrical { .. } => cylindrical_state(q, mu),
        QuantumNumbers::Spherical { .. } => spherical_state(q, mu),
    }
}
