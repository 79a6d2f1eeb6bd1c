//! Classical orthogonal families with rational parameters.
//!
//! Both Laguerre and Jacobi polynomials are built from their terminating
//! hypergeometric series, accumulating each coefficient from the previous
//! one by the term ratio.

use num_traits::One;

use super::{int, pochhammer, rat, Rational, UniPoly};
use crate::error::{Error, Result};

fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// Laguerre polynomial `L_n^(alpha)`, normalized by `L_n^(alpha)(0) = binom(n+alpha, n)`.
pub fn laguerre(n: u32, alpha: &Rational) -> Result<UniPoly> {
    if *alpha <= int(-1) {
        return Err(Error::ParameterDomain(format!(
            "Laguerre parameter alpha = {alpha} must exceed -1"
        )));
    }
    let a1 = alpha + Rational::one();
    // c_0 = (alpha+1)_n / n!, c_{k+1} = c_k * (k-n) / ((alpha+1+k)(k+1))
    let mut c = pochhammer(&a1, n) / factorial(n);
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        coeffs.push(c.clone());
        if k < n {
            let kk = int(k as i64);
            c = c * (&kk - int(n as i64)) / ((&a1 + &kk) * (&kk + Rational::one()));
        }
    }
    Ok(UniPoly::new(coeffs))
}

/// Jacobi polynomial `P_n^(alpha, beta)`, normalized by `P_n(1) = binom(n+alpha, n)`.
pub fn jacobi(n: u32, alpha: &Rational, beta: &Rational) -> Result<UniPoly> {
    if *alpha <= int(-1) || *beta <= int(-1) {
        return Err(Error::ParameterDomain(format!(
            "Jacobi parameters ({alpha}, {beta}) must both exceed -1"
        )));
    }
    let a1 = alpha + Rational::one();
    let s = alpha + beta + int(n as i64 + 1);
    // series in t = (1 - x)/2
    let t = UniPoly::new(vec![rat(1, 2), rat(-1, 2)]);
    let mut c = pochhammer(&a1, n) / factorial(n);
    let mut t_pow = UniPoly::one();
    let mut acc = UniPoly::zero();
    for k in 0..=n {
        acc = &acc + &t_pow.scale(&c);
        if k < n {
            let kk = int(k as i64);
            c = c * (&kk - int(n as i64)) * (&s + &kk) / ((&a1 + &kk) * (&kk + Rational::one()));
            t_pow = &t_pow * &t;
        }
    }
    Ok(acc)
}

/// Generalized Hermite polynomial for the weight `|x|^(2 mu) exp(-x^2)`, left
/// unnormalized: for `n = 2m + p`, returns `x^p L_m^(mu - 1/2 + p)(x^2)`.
///
/// The normalized polynomial is `(-1)^n sqrt(m! / Gamma(m + p + mu + 1/2))`
/// times this one.
pub fn gen_hermite_unnorm(n: u32, mu: &Rational) -> Result<UniPoly> {
    if *mu <= rat(-1, 2) {
        return Err(Error::ParameterDomain(format!(
            "generalized Hermite parameter mu = {mu} must exceed -1/2"
        )));
    }
    let (m, p) = (n / 2, n % 2);
    let alpha = mu - rat(1, 2) + int(p as i64);
    let lag = laguerre(m, &alpha)?;
    Ok(lag.substitute_square().shift(p as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::pochhammer;
    use num_traits::Zero;

    /// Generalized binomial `binom(a + j, j)`-style helper: `binom(top, k)`
    /// for rational `top` and integer `k`.
    fn gbinom(top: &Rational, k: u32) -> Rational {
        let mut acc = Rational::one();
        for j in 0..k {
            acc = acc * (top - int(j as i64)) / int(j as i64 + 1);
        }
        acc
    }

    /// Oracle: `sum_k binom(n+alpha, n-k) (-x)^k / k!`.
    fn laguerre_oracle(n: u32, alpha: &Rational) -> UniPoly {
        let top = alpha + int(n as i64);
        UniPoly::new(
            (0..=n)
                .map(|k| {
                    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                    sign * gbinom(&top, n - k) / pochhammer(&int(1), k)
                })
                .collect(),
        )
    }

    /// Oracle: `sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`.
    fn jacobi_oracle(n: u32, a: &Rational, b: &Rational) -> UniPoly {
        let xm = UniPoly::new(vec![rat(-1, 2), rat(1, 2)]);
        let xp = UniPoly::new(vec![rat(1, 2), rat(1, 2)]);
        let pow = |p: &UniPoly, k: u32| (0..k).fold(UniPoly::one(), |acc, _| &acc * p);
        let mut acc = UniPoly::zero();
        for s in 0..=n {
            let c = gbinom(&(a + int(n as i64)), n - s) * gbinom(&(b + int(n as i64)), s);
            acc = &acc + &(&pow(&xm, s) * &pow(&xp, n - s)).scale(&c);
        }
        acc
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, &rat(1, 3)).unwrap(), UniPoly::one());
        assert_eq!(
            laguerre(1, &rat(1, 2)).unwrap(),
            UniPoly::new(vec![rat(3, 2), int(-1)])
        );
        assert_eq!(
            laguerre(2, &int(0)).unwrap(),
            UniPoly::new(vec![int(1), int(-2), rat(1, 2)])
        );
        assert!(laguerre(2, &int(-1)).is_err());
    }

    #[test]
    fn laguerre_matches_binomial_sum() {
        for alpha in [rat(-1, 2), int(0), rat(1, 3), rat(7, 4), rat(-3, 4)] {
            for n in 0..=12 {
                assert_eq!(laguerre(n, &alpha).unwrap(), laguerre_oracle(n, &alpha));
            }
        }
    }

    #[test]
    fn laguerre_three_term_recurrence() {
        for alpha in [int(0), rat(1, 2), rat(-2, 3), rat(5, 3)] {
            let x = UniPoly::x();
            for n in 1..12u32 {
                let lm = laguerre(n - 1, &alpha).unwrap();
                let l = laguerre(n, &alpha).unwrap();
                let lp = laguerre(n + 1, &alpha).unwrap();
                let lhs = lp.scale(&int(n as i64 + 1));
                let factor = UniPoly::constant(int(2 * n as i64 + 1) + &alpha);
                let rhs = &(&(&factor - &x) * &l) - &lm.scale(&(int(n as i64) + &alpha));
                assert_eq!(lhs, rhs, "n={n}, alpha={alpha}");
            }
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(0, &rat(1, 2), &rat(1, 7)).unwrap(), UniPoly::one());
        assert_eq!(
            jacobi(1, &rat(1, 2), &rat(1, 2)).unwrap(),
            UniPoly::new(vec![int(0), rat(3, 2)])
        );
        assert_eq!(
            jacobi(1, &int(0), &int(1)).unwrap(),
            UniPoly::new(vec![rat(-1, 2), rat(3, 2)])
        );
        assert!(jacobi(1, &int(-1), &int(0)).is_err());
        assert!(jacobi(1, &int(0), &rat(-3, 2)).is_err());
    }

    #[test]
    fn jacobi_matches_binomial_sum_and_endpoint() {
        let params = [
            (int(0), int(0)),
            (rat(-1, 4), rat(-1, 4)),
            (rat(3, 2), rat(-1, 3)),
            (rat(2, 5), rat(7, 2)),
        ];
        for (a, b) in &params {
            for n in 0..=12 {
                let p = jacobi(n, a, b).unwrap();
                assert_eq!(p, jacobi_oracle(n, a, b));
                assert_eq!(p.eval(&int(1)), gbinom(&(a + int(n as i64)), n));
            }
        }
    }

    #[test]
    fn gen_hermite_examples() {
        assert_eq!(gen_hermite_unnorm(0, &rat(1, 3)).unwrap(), UniPoly::one());
        assert_eq!(gen_hermite_unnorm(1, &rat(1, 3)).unwrap(), UniPoly::x());
        // alpha = mu - 1/2 = 0, so L_1^(0)(x^2) = 1 - x^2
        assert_eq!(
            gen_hermite_unnorm(2, &rat(1, 2)).unwrap(),
            UniPoly::new(vec![int(1), int(0), int(-1)])
        );
        assert_eq!(
            gen_hermite_unnorm(2, &rat(3, 2)).unwrap(),
            UniPoly::new(vec![int(2), int(0), int(-1)])
        );
        assert!(gen_hermite_unnorm(2, &rat(-1, 2)).is_err());
    }

    #[test]
    fn gen_hermite_parity() {
        for mu in [int(0), rat(1, 3), rat(-1, 4), rat(5, 2)] {
            for n in 0..=12u32 {
                let h = gen_hermite_unnorm(n, &mu).unwrap();
                let expected = if n % 2 == 0 { h.clone() } else { -&h };
                assert_eq!(h.reflect(), expected);
                assert_eq!(h.degree(), Some(n as usize));
            }
        }
    }

    #[test]
    fn gen_hermite_reduces_to_hermite_at_zero() {
        // physicists' Hermite by H_{n+1} = 2x H_n - 2n H_{n-1}
        let x2 = UniPoly::new(vec![int(0), int(2)]);
        let mut prev = UniPoly::one();
        let mut cur = x2.clone();
        let mut hermite = vec![prev.clone(), cur.clone()];
        for n in 1..12 {
            let next = &(&x2 * &cur) - &prev.scale(&int(2 * n));
            prev = cur;
            cur = next;
            hermite.push(cur.clone());
        }
        for (n, h) in hermite.iter().enumerate() {
            let g = gen_hermite_unnorm(n as u32, &int(0)).unwrap();
            let ratio = h.coeff(n) / g.coeff(n);
            assert!(!ratio.is_zero());
            assert_eq!(g.scale(&ratio), *h, "n={n}");
        }
    }
}
