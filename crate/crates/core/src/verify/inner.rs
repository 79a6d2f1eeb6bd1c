use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::GaussianState;
use crate::poly::{int, pochhammer, MultiPoly, MuParams, Rational};
use crate::states::{enumerate_level, state, CoordinateSystem, LevelIndex, QuantumNumbers, Sign};

/// `coefficient * Gamma(mu1+1/2) Gamma(mu2+1/2) Gamma(mu3+1/2)`; the Gamma
/// base stays symbolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaScaledRational {
    #[serde(serialize_with = "crate::poly::serialize_rational")]
    pub coefficient: Rational,
}

impl GammaScaledRational {
    pub fn new(coefficient: Rational) -> Self {
        GammaScaledRational { coefficient }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

impl fmt::Display for GammaScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * G(mu)", self.coefficient)
    }
}

/// Per-axis moments `(mu + 1/2)_k`, i.e. the integral of `x^(2k)` against
/// `|x|^(2mu) exp(-x^2)` in units of `Gamma(mu + 1/2)`.
struct Moments {
    table: [Vec<Rational>; 3],
}

impl Moments {
    fn new(mu: &MuParams, max_half_degree: u32) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let table = [0, 1, 2].map(|i| {
            let a = mu.get(i) + &half;
            let mut out = Vec::with_capacity(max_half_degree as usize + 1);
            let mut acc = Rational::one();
            for k in 0..=max_half_degree {
                out.push(acc.clone());
                acc *= &a + int(k as i64);
            }
            out
        });
        Moments { table }
    }
}

fn real_poly(s: &GaussianState) -> Result<MultiPoly> {
    if !s.is_real() {
        return Err(Error::ParameterDomain(
            "the Dunkl inner product is computed for real states".into(),
        ));
    }
    Ok(s.real_poly())
}

/// Exact `∫ p_a p_b |x1|^(2mu1)|x2|^(2mu2)|x3|^(2mu3) exp(-r^2) dx` over R^3.
pub fn inner_product(a: &GaussianState, b: &GaussianState) -> Result<GammaScaledRational> {
    if a.mu != b.mu {
        return Err(Error::MuMismatch);
    }
    let (pa, pb) = (real_poly(a)?, real_poly(b)?);
    let max = pa.degree().unwrap_or(0) + pb.degree().unwrap_or(0);
    let moments = Moments::new(&a.mu, max / 2 + 1);
    let mut total = Rational::zero();
    for (ma, ca) in pa.terms() {
        for (mb, cb) in pb.terms() {
            let e = ma.mul(mb).0;
            if e.iter().any(|k| k % 2 == 1) {
                continue;
            }
            let mut term = ca * cb;
            for i in 0..3 {
                term *= &moments.table[i][(e[i] / 2) as usize];
            }
            total += term;
        }
    }
    Ok(GammaScaledRational::new(total))
}

fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// `prod_{j in 0..=top, j != skip} (y + j)`.
fn product_skipping(y: &Rational, top: u32, skip: u32) -> Rational {
    (0..=top)
        .filter(|&j| j != skip)
        .fold(Rational::one(), |acc, j| acc * (y + int(j as i64)))
}

/// Squared norm of the unnormalized one-dimensional factor
/// `x^p L_m^(mu-1/2+p)(x^2)`, `n = 2m + p`: `(mu+1/2)_(m+p) / m!`.
fn hermite_norm(n: u32, mu: &Rational) -> Rational {
    let (m, p) = (n / 2, n % 2);
    pochhammer(&(mu + Rational::new(1.into(), 2.into())), m + p) / factorial(m)
}

/// Azimuthal and planar-radial part shared by both curvilinear systems,
/// returned with the Jacobi index `n` and `y = n + mu1 + mu2 + e1 + e2`.
fn planar_parts(two_m: u32, s1: Sign, s2: Sign, mu: &MuParams) -> (u32, Rational, Rational) {
    let half = Rational::new(1.into(), 2.into());
    let (e1, e2) = (s1.indicator(), s2.indicator());
    let n = (two_m - e1 - e2) / 2;
    let y = int((n + e1 + e2) as i64) + mu.get(0) + mu.get(1);
    let angular = pochhammer(&(mu.get(0) + &half), n + e1) * pochhammer(&(mu.get(1) + &half), n + e2)
        / factorial(n);
    (n, y, angular)
}

/// Closed-form squared norm (in units of the Gamma base) of the unnormalized
/// state built by [`crate::states::state`].
///
/// From `∫ t^a e^-t [L_n^(a)]^2 = Gamma(n+a+1)/n!` and the Jacobi norm
/// `2^(a+b+1) Gamma(n+a+1) Gamma(n+b+1) / ((2n+a+b+1) Gamma(n+a+b+1) n!)`,
/// after the substitutions `t = rho^2` (or `r^2`) and `u = cos 2phi`
/// (or `cos 2theta`) all powers of two cancel.
pub fn squared_norm_oracle(q: &QuantumNumbers, mu: &MuParams) -> Result<Rational> {
    q.validate()?;
    let half = Rational::new(1.into(), 2.into());
    Ok(match *q {
        QuantumNumbers::Cartesian { n } => (0..3).fold(Rational::one(), |acc, i| acc * hermite_norm(n[i], mu.get(i))),
        QuantumNumbers::Cylindrical { n_rho, two_m, s1, s2, n_z } => {
            let (n, y, angular) = planar_parts(two_m, s1, s2, mu);
            product_skipping(&y, n_rho + n, n) * angular / factorial(n_rho) * hermite_norm(n_z, mu.get(2))
        }
        QuantumNumbers::Spherical { n_r, two_l, two_m, s } => {
            let (n, y, angular) = planar_parts(two_m, s[0], s[1], mu);
            let e3 = s[2].indicator();
            let nt = (two_l - e3) / 2;
            let yt = int((nt + two_m + e3) as i64) + mu.sum() + &half;
            let zenithal = pochhammer(&(mu.get(2) + &half), nt + e3) / factorial(nt);
            product_skipping(&yt, n_r + nt, nt) / factorial(n_r)
                * zenithal
                * product_skipping(&y, nt + n, n)
                * angular
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairFailure {
    pub left: String,
    pub right: String,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthonormalityReport {
    pub system: CoordinateSystem,
    pub max_level: u32,
    pub mu: MuParams,
    pub states: usize,
    pub pairs_checked: usize,
    pub failures: Vec<PairFailure>,
}

impl OrthonormalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Gram matrix of every state with level at most `max_level`: off-diagonal
/// entries must vanish and diagonal entries must equal the norm oracle.
pub fn check_orthonormality(
    system: CoordinateSystem,
    max_level: u32,
    mu: &MuParams,
) -> Result<OrthonormalityReport> {
    let labels: Vec<QuantumNumbers> = (0..=max_level)
        .flat_map(|n| enumerate_level(LevelIndex(n), system))
        .collect();
    let states = labels
        .par_iter()
        .map(|q| state(q, mu))
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|i| (i..labels.len()).map(move |j| (i, j)))
        .collect();
    let failures = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<PairFailure>> {
            let got = inner_product(&states[i], &states[j])?.coefficient;
            let expected = if i == j { squared_norm_oracle(&labels[i], mu)? } else { Rational::zero() };
            Ok((got != expected).then(|| PairFailure {
                left: labels[i].to_string(),
                right: labels[j].to_string(),
                got: got.to_string(),
                expected: expected.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(OrthonormalityReport {
        system,
        max_level,
        mu: mu.clone(),
        states: labels.len(),
        pairs_checked: pairs.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn st(s: &str, mu: &MuParams) -> GaussianState {
        GaussianState::from_real(&s.parse().unwrap(), mu.clone())
    }

    fn generic() -> MuParams {
        MuParams::from_ratios([(1, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let m = generic();
        assert_eq!(inner_product(&st("1", &m), &st("1", &m)).unwrap().coefficient, int(1));
        assert_eq!(inner_product(&st("x1", &m), &st("x1", &m)).unwrap().coefficient, rat(5, 6));
        assert!(inner_product(&st("x1", &m), &st("x2", &m)).unwrap().is_zero());
        // (mu2+1/2)(mu2+3/2) for x2^4
        assert_eq!(inner_product(&st("x2^2", &m), &st("x2^2", &m)).unwrap().coefficient, rat(3, 4) * rat(7, 4));
        let other = MuParams::zero();
        assert_eq!(inner_product(&st("1", &m), &st("1", &other)), Err(Error::MuMismatch));
    }

    #[test]
    fn orthonormality_small() {
        for m in MuParams::default_samples() {
            for sys in CoordinateSystem::ALL {
                let r = check_orthonormality(sys, 2, &m).unwrap();
                assert!(r.passed(), "{sys} {m}: {:?}", r.failures);
            }
        }
        let r = check_orthonormality(CoordinateSystem::Cartesian, 1, &generic()).unwrap();
        assert_eq!(r.states, 4);
        assert_eq!(r.pairs_checked, 10);
    }

    #[test]
    fn cylindrical_gram_at_level_two() {
        let m = generic();
        let labels = enumerate_level(LevelIndex(2), CoordinateSystem::Cylindrical);
        for a in &labels {
            for b in &labels {
                let v = inner_product(&state(a, &m).unwrap(), &state(b, &m).unwrap()).unwrap();
                if a == b {
                    assert_eq!(v.coefficient, squared_norm_oracle(a, &m).unwrap());
                } else {
                    assert!(v.is_zero());
                }
            }
        }
    }

    /// Independent float oracle: the classical Laguerre and Jacobi norm
    /// formulas, with every Gamma function evaluated numerically.
    fn float_norm(q: &QuantumNumbers, mu: [f64; 3]) -> f64 {
        use statrs::function::gamma::gamma;
        let fact = |n: u32| gamma(n as f64 + 1.0);
        let hermite = |n: u32, m: f64| {
            let (k, p) = ((n / 2) as f64, (n % 2) as f64);
            gamma(k + p + m + 0.5) / fact(n / 2) / gamma(m + 0.5)
        };
        let laguerre = |n: u32, a: f64| gamma(n as f64 + a + 1.0) / fact(n);
        let jacobi = |n: u32, a: f64, b: f64| {
            let nf = n as f64;
            // (2n+a+b+1) Gamma(n+a+b+1) degenerates to 0 * inf at n = 0, a + b = -1
            let denom = if n == 0 { gamma(a + b + 2.0) } else { (2.0 * nf + a + b + 1.0) * gamma(nf + a + b + 1.0) };
            2f64.powf(a + b + 1.0) * gamma(nf + a + 1.0) * gamma(nf + b + 1.0) / (denom * fact(n))
        };
        let base: f64 = mu.iter().map(|m| gamma(m + 0.5)).product();
        // azimuthal integral over [0, 2pi) of cos^(2A) sin^(2B) P^2
        let azimuthal = |two_m: u32, s1: Sign, s2: Sign| {
            let (e1, e2) = (s1.indicator(), s2.indicator());
            let n = (two_m - e1 - e2) / 2;
            let (a, b) = (mu[0] + e1 as f64, mu[1] + e2 as f64);
            2f64.powf(1.0 - a - b) * jacobi(n, b - 0.5, a - 0.5)
        };
        match *q {
            QuantumNumbers::Cartesian { n } => (0..3).map(|i| hermite(n[i], mu[i])).product(),
            QuantumNumbers::Cylindrical { n_rho, two_m, s1, s2, n_z } => {
                let radial = 0.5 * laguerre(n_rho, two_m as f64 + mu[0] + mu[1]);
                radial * azimuthal(two_m, s1, s2) * hermite(n_z, mu[2]) * gamma(mu[2] + 0.5) / base
            }
            QuantumNumbers::Spherical { n_r, two_l, two_m, s } => {
                let lm = (two_l + two_m) as f64 / 2.0;
                let total_mu: f64 = mu.iter().sum();
                let radial = 0.5 * laguerre(n_r, 2.0 * lm + total_mu + 0.5);
                let e3 = s[2].indicator();
                let (c, sm) = (mu[2] + e3 as f64, two_m as f64 + mu[0] + mu[1]);
                let zenithal = 2f64.powf(0.5 - c - sm) * 0.5 * jacobi((two_l - e3) / 2, sm, c - 0.5);
                radial * zenithal * azimuthal(two_m, s[0], s[1]) / base
            }
        }
    }

    #[test]
    fn norm_oracle_matches_classical_formulas() {
        let mus = [[0.0; 3], [0.5; 3], [1.0 / 3.0, 0.25, 0.2], [-0.25, 1.5, 0.4]];
        for (m, mf) in MuParams::default_samples().iter().zip(mus) {
            for n in 0..=6 {
                for sys in CoordinateSystem::ALL {
                    for q in enumerate_level(LevelIndex(n), sys) {
                        let exact = squared_norm_oracle(&q, m).unwrap();
                        let approx = crate::numeric::rational_to_f64(&exact);
                        let oracle = float_norm(&q, mf);
                        assert!((approx - oracle).abs() <= 1e-10 * oracle.abs(), "{q} {m}: {approx} vs {oracle}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_normalizations_agree_with_oracle() {
        // eta_m^2 times the unnormalized azimuthal integral must be 1
        use statrs::function::gamma::gamma;
        let (m1, m2) = (1.0 / 3.0, 0.25);
        for two_m in 0..8u32 {
            for (s1, s2) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
                let q = QuantumNumbers::Cylindrical { n_rho: 0, two_m, s1, s2, n_z: 0 };
                if q.validate().is_err() {
                    continue;
                }
                let (e1, e2) = (s1.indicator() as f64, s2.indicator() as f64);
                let m = two_m as f64 / 2.0;
                let eta_sq = (2.0 * m + m1 + m2) * gamma(m + m1 + m2 + e1 / 2.0 + e2 / 2.0) * gamma(m - e1 / 2.0 - e2 / 2.0 + 1.0)
                    / (2.0 * gamma(m + m1 + e1 / 2.0 - e2 / 2.0 + 0.5) * gamma(m + m2 + e2 / 2.0 - e1 / 2.0 + 0.5));
                let mu = MuParams::from_ratios([(1, 3), (1, 4), (0, 1)]).unwrap();
                // total norm = radial * azimuthal; radial part for n_rho = 0 is Gamma(2m+mu1+mu2+1)/2
                let total = crate::numeric::rational_to_f64(&squared_norm_oracle(&q, &mu).unwrap())
                    * gamma(m1 + 0.5) * gamma(m2 + 0.5) * gamma(0.5);
                let radial = 0.5 * gamma(2.0 * m + m1 + m2 + 1.0);
                let azimuthal = total / radial / gamma(0.5);
                assert!((eta_sq * azimuthal - 1.0).abs() < 1e-12, "{q}: {}", eta_sq * azimuthal);
            }
        }
    }
}
