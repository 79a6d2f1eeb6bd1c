use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign, decimal digits only).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("expected a rational `p/q`, got `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let digits_ok = |s: &str, signed: bool| {
        let body = if signed {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits_ok(num, true) || !digits_ok(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new(n, d))
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn pochhammer(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Deformation parameters of the three Dunkl derivatives.
///
/// Each parameter must satisfy `mu_i > -1/2`; the boundary value is rejected
/// because the positive-discrete series degenerates there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuParams {
    mu: [Rational; 3],
}

impl MuParams {
    pub fn new(mu1: Rational, mu2: Rational, mu3: Rational) -> Result<Self> {
        let half = rat(-1, 2);
        for (i, m) in [&mu1, &mu2, &mu3].into_iter().enumerate() {
            if *m <= half {
                return Err(Error::ParameterDomain(format!(
                    "mu{} = {m} must be greater than -1/2",
                    i + 1
                )));
            }
        }
        Ok(Self {
            mu: [mu1, mu2, mu3],
        })
    }

    pub fn from_ratios(values: [(i64, i64); 3]) -> Result<Self> {
        let [a, b, c] = values;
        Self::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1))
    }

    pub fn zero() -> Self {
        Self {
            mu: [Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    /// Parses `"p/q,p/q,p/q"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three comma-separated rationals, got `{text}`"
            )));
        }
        Self::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }

    /// `i` is zero-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.mu[i]
    }

    pub fn as_array(&self) -> &[Rational; 3] {
        &self.mu
    }

    pub fn sum(&self) -> Rational {
        &self.mu[0] + &self.mu[1] + &self.mu[2]
    }

    pub fn all_nonnegative(&self) -> bool {
        self.mu.iter().all(|m| *m >= Rational::zero())
    }

    /// The four parameter samples every suite runs against by default.
    pub fn default_samples() -> Vec<MuParams> {
        [
            [(0, 1), (0, 1), (0, 1)],
            [(1, 2), (1, 2), (1, 2)],
            [(1, 3), (1, 4), (1, 5)],
            [(-1, 4), (3, 2), (2, 5)],
        ]
        .into_iter()
        .map(|v| MuParams::from_ratios(v).expect("default samples are in domain"))
        .collect()
    }
}

impl fmt::Display for MuParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.mu[0], self.mu[1], self.mu[2])
    }
}

impl Serialize for MuParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.mu.iter().map(|m| m.to_string()))
    }
}

/// Serializes a rational as its `p/q` text, for `#[serde(serialize_with)]`.
pub fn serialize_rational<S: Serializer>(r: &Rational, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(r)
}
