use std::fmt;
use std::str::FromStr;

use super::{QuantumNumbers, Sign};
use crate::error::{Error, Result};

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuantumNumbers::Cartesian { n } => write!(f, "cart:{},{},{}", n[0], n[1], n[2]),
            QuantumNumbers::Cylindrical { n_rho, two_m, s1, s2, n_z } => write!(
                f,
                "cyl:nr={n_rho},2m={two_m},s1={},s2={},nz={n_z}",
                s1.symbol(),
                s2.symbol()
            ),
            QuantumNumbers::Spherical { n_r, two_l, two_m, s } => write!(
                f,
                "sph:nr={n_r},2l={two_l},2m={two_m},s={}{}{}",
                s[0].symbol(),
                s[1].symbol(),
                s[2].symbol()
            ),
        }
    }
}

fn bad(text: &str, what: &str) -> Error {
    Error::Parse(format!("quantum-number label {text:?}: {what}"))
}

fn count(text: &str, field: &str) -> Result<u32> {
    if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(text, &format!("expected a non-negative integer, got {field:?}")));
    }
    field.parse().map_err(|_| bad(text, "integer out of range"))
}

fn sign(text: &str, c: char) -> Result<Sign> {
    match c {
        '+' => Ok(Sign::Plus),
        '-' => Ok(Sign::Minus),
        _ => Err(bad(text, &format!("expected '+' or '-', got {c:?}"))),
    }
}

/// Splits `k1=v1,k2=v2,...` checking that the keys appear exactly as given.
fn keyed<'a>(text: &str, body: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != keys.len() {
        return Err(bad(text, &format!("expected {} fields", keys.len())));
    }
    parts
        .iter()
        .zip(keys)
        .map(|(part, key)| {
            part.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| bad(text, &format!("expected field {key}=")))
        })
        .collect()
}

fn single_sign(text: &str, field: &str) -> Result<Sign> {
    let mut chars = field.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => sign(text, c),
        _ => Err(bad(text, "expected a single sign")),
    }
}

impl FromStr for QuantumNumbers {
    type Err = Error;

    /// Parses a label and validates the parity constraints.
    fn from_str(text: &str) -> Result<Self> {
        let (tag, body) = text.split_once(':').ok_or_else(|| bad(text, "missing system tag"))?;
        let q = match tag {
            "cart" => {
                let f: Vec<&str> = body.split(',').collect();
                if f.len() != 3 {
                    return Err(bad(text, "expected three occupation numbers"));
                }
                QuantumNumbers::Cartesian {
                    n: [count(text, f[0])?, count(text, f[1])?, count(text, f[2])?],
                }
            }
            "cyl" => {
                let f = keyed(text, body, &["nr", "2m", "s1", "s2", "nz"])?;
                QuantumNumbers::Cylindrical {
                    n_rho: count(text, f[0])?,
                    two_m: count(text, f[1])?,
                    s1: single_sign(text, f[2])?,
                    s2: single_sign(text, f[3])?,
                    n_z: count(text, f[4])?,
                }
            }
            "sph" => {
                let f = keyed(text, body, &["nr", "2l", "2m", "s"])?;
                let signs: Vec<char> = f[3].chars().collect();
                if signs.len() != 3 {
                    return Err(bad(text, "expected three signs"));
                }
                QuantumNumbers::Spherical {
                    n_r: count(text, f[0])?,
                    two_l: count(text, f[1])?,
                    two_m: count(text, f[2])?,
                    s: [sign(text, signs[0])?, sign(text, signs[1])?, sign(text, signs[2])?],
                }
            }
            _ => return Err(bad(text, &format!("unknown system tag {tag:?}"))),
        };
        q.validate()?;
        Ok(q)
    }
}

impl serde::Serialize for QuantumNumbers {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
