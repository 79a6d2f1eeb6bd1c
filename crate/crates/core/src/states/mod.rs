//! Separated eigenstates in Cartesian, cylindrical and spherical coordinates.
//!
//! Half-integer labels are stored doubled (`two_m = 2m`, `two_l = 2l`). All
//! states are unnormalized: the Gaussian `exp(-r^2/2)` is implicit and the
//! square-root normalization constants are dropped. Angular factors are turned
//! into Cartesian polynomials by homogenizing the Jacobi polynomials, see
//! [`homogenize`].
//!
//! Text labels:
//!
//! ```text
//! cart:<n1>,<n2>,<n3>
//! cyl:nr=<n>,2m=<n>,s1=<sign>,s2=<sign>,nz=<n>
//! sph:nr=<n>,2l=<n>,2m=<n>,s=<sign><sign><sign>
//! sign := "+" | "-"
//! ```

mod construct;
mod labels;

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{int, MuParams, Rational};

pub use construct::{
    cartesian_state, cylindrical_state, homogenize, spherical_state, state,
};

/// Eigenvalue of a reflection.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_parity(n: u32) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The indicator `e = 0` for `+`, `1` for `-`.
    pub fn indicator(self) -> u32 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordinateSystem {
    Cartesian,
    Cylindrical,
    Spherical,
}

impl CoordinateSystem {
    pub const ALL: [CoordinateSystem; 3] = [
        CoordinateSystem::Cartesian,
        CoordinateSystem::Cylindrical,
        CoordinateSystem::Spherical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoordinateSystem::Cartesian => "cartesian",
            CoordinateSystem::Cylindrical => "cylindrical",
            CoordinateSystem::Spherical => "spherical",
        }
    }
}

impl fmt::Display for CoordinateSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CoordinateSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "cart" => Ok(CoordinateSystem::Cartesian),
            "cylindrical" | "cyl" => Ok(CoordinateSystem::Cylindrical),
            "spherical" | "sph" => Ok(CoordinateSystem::Spherical),
            _ => Err(Error::Parse(format!("unknown coordinate system {s:?}"))),
        }
    }
}

/// Total level `N`; the energy is `N + mu1 + mu2 + mu3 + 3/2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LevelIndex(pub u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuantumNumbers {
    Cartesian {
        n: [u32; 3],
    },
    Cylindrical {
        n_rho: u32,
        two_m: u32,
        s1: Sign,
        s2: Sign,
        n_z: u32,
    },
    Spherical {
        n_r: u32,
        two_l: u32,
        two_m: u32,
        s: [Sign; 3],
    },
}

impl QuantumNumbers {
    pub fn system(&self) -> CoordinateSystem {
        match self {
            QuantumNumbers::Cartesian { .. } => CoordinateSystem::Cartesian,
            QuantumNumbers::Cylindrical { .. } => CoordinateSystem::Cylindrical,
            QuantumNumbers::Spherical { .. } => CoordinateSystem::Spherical,
        }
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::InvalidQuantumNumbers {
            label: self.to_string(),
            reason: reason.to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            QuantumNumbers::Cartesian { .. } => Ok(()),
            QuantumNumbers::Cylindrical { two_m, s1, s2, .. } => check_azimuthal(two_m, s1, s2)
                .map_err(|r| self.invalid(r)),
            QuantumNumbers::Spherical { two_l, two_m, s, .. } => {
                check_azimuthal(two_m, s[0], s[1]).map_err(|r| self.invalid(r))?;
                if (two_l % 2 == 0) != (s[2] == Sign::Plus) {
                    return Err(self.invalid("2l must be even exactly when s3 = +"));
                }
                Ok(())
            }
        }
    }

    pub fn level(&self) -> LevelIndex {
        LevelIndex(match *self {
            QuantumNumbers::Cartesian { n } => n.iter().sum(),
            QuantumNumbers::Cylindrical { n_rho, two_m, n_z, .. } => 2 * n_rho + two_m + n_z,
            QuantumNumbers::Spherical { n_r, two_l, two_m, .. } => 2 * n_r + two_l + two_m,
        })
    }

    /// Eigenvalues of `(R1, R2, R3)` carried by the state.
    pub fn reflection_signs(&self) -> [Sign; 3] {
        match *self {
            QuantumNumbers::Cartesian { n } => n.map(Sign::from_parity),
            QuantumNumbers::Cylindrical { s1, s2, n_z, .. } => [s1, s2, Sign::from_parity(n_z)],
            QuantumNumbers::Spherical { s, .. } => s,
        }
    }
}

fn check_azimuthal(two_m: u32, s1: Sign, s2: Sign) -> std::result::Result<(), &'static str> {
    if two_m.is_multiple_of(2) != (s1 == s2) {
        return Err("2m must be even exactly when s1 s2 = +1");
    }
    if two_m == 0 && s1 == Sign::Minus {
        return Err("m = 0 exists only for s1 = s2 = +");
    }
    Ok(())
}

/// `E = N + mu1 + mu2 + mu3 + 3/2`.
pub fn energy(q: &QuantumNumbers, mu: &MuParams) -> Result<Rational> {
    q.validate()?;
    Ok(int(q.level().0 as i64) + mu.sum() + Rational::new(3.into(), 2.into()))
}

/// `g_N = (N+1)(N+2)/2`.
pub fn degeneracy(level: LevelIndex) -> u64 {
    let n = level.0 as u64;
    (n + 1) * (n + 2) / 2
}

fn azimuthal_signs(two_m: u32) -> Vec<(Sign, Sign)> {
    use Sign::{Minus, Plus};
    match two_m {
        0 => vec![(Plus, Plus)],
        m if m % 2 == 0 => vec![(Plus, Plus), (Minus, Minus)],
        _ => vec![(Plus, Minus), (Minus, Plus)],
    }
}

/// Every valid label at level `N` in the given system, in a fixed order.
pub fn enumerate_level(level: LevelIndex, system: CoordinateSystem) -> Vec<QuantumNumbers> {
    let n = level.0;
    let mut out = Vec::new();
    match system {
        CoordinateSystem::Cartesian => {
            for n1 in (0..=n).rev() {
                for n2 in (0..=n - n1).rev() {
                    out.push(QuantumNumbers::Cartesian { n: [n1, n2, n - n1 - n2] });
                }
            }
        }
        CoordinateSystem::Cylindrical => {
            for n_z in 0..=n {
                let rest = n - n_z;
                for n_rho in 0..=rest / 2 {
                    let two_m = rest - 2 * n_rho;
                    for (s1, s2) in azimuthal_signs(two_m) {
                        out.push(QuantumNumbers::Cylindrical { n_rho, two_m, s1, s2, n_z });
                    }
                }
            }
        }
        CoordinateSystem::Spherical => {
            for n_r in 0..=n / 2 {
                let rest = n - 2 * n_r;
                for two_l in 0..=rest {
                    let two_m = rest - two_l;
                    let s3 = Sign::from_parity(two_l);
                    for (s1, s2) in azimuthal_signs(two_m) {
                        out.push(QuantumNumbers::Spherical { n_r, two_l, two_m, s: [s1, s2, s3] });
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationConstants {
    pub k_sq: Rational,
    pub q_sq: Option<Rational>,
}

/// `k^2 = 4m(m + mu1 + mu2)` and, for spherical labels,
/// `q^2 = 4(l+m)(l+m + mu1+mu2+mu3 + 1/2)`.
pub fn separation_constants(q: &QuantumNumbers, mu: &MuParams) -> Result<SeparationConstants> {
    q.validate()?;
    let k_sq = |two_m: u32| {
        let t = int(two_m as i64);
        (&t + int(2) * (mu.get(0) + mu.get(1))) * t
    };
    match *q {
        QuantumNumbers::Cartesian { .. } => {
            Err(q.invalid("separation constants need a cylindrical or spherical label"))
        }
        QuantumNumbers::Cylindrical { two_m, .. } => {
            Ok(SeparationConstants { k_sq: k_sq(two_m), q_sq: None })
        }
        QuantumNumbers::Spherical { two_l, two_m, .. } => {
            let t = int((two_l + two_m) as i64);
            let q_sq = (&t + int(2) * mu.sum() + Rational::one()) * t;
            Ok(SeparationConstants { k_sq: k_sq(two_m), q_sq: Some(q_sq) })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngularEigenvalues {
    pub j3sq: Rational,
    pub j2: Option<Rational>,
}

/// Eigenvalues of `J3^2` and, for spherical labels, of `J^2`.
pub fn angular_eigenvalues(q: &QuantumNumbers, mu: &MuParams) -> Result<AngularEigenvalues> {
    let sep = separation_constants(q, mu)?;
    let s = q.reflection_signs();
    let pair = |a: usize, b: usize| {
        int(2) * mu.get(a) * mu.get(b) * int(1 - s[a].value() * s[b].value())
    };
    let j3sq = &sep.k_sq + pair(0, 1);
    let j2 = sep.q_sq.map(|q_sq| {
        let mut v = q_sq + pair(0, 1) + pair(0, 2) + pair(1, 2);
        for i in 0..3 {
            v += mu.get(i) * int(1 - s[i].value());
        }
        v
    });
    Ok(AngularEigenvalues { j3sq, j2 })
}
