//! Gell-Mann matrices and the su(3) structure constants.
//!
//! `Λ_8` carries a `1/sqrt(3)`; the table stores `sqrt(3) Λ_8 = diag(1, 1, -2)`
//! so every entry is a Gaussian rational, and structure constants are
//! reported as elements `a + b sqrt(3)` of `Q(sqrt 3)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{imag, real, Scalar};
use crate::poly::{int, Rational};

/// `rational + radical * sqrt(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub rational: Rational,
    pub radical: Rational,
}

impl Surd {
    pub fn rational(r: Rational) -> Self {
        Self {
            rational: r,
            radical: Rational::zero(),
        }
    }

    pub fn sqrt3(coeff: Rational) -> Self {
        Self {
            rational: Rational::zero(),
            radical: coeff,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    /// Multiplies by `sqrt(3)^power`, `power` in `-2..=2`.
    pub fn times_sqrt3_pow(&self, power: i32) -> Self {
        match power {
            0 => self.clone(),
            1 => Surd {
                rational: &self.radical * int(3),
                radical: self.rational.clone(),
            },
            -1 => Surd {
                rational: self.radical.clone(),
                radical: &self.rational / int(3),
            },
            2 => Surd {
                rational: &self.rational * int(3),
                radical: &self.radical * int(3),
            },
            -2 => Surd {
                rational: &self.rational / int(3),
                radical: &self.radical / int(3),
            },
            _ => panic!("sqrt(3) power {power} out of range"),
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.radical.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rational),
            (true, false) if self.radical.is_one() => write!(f, "√3"),
            (true, false) => write!(f, "{}√3", self.radical),
            (false, false) => write!(f, "{}+{}√3", self.rational, self.radical),
        }
    }
}

pub type Mat3 = [[Scalar; 3]; 3];

fn zero_mat() -> Mat3 {
    std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()))
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = zero_mat();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] = out[i][j].clone() + a[i][k].clone() * b[k][j].clone();
            }
        }
    }
    out
}

fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = zero_mat();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][j].clone() - b[i][j].clone();
        }
    }
    out
}

fn trace(a: &Mat3) -> Scalar {
    a[0][0].clone() + a[1][1].clone() + a[2][2].clone()
}

/// The eight matrices (index 8 radical-cleared) with the reference
/// structure constants `f^{123} = 2`, `f^{458} = f^{678} = sqrt(3)`,
/// `f^{147} = f^{165} = f^{246} = f^{257} = f^{345} = f^{376} = 1`.
#[derive(Clone, Debug)]
pub struct GellMannTable {
    matrices: [Mat3; 8],
    reference: BTreeMap<(usize, usize, usize), Surd>,
}

impl GellMannTable {
    pub fn standard() -> Self {
        let one = || real(Rational::one());
        let mut m: [Mat3; 8] = std::array::from_fn(|_| zero_mat());
        m[0][0][1] = one();
        m[0][1][0] = one();
        m[1][0][1] = imag(int(-1));
        m[1][1][0] = imag(int(1));
        m[2][0][0] = one();
        m[2][1][1] = real(int(-1));
        m[3][0][2] = one();
        m[3][2][0] = one();
        m[4][0][2] = imag(int(-1));
        m[4][2][0] = imag(int(1));
        m[5][1][2] = one();
        m[5][2][1] = one();
        m[6][1][2] = imag(int(-1));
        m[6][2][1] = imag(int(1));
        m[7][0][0] = one();
        m[7][1][1] = one();
        m[7][2][2] = real(int(-2));

        let mut reference = BTreeMap::new();
        let mut put = |ijk: [usize; 3], v: Surd| {
            // all permutations with sign
            let perms = [
                ([0, 1, 2], false),
                ([1, 2, 0], false),
                ([2, 0, 1], false),
                ([1, 0, 2], true),
                ([0, 2, 1], true),
                ([2, 1, 0], true),
            ];
            for (p, odd) in perms {
                let key = (ijk[p[0]], ijk[p[1]], ijk[p[2]]);
                let val = if odd {
                    Surd {
                        rational: -v.rational.clone(),
                        radical: -v.radical.clone(),
                    }
                } else {
                    v.clone()
                };
                reference.insert(key, val);
            }
        };
        put([1, 2, 3], Surd::rational(int(2)));
        put([4, 5, 8], Surd::sqrt3(int(1)));
        put([6, 7, 8], Surd::sqrt3(int(1)));
        for ijk in [[1, 4, 7], [1, 6, 5], [2, 4, 6], [2, 5, 7], [3, 4, 5], [3, 7, 6]] {
            put(ijk, Surd::rational(int(1)));
        }
        Self {
            matrices: m,
            reference,
        }
    }

    /// Matrix `j` (1-based); `j = 8` returns `sqrt(3) Λ_8`.
    pub fn matrix(&self, j: usize) -> &Mat3 {
        &self.matrices[j - 1]
    }

    /// Reference `f^{ijk}`, zero when not listed.
    pub fn reference_constant(&self, i: usize, j: usize, k: usize) -> Surd {
        self.reference
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| Surd::rational(Rational::zero()))
    }

    /// Expansion coefficients of `[S_i, S_j]` over the stored basis `S_k`.
    pub fn commutator_expansion(&self, i: usize, j: usize) -> [Scalar; 8] {
        let (a, b) = (self.matrix(i), self.matrix(j));
        let c = mat_sub(&mat_mul(a, b), &mat_mul(b, a));
        std::array::from_fn(|k| {
            let s = &self.matrices[k];
            trace(&mat_mul(s, &c)) / trace(&mat_mul(s, s))
        })
    }

    /// Converts a coefficient of `S_k` in `[S_i, S_j] = sum_k c_k S_k` into
    /// `f^{ijk}` for the unscaled matrices: `f = (c_k / i) σ_k / (σ_i σ_j)` with
    /// `σ_8 = sqrt(3)` and `σ = 1` otherwise.
    pub fn constant_from_scaled(i: usize, j: usize, k: usize, c: &Scalar) -> Option<Surd> {
        if !c.re.is_zero() {
            return None;
        }
        let eights = |x: usize| i32::from(x == 8);
        let power = eights(k) - eights(i) - eights(j);
        Some(Surd::rational(c.im.clone()).times_sqrt3_pow(power))
    }

    /// `f^{ijk}` computed from matrix arithmetic.
    pub fn derived_constant(&self, i: usize, j: usize, k: usize) -> Option<Surd> {
        let c = &self.commutator_expansion(i, j)[k - 1];
        Self::constant_from_scaled(i, j, k, c)
    }

    /// True when matrix arithmetic reproduces every reference constant.
    pub fn verify(&self) -> bool {
        (1..=8).all(|i| {
            (1..=8).all(|j| {
                (1..=8).all(|k| {
                    self.derived_constant(i, j, k)
                        .is_some_and(|f| f == self.reference_constant(i, j, k))
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn table_is_consistent() {
        let t = GellMannTable::standard();
        assert!(t.verify());
        assert_eq!(t.derived_constant(1, 2, 3), Some(Surd::rational(int(2))));
        assert_eq!(t.derived_constant(4, 5, 8), Some(Surd::sqrt3(int(1))));
        assert_eq!(t.derived_constant(5, 4, 8), Some(Surd::sqrt3(int(-1))));
        assert_eq!(t.derived_constant(3, 7, 6), Some(Surd::rational(int(1))));
    }

    #[test]
    fn surd_scaling() {
        let s = Surd::sqrt3(rat(1, 2));
        assert_eq!(s.times_sqrt3_pow(1), Surd::rational(rat(3, 2)));
        assert_eq!(s.times_sqrt3_pow(-1), Surd::rational(rat(1, 2)));
        assert_eq!(Surd::rational(int(3)).times_sqrt3_pow(-1), Surd::sqrt3(int(1)));
        assert_eq!(Surd::sqrt3(int(1)).to_string(), "√3");
    }
}
