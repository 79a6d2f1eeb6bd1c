//! Named operators of the three-dimensional Dunkl oscillator.
//!
//! Ladder convention: [`Oscillator::ladder`] returns `x_i ∓ D_i`, which is
//! `sqrt(2)` times the normalized `A±`. Bilinears such as `A+ A-` are built
//! with an explicit factor `1/2` so every product of two ladder operators
//! carries the normalized weight; relations that are linear in the ladders
//! hold unchanged for the rescaled operators.

use num_traits::One;

use super::{Axis, OperatorExpr, Representation, Scalar};
use crate::error::{Error, Result};
use crate::poly::{int, rat, MuParams, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderSign {
    Plus,
    Minus,
}

impl LadderSign {
    fn symbol(self) -> char {
        match self {
            LadderSign::Plus => '+',
            LadderSign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HamiltonianScope {
    Axis(Axis),
    Total,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryKind {
    J,
    K,
    L,
}

/// The pair of axes `(a, b)` a generator with index `j` couples: `1 -> (2,3)`,
/// `2 -> (3,1)`, `3 -> (1,2)`.
pub fn cyclic_pair(index: usize) -> Result<(Axis, Axis)> {
    match index {
        1 => Ok((Axis::X2, Axis::X3)),
        2 => Ok((Axis::X3, Axis::X1)),
        3 => Ok((Axis::X1, Axis::X2)),
        _ => Err(Error::ParameterDomain(format!(
            "generator index {index} is not in 1..=3"
        ))),
    }
}

/// Factory for the oscillator's operators at fixed `mu` and representation.
#[derive(Clone, Debug)]
pub struct Oscillator {
    mu: MuParams,
    rep: Representation,
}

impl Oscillator {
    pub fn new(mu: MuParams, rep: Representation) -> Self {
        Self { mu, rep }
    }

    pub fn gaussian(mu: MuParams) -> Self {
        Self::new(mu, Representation::Gaussian)
    }

    pub fn plain(mu: MuParams) -> Self {
        Self::new(mu, Representation::Plain)
    }

    pub fn mu(&self) -> &MuParams {
        &self.mu
    }

    pub fn representation(&self) -> Representation {
        self.rep
    }

    pub fn identity(&self) -> OperatorExpr {
        OperatorExpr::identity(self.rep)
    }

    pub fn zero(&self) -> OperatorExpr {
        OperatorExpr::zero(self.rep)
    }

    pub fn scalar(&self, s: Scalar) -> OperatorExpr {
        self.identity().scale(s)
    }

    pub fn coordinate(&self, axis: Axis) -> OperatorExpr {
        OperatorExpr::coordinate(self.rep, axis)
    }

    pub fn partial(&self, axis: Axis) -> OperatorExpr {
        OperatorExpr::partial(self.rep, axis)
    }

    pub fn reflection(&self, axis: Axis) -> OperatorExpr {
        OperatorExpr::reflection(self.rep, axis).named(format!("R{}", axis.number()))
    }

    pub fn dunkl_derivative(&self, axis: Axis) -> OperatorExpr {
        OperatorExpr::dunkl_derivative(self.rep, axis, self.mu.get(axis.index()).clone())
            .named(format!("D{}", axis.number()))
    }

    /// `R1^a R2^b R3^c` for bits `(a, b, c)`.
    pub fn reflection_monomial(&self, bits: [bool; 3]) -> OperatorExpr {
        let mut op = self.identity();
        let mut name = String::new();
        for axis in Axis::ALL {
            if bits[axis.index()] {
                op = &op * &self.reflection(axis);
                name.push_str(&format!("R{}", axis.number()));
            }
        }
        if name.is_empty() {
            op
        } else {
            op.named(name)
        }
    }

    pub fn total_reflection(&self) -> OperatorExpr {
        self.reflection_monomial([true, true, true]).named("ℛ")
    }

    /// `1 + 2 mu_i R_i`.
    pub fn deformed_unit(&self, axis: Axis) -> OperatorExpr {
        let mu = self.mu.get(axis.index()).clone();
        &self.identity() + &self.reflection(axis).scale_rational(int(2) * mu)
    }

    /// Rescaled ladder `x_i ∓ D_i` (`sqrt(2) A±`).
    pub fn ladder(&self, axis: Axis, sign: LadderSign) -> OperatorExpr {
        let x = self.coordinate(axis);
        let d = self.dunkl_derivative(axis);
        let op = match sign {
            LadderSign::Plus => &x - &d,
            LadderSign::Minus => &x + &d,
        };
        op.named(format!("Ã{}{}", sign.symbol(), axis.number()))
    }

    /// Normalized product `A^(a)_{sa} A^(b)_{sb}`.
    pub fn ladder_product(&self, a: Axis, sa: LadderSign, b: Axis, sb: LadderSign) -> OperatorExpr {
        (&self.ladder(a, sa) * &self.ladder(b, sb)).scale_rational(rat(1, 2))
    }

    /// Normalized `{A+^(i), A-^(i)}`, equal to `2 H_i`.
    pub fn ladder_anticommutator(&self, axis: Axis) -> OperatorExpr {
        self.ladder(axis, LadderSign::Plus)
            .anticommutator(&self.ladder(axis, LadderSign::Minus))
            .scale_rational(rat(1, 2))
    }

    pub fn hamiltonian(&self, scope: HamiltonianScope) -> OperatorExpr {
        match scope {
            HamiltonianScope::Axis(axis) => {
                let d = self.dunkl_derivative(axis);
                let x = self.coordinate(axis);
                let op = &(&d * &d).scale_rational(rat(-1, 2)) + &(&x * &x).scale_rational(rat(1, 2));
                op.named(format!("H{}", axis.number()))
            }
            HamiltonianScope::Total => OperatorExpr::sum(
                self.rep,
                &Axis::ALL.map(|a| self.hamiltonian(HamiltonianScope::Axis(a))),
            )
            .named("ℋ"),
        }
    }

    /// `A0^(i) = H_i`.
    pub fn a0(&self, axis: Axis) -> OperatorExpr {
        self.hamiltonian(HamiltonianScope::Axis(axis))
    }

    /// Casimir `Q = A+ A- R - A0 R + R/2` in normalized form.
    pub fn casimir(&self, axis: Axis) -> OperatorExpr {
        let r = self.reflection(axis);
        let pm = self.ladder_product(axis, LadderSign::Plus, axis, LadderSign::Minus);
        let op = &(&(&pm * &r) - &(&self.a0(axis) * &r)) + &r.scale_rational(rat(1, 2));
        op.named(format!("Q{}", axis.number()))
    }

    /// `J`, `K` from their coordinate expressions; `L_j = H_j / 2`.
    pub fn symmetry(&self, kind: SymmetryKind, index: usize) -> Result<OperatorExpr> {
        let (a, b) = cyclic_pair(index)?;
        let op = match kind {
            SymmetryKind::J => {
                // (1/i)(x_a D_b - x_b D_a)
                let inner = &(&self.coordinate(a) * &self.dunkl_derivative(b))
                    - &(&self.coordinate(b) * &self.dunkl_derivative(a));
                inner.scale(Scalar::new(Rational::from_integer(0.into()), -Rational::one()))
            }
            SymmetryKind::K => {
                &(&self.coordinate(a) * &self.coordinate(b))
                    - &(&self.dunkl_derivative(a) * &self.dunkl_derivative(b))
            }
            SymmetryKind::L => {
                let axis = Axis::from_number(index)?;
                self.a0(axis).scale_rational(rat(1, 2))
            }
        };
        let tag = match kind {
            SymmetryKind::J => "J",
            SymmetryKind::K => "K",
            SymmetryKind::L => "L",
        };
        Ok(op.named(format!("{tag}{index}")))
    }

    pub fn j(&self, index: usize) -> OperatorExpr {
        self.symmetry(SymmetryKind::J, index).expect("index in 1..=3")
    }

    pub fn k(&self, index: usize) -> OperatorExpr {
        self.symmetry(SymmetryKind::K, index).expect("index in 1..=3")
    }

    pub fn l(&self, index: usize) -> OperatorExpr {
        self.symmetry(SymmetryKind::L, index).expect("index in 1..=3")
    }

    /// Schwinger forms `(1/i)(A+^a A-^b - A-^a A+^b)` and `A+^a A-^b + A-^a A+^b`,
    /// for comparison with the coordinate expressions.
    pub fn schwinger_symmetry(&self, kind: SymmetryKind, index: usize) -> Result<OperatorExpr> {
        let (a, b) = cyclic_pair(index)?;
        let pm = self.ladder_product(a, LadderSign::Plus, b, LadderSign::Minus);
        let mp = self.ladder_product(a, LadderSign::Minus, b, LadderSign::Plus);
        match kind {
            SymmetryKind::J => Ok((&pm - &mp).scale(Scalar::new(int(0), int(-1)))),
            SymmetryKind::K => Ok(&pm + &mp),
            SymmetryKind::L => self.symmetry(SymmetryKind::L, index),
        }
    }

    /// Coproduct ladder `sqrt(2) 𝒜± = Ã±^(1) R2 R3 + Ã±^(2) R3 + Ã±^(3)`.
    pub fn coproduct_ladder(&self, sign: LadderSign) -> OperatorExpr {
        let r2 = self.reflection(Axis::X2);
        let r3 = self.reflection(Axis::X3);
        let op = OperatorExpr::sum(
            self.rep,
            &[
                &(&self.ladder(Axis::X1, sign) * &r2) * &r3,
                &self.ladder(Axis::X2, sign) * &r3,
                self.ladder(Axis::X3, sign),
            ],
        );
        op.named(format!("𝒜̃{}", sign.symbol()))
    }

    /// Gell-Mann bilinear `G_j = (A+^1, A+^2, A+^3) Λ_j (A-^1, A-^2, A-^3)^t`
    /// for `j ∉ {3, 8}`; `G_3 = 2 M_3` and `G_8 = 2 sqrt(3) M_8` from the
    /// anticommutator definitions, so that at `mu = 0` all eight reproduce
    /// `[G_i, G_j] = i f_ijk G_k` with the radical on index 8 cleared.
    pub fn gellmann_symmetry(&self, j: usize) -> Result<OperatorExpr> {
        let table = super::GellMannTable::standard();
        let op = match j {
            3 => (&self.ladder_anticommutator(Axis::X1) - &self.ladder_anticommutator(Axis::X2))
                .scale_rational(rat(1, 2)),
            8 => OperatorExpr::sum(
                self.rep,
                &[
                    self.ladder_anticommutator(Axis::X1),
                    self.ladder_anticommutator(Axis::X2),
                    self.ladder_anticommutator(Axis::X3).scale_rational(int(-2)),
                ],
            )
            .scale_rational(rat(1, 2)),
            1 | 2 | 4 | 5 | 6 | 7 => {
                let lambda = table.matrix(j);
                let mut parts = Vec::new();
                for a in Axis::ALL {
                    for b in Axis::ALL {
                        let entry = &lambda[a.index()][b.index()];
                        if !num_traits::Zero::is_zero(entry) {
                            parts.push(
                                self.ladder_product(a, LadderSign::Plus, b, LadderSign::Minus)
                                    .scale(entry.clone()),
                            );
                        }
                    }
                }
                OperatorExpr::sum(self.rep, &parts)
            }
            _ => {
                return Err(Error::ParameterDomain(format!(
                    "Gell-Mann index {j} is not in 1..=8"
                )))
            }
        };
        let name = if j == 8 { "G8'".to_string() } else { format!("G{j}") };
        Ok(op.named(name))
    }

    /// `M_1`, `M_2`, `M_3` of the planar subalgebra (`G_j / 2`).
    pub fn sd2_generator(&self, j: usize) -> Result<OperatorExpr> {
        if !(1..=3).contains(&j) {
            return Err(Error::ParameterDomain(format!(
                "planar generator index {j} is not in 1..=3"
            )));
        }
        Ok(self
            .gellmann_symmetry(j)?
            .scale_rational(rat(1, 2))
            .named(format!("M{j}")))
    }

    /// `sqrt(3) M_8 = (1/4)({A+1,A-1} + {A+2,A-2} - 2{A+3,A-3})`.
    pub fn m8_scaled(&self) -> OperatorExpr {
        self.gellmann_symmetry(8)
            .expect("8 is a valid index")
            .scale_rational(rat(1, 2))
            .named("√3M8")
    }

    pub fn j3_squared(&self) -> OperatorExpr {
        (&self.j(3) * &self.j(3)).named("J3²")
    }

    /// `J^2 = J1^2 + J2^2 + J3^2` in Cartesian form.
    pub fn total_angular_momentum(&self) -> OperatorExpr {
        OperatorExpr::sum(
            self.rep,
            &[1, 2, 3].map(|i| &self.j(i) * &self.j(i)),
        )
        .named("J²")
    }

    pub fn mu_value(&self, axis: Axis) -> Rational {
        self.mu.get(axis.index()).clone()
    }
}

