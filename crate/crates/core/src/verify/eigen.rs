use rayon::prelude::*;
use serde::Serialize;

use super::inner::inner_product;
use crate::error::{Error, Result};
use crate::operators::{real, Axis, GaussianState, HamiltonianScope, OperatorExpr, Oscillator, Representation, Scalar};
use crate::poly::{int, MuParams};
use crate::states::{
    angular_eigenvalues, energy, enumerate_level, state, CoordinateSystem, LevelIndex, QuantumNumbers,
};

/// Exact test of `op state = eigenvalue * state` in the Gaussian representation.
pub fn check_eigenstate(op: &OperatorExpr, st: &GaussianState, eigenvalue: &Scalar) -> Result<bool> {
    if op.representation() != Representation::Gaussian {
        return Err(Error::RepresentationMismatch {
            operator: op.representation().name(),
            state: Representation::Gaussian.name(),
        });
    }
    Ok(op.apply_gaussian(st)?.poly == st.poly.scale(eigenvalue))
}

/// `<op a, b> = <a, op b>` for every pair of the given real states.
pub fn check_hermiticity(op: &OperatorExpr, states: &[GaussianState]) -> Result<bool> {
    let images = states.iter().map(|s| op.apply_gaussian(s)).collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..states.len()).flat_map(|i| (i..states.len()).map(move |j| (i, j))).collect();
    let failures = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<bool> {
            Ok(inner_product(&images[i], &states[j])? != inner_product(&states[i], &images[j])?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(!failures.into_iter().any(|f| f))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenCheck {
    pub label: String,
    /// Operator name, e.g. `H`, `R1`, `J3²`, `J²`.
    pub operator: String,
    pub eigenvalue: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenReport {
    pub system: CoordinateSystem,
    pub max_level: u32,
    pub mu: MuParams,
    pub checks: Vec<EigenCheck>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Eigen-equations for every state up to `max_level`: the Hamiltonian with the
/// closed-form energy, the reflections with the labeled signs, and in the
/// curvilinear systems `J3^2` (and `J^2` for spherical labels).
pub fn verify_eigen_suite(system: CoordinateSystem, max_level: u32, mu: &MuParams) -> Result<EigenReport> {
    let osc = Oscillator::gaussian(mu.clone());
    let h = osc.hamiltonian(HamiltonianScope::Total);
    let j3sq = osc.j3_squared();
    let jsq = osc.total_angular_momentum();
    let labels: Vec<QuantumNumbers> = (0..=max_level).flat_map(|n| enumerate_level(LevelIndex(n), system)).collect();
    let rows = labels
        .par_iter()
        .map(|q| -> Result<Vec<EigenCheck>> {
            let st = state(q, mu)?;
            let mut ops: Vec<(String, &OperatorExpr, crate::poly::Rational)> = vec![("H".into(), &h, energy(q, mu)?)];
            let reflections: Vec<OperatorExpr> = Axis::ALL.iter().map(|&a| osc.reflection(a)).collect();
            for (i, s) in q.reflection_signs().iter().enumerate() {
                ops.push((format!("R{}", i + 1), &reflections[i], int(s.value())));
            }
            if system != CoordinateSystem::Cartesian {
                let ang = angular_eigenvalues(q, mu)?;
                ops.push(("J3²".into(), &j3sq, ang.j3sq));
                if let Some(j2) = ang.j2 {
                    ops.push(("J²".into(), &jsq, j2));
                }
            }
            ops.into_iter()
                .map(|(name, op, value)| {
                    Ok(EigenCheck {
                        label: q.to_string(),
                        operator: name,
                        holds: check_eigenstate(op, &st, &real(value.clone()))?,
                        eigenvalue: value.to_string(),
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EigenReport { system, max_level, mu: mu.clone(), checks: rows.into_iter().flatten().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, MultiPoly};
    use crate::states::Sign;

    #[test]
    fn eigenstate_examples() {
        let m = MuParams::from_ratios([(1, 4), (1, 4), (1, 3)]).unwrap();
        let osc = Oscillator::gaussian(m.clone());
        let ground = state(&QuantumNumbers::Cartesian { n: [0, 0, 0] }, &m).unwrap();
        let e = m.sum() + rat(3, 2);
        assert!(check_eigenstate(&osc.hamiltonian(HamiltonianScope::Total), &ground, &real(e.clone())).unwrap());
        assert!(!check_eigenstate(&osc.hamiltonian(HamiltonianScope::Total), &ground, &real(e + int(1))).unwrap());
        let q = QuantumNumbers::Cylindrical { n_rho: 0, two_m: 1, s1: Sign::Minus, s2: Sign::Plus, n_z: 0 };
        let v = (int(1) + int(2) * m.get(0)) * (int(1) + int(2) * m.get(1));
        assert!(check_eigenstate(&osc.j3_squared(), &state(&q, &m).unwrap(), &real(v)).unwrap());
        let q = QuantumNumbers::Spherical { n_r: 1, two_l: 0, two_m: 0, s: [Sign::Plus; 3] };
        assert!(check_eigenstate(&osc.total_angular_momentum(), &state(&q, &m).unwrap(), &real(int(0))).unwrap());
        let plain = Oscillator::plain(m.clone());
        assert!(check_eigenstate(&plain.identity(), &ground, &real(int(1))).is_err());
    }

    #[test]
    fn hamiltonian_is_symmetric() {
        for m in MuParams::default_samples() {
            let osc = Oscillator::gaussian(m.clone());
            let states: Vec<GaussianState> = crate::poly::Monomial::up_to_degree(5)
                .into_iter()
                .map(|mono| GaussianState::from_real(&MultiPoly::monomial(mono), m.clone()))
                .collect();
            assert!(check_hermiticity(&osc.hamiltonian(HamiltonianScope::Total), &states).unwrap());
            // x1 d1 is not symmetric for the weight
            let skew = &osc.coordinate(Axis::X1) * &osc.partial(Axis::X1);
            assert!(!check_hermiticity(&skew, &states[..10]).unwrap());
        }
    }

    #[test]
    fn eigen_suite_small() {
        let m = MuParams::from_ratios([(1, 3), (1, 4), (1, 5)]).unwrap();
        for sys in CoordinateSystem::ALL {
            let r = verify_eigen_suite(sys, 3, &m).unwrap();
            assert!(r.passed());
        }
    }
}
