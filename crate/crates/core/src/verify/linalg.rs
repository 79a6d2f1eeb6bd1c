//! Exact sparse column elimination over the Gaussian rationals.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::{One, Zero};

use crate::operators::Scalar;
use crate::poly::Monomial;

/// Coordinate of an operator's action: (input monomial index, output monomial).
pub(crate) type Key = (u32, Monomial);
pub(crate) type SparseVec = BTreeMap<Key, Scalar>;

fn axpy(target: &mut SparseVec, factor: &Scalar, source: &SparseVec) {
    for (k, v) in source {
        let entry = target.entry(*k).or_insert_with(Scalar::zero);
        *entry = entry.clone() - factor.clone() * v.clone();
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

struct BasisVector {
    vector: SparseVec,
    /// The vector as a combination of the original columns.
    combination: Vec<Scalar>,
}

/// Column echelon form of a fixed set of columns, reused across right-hand
/// sides. Each stored vector has its largest key as pivot, with pivot entry 1.
pub(crate) struct ColumnEchelon {
    columns: usize,
    basis: Vec<BasisVector>,
    pivots: BTreeMap<Key, usize>,
    dependent: Vec<usize>,
}

impl ColumnEchelon {
    pub(crate) fn new(columns: &[SparseVec]) -> Self {
        let mut echelon = ColumnEchelon {
            columns: columns.len(),
            basis: Vec::new(),
            pivots: BTreeMap::new(),
            dependent: Vec::new(),
        };
        for (index, column) in columns.iter().enumerate() {
            let mut combination = vec![Scalar::zero(); columns.len()];
            combination[index] = Scalar::one();
            let (vector, combination) = echelon.reduce(column.clone(), combination);
            match vector.iter().next_back() {
                None => echelon.dependent.push(index),
                Some((&pivot, lead)) => {
                    let inv = Scalar::one() / lead.clone();
                    let vector = vector.into_iter().map(|(k, v)| (k, v * inv.clone())).collect();
                    let combination = combination.into_iter().map(|c| c * inv.clone()).collect();
                    echelon.pivots.insert(pivot, echelon.basis.len());
                    echelon.basis.push(BasisVector { vector, combination });
                }
            }
        }
        echelon
    }

    /// Eliminates every pivot key from `v`, tracking the subtracted columns.
    fn reduce(&self, mut v: SparseVec, mut combination: Vec<Scalar>) -> (SparseVec, Vec<Scalar>) {
        let mut cursor: Option<Key> = None;
        loop {
            let upper = match cursor {
                None => Bound::Unbounded,
                Some(k) => Bound::Excluded(k),
            };
            let Some((&key, value)) = v.range((Bound::Unbounded, upper)).next_back() else {
                break;
            };
            if let Some(&b) = self.pivots.get(&key) {
                let factor = value.clone();
                let basis = &self.basis[b];
                axpy(&mut v, &factor, &basis.vector);
                for (c, bc) in combination.iter_mut().zip(&basis.combination) {
                    *c = c.clone() - factor.clone() * bc.clone();
                }
            }
            cursor = Some(key);
        }
        (v, combination)
    }

    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Columns that are combinations of earlier ones.
    pub(crate) fn dependent_columns(&self) -> &[usize] {
        &self.dependent
    }

    /// Coefficients `c` with `sum_j c_j column_j = target`, dependent columns
    /// set to zero; `Err` carries the nonzero remainder size.
    pub(crate) fn solve(&self, target: &SparseVec) -> Result<Vec<Scalar>, usize> {
        let (remainder, combination) = self.reduce(target.clone(), vec![Scalar::zero(); self.columns]);
        if remainder.is_empty() {
            Ok(combination.into_iter().map(|c| -c).collect())
        } else {
            Err(remainder.len())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{imag, real};
    use crate::poly::{int, Monomial};

    fn vec_of(entries: &[(u32, Scalar)]) -> SparseVec {
        entries.iter().map(|(i, v)| ((*i, Monomial::ONE), v.clone())).collect()
    }

    #[test]
    fn solves_and_detects_residuals() {
        let cols = vec![
            vec_of(&[(0, real(int(1))), (1, real(int(2)))]),
            vec_of(&[(1, real(int(1))), (2, imag(int(1)))]),
            vec_of(&[(0, real(int(1))), (1, real(int(3))), (2, imag(int(1)))]),
        ];
        let e = ColumnEchelon::new(&cols);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.dependent_columns(), &[2]);
        let target = vec_of(&[(0, real(int(2))), (1, real(int(7))), (2, imag(int(3)))]);
        let c = e.solve(&target).unwrap();
        assert_eq!(c, vec![real(int(2)), real(int(3)), Scalar::zero()]);
        assert!(e.solve(&vec_of(&[(3, real(int(1)))])).is_err());
    }
}
