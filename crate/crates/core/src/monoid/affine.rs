use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{enumerate_bounded, graver_basis, hilbert_basis, IntVector, LinearSystem};
use crate::monoid::Factorization;

/// How an affine semigroup was given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupDefinition {
    /// Submonoid of N^k generated by the listed vectors.
    Generators(Vec<IntVector>),
    /// Full affine semigroup of all nonnegative solutions of a linear
    /// system, rows optionally congruences.
    Equations {
        matrix: Vec<IntVector>,
        moduli: Vec<Option<BigInt>>,
    },
}

/// A finitely generated reduced cancellative commutative monoid, embedded
/// in N^k. Elements are vectors of the ambient space; torsion components
/// enter only through equation-defined (full) semigroups.
///
/// Derived data (atom list, Graver basis, Betti elements) is computed on
/// first use and cached; the object itself is immutable.
#[derive(Debug, Clone)]
pub struct AffineSemigroup {
    dim: usize,
    definition: SemigroupDefinition,
    atoms: OnceLock<Vec<IntVector>>,
    graver: OnceLock<Vec<IntVector>>,
    pub(crate) betti: OnceLock<Vec<IntVector>>,
}

impl AffineSemigroup {
    /// Monoid generated by the given vectors of N^k. The generator list is
    /// deduplicated but kept in the given order; redundant generators are
    /// discarded lazily when the atom list is first requested.
    pub fn from_generators(generators: Vec<IntVector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "a semigroup needs at least one generator".into(),
            ));
        }
        let dim = generators[0].len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "ambient dimension must be positive".into(),
            ));
        }
        let mut seen = Vec::new();
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.len(),
                });
            }
            if !g.is_nonnegative() {
                return Err(Error::InvalidArgument(format!(
                    "generator {g} has a negative entry"
                )));
            }
            if g.is_zero() {
                return Err(Error::InvalidArgument(
                    "the zero vector cannot be a generator of a reduced monoid".into(),
                ));
            }
            if !seen.contains(g) {
                seen.push(g.clone());
            }
        }
        Ok(AffineSemigroup {
            dim,
            definition: SemigroupDefinition::Generators(seen),
            atoms: OnceLock::new(),
            graver: OnceLock::new(),
            betti: OnceLock::new(),
        })
    }

    /// Like [`from_generators`](Self::from_generators) for a list already
    /// known to be the atom set; skips the redundancy elimination.
    pub(crate) fn from_minimal_generators(generators: Vec<IntVector>) -> Result<Self> {
        let s = Self::from_generators(generators)?;
        let atoms = match &s.definition {
            SemigroupDefinition::Generators(g) => g.clone(),
            SemigroupDefinition::Equations { .. } => unreachable!(),
        };
        let _ = s.atoms.set(atoms);
        Ok(s)
    }

    /// Full affine semigroup of the nonnegative solutions of the system.
    pub fn from_equations(matrix: Vec<IntVector>, moduli: Vec<Option<BigInt>>) -> Result<Self> {
        if matrix.is_empty() {
            return Err(Error::InvalidArgument(
                "an equation-defined semigroup needs at least one row".into(),
            ));
        }
        let dim = matrix[0].len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "ambient dimension must be positive".into(),
            ));
        }
        // validates row lengths and moduli
        let _ = LinearSystem::with_moduli(matrix.clone(), IntVector::zeros(matrix.len()), {
            let mut m = moduli.clone();
            m.resize(matrix.len(), None);
            m
        })?;
        let mut moduli = moduli;
        moduli.resize(matrix.len(), None);
        Ok(AffineSemigroup {
            dim,
            definition: SemigroupDefinition::Equations { matrix, moduli },
            atoms: OnceLock::new(),
            graver: OnceLock::new(),
            betti: OnceLock::new(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn definition(&self) -> &SemigroupDefinition {
        &self.definition
    }

    /// Full affine semigroups are exactly the equation-defined ones here;
    /// membership in them reduces to the defining constraints, and
    /// principal ideals admit an inequality-system shortcut.
    pub fn is_full(&self) -> bool {
        matches!(self.definition, SemigroupDefinition::Equations { .. })
    }

    /// The unique minimal generating system (the atoms), in a stable order:
    /// input order for generator-defined monoids, lexicographic for
    /// equation-defined ones.
    pub fn minimal_generators(&self) -> Result<&[IntVector]> {
        if let Some(atoms) = self.atoms.get() {
            return Ok(atoms);
        }
        let computed = match &self.definition {
            SemigroupDefinition::Generators(gens) => reduce_generators(gens)?,
            SemigroupDefinition::Equations { matrix, moduli } => hilbert_basis(matrix, moduli)?,
        };
        Ok(self.atoms.get_or_init(|| computed))
    }

    pub fn atom_count(&self) -> Result<usize> {
        Ok(self.minimal_generators()?.len())
    }

    /// The k×e matrix whose columns are the atoms, as rows of length e.
    pub(crate) fn generator_matrix(&self) -> Result<Vec<IntVector>> {
        let atoms = self.minimal_generators()?;
        Ok(generator_matrix_of(self.dim, atoms))
    }

    /// Image `φ(x) = Σ x_i m_i` of an exponent vector.
    pub fn apply(&self, x: &IntVector) -> Result<IntVector> {
        let atoms = self.minimal_generators()?;
        if x.len() != atoms.len() {
            return Err(Error::DimensionMismatch {
                expected: atoms.len(),
                got: x.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.dim];
        for (xi, g) in x.entries().iter().zip(atoms) {
            if xi.is_zero() {
                continue;
            }
            for (o, gi) in out.iter_mut().zip(g.entries()) {
                *o += xi * gi;
            }
        }
        Ok(IntVector::new(out))
    }

    /// The fiber `Z(m) = φ^{-1}(m)`: all factorizations of `m`. Empty when
    /// `m` is not an element of the monoid.
    pub fn factorizations(&self, m: &IntVector) -> Result<Vec<Factorization>> {
        if m.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: m.len(),
            });
        }
        if !m.is_nonnegative() {
            return Ok(Vec::new());
        }
        let rows = self.generator_matrix()?;
        let sys = LinearSystem::new(rows, m.clone())?;
        let fiber = enumerate_bounded(&sys)?;
        Ok(fiber.into_iter().map(Factorization::new).collect())
    }

    /// Membership test. For equation-defined monoids this checks the
    /// defining constraints directly; otherwise it looks for a factorization.
    pub fn contains(&self, m: &IntVector) -> Result<bool> {
        if m.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: m.len(),
            });
        }
        if !m.is_nonnegative() {
            return Ok(false);
        }
        match &self.definition {
            SemigroupDefinition::Equations { matrix, moduli } => {
                let sys = LinearSystem::with_moduli(
                    matrix.clone(),
                    IntVector::zeros(matrix.len()),
                    moduli.clone(),
                )?;
                sys.satisfied_by(m)
            }
            SemigroupDefinition::Generators(_) => Ok(!self.factorizations(m)?.is_empty()),
        }
    }

    /// Graver basis of the defining matrix of `ker φ` (atoms as columns).
    pub fn graver(&self) -> Result<&[IntVector]> {
        if let Some(g) = self.graver.get() {
            return Ok(g);
        }
        let computed = graver_basis(&self.generator_matrix()?)?;
        Ok(self.graver.get_or_init(|| computed))
    }

    /// The monoid generated by the atoms with an extra coordinate 1
    /// appended; any two factorizations of the same lifted element have
    /// equal length, so the lift is half-factorial.
    pub fn eq_lift(&self) -> Result<AffineSemigroup> {
        let lifted: Vec<IntVector> = self
            .minimal_generators()?
            .iter()
            .map(|g| {
                let mut e = g.entries().to_vec();
                e.push(BigInt::from(1));
                IntVector::new(e)
            })
            .collect();
        AffineSemigroup::from_minimal_generators(lifted)
    }

    /// Like [`eq_lift`](Self::eq_lift) with the extra atom `(0,…,0,1)`
    /// appended last.
    pub fn hom_lift(&self) -> Result<AffineSemigroup> {
        let mut lifted: Vec<IntVector> = self
            .minimal_generators()?
            .iter()
            .map(|g| {
                let mut e = g.entries().to_vec();
                e.push(BigInt::from(1));
                IntVector::new(e)
            })
            .collect();
        let mut unit = vec![BigInt::zero(); self.dim];
        unit.push(BigInt::from(1));
        lifted.push(IntVector::new(unit));
        AffineSemigroup::from_minimal_generators(lifted)
    }
}

pub(crate) fn generator_matrix_of(dim: usize, atoms: &[IntVector]) -> Vec<IntVector> {
    (0..dim)
        .map(|r| IntVector::new(atoms.iter().map(|g| g.get(r).clone()).collect()))
        .collect()
}

/// Drops every generator expressible as a combination of the others. The
/// survivors are the atoms, independent of processing order.
fn reduce_generators(gens: &[IntVector]) -> Result<Vec<IntVector>> {
    let dim = gens[0].len();
    let mut kept: Vec<IntVector> = gens.to_vec();
    let mut idx = 0;
    while idx < kept.len() {
        let candidate = kept[idx].clone();
        let others: Vec<IntVector> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, g)| g.clone())
            .collect();
        if others.is_empty() {
            break;
        }
        let rows = generator_matrix_of(dim, &others);
        let sys = LinearSystem::new(rows, candidate.clone())?;
        if enumerate_bounded(&sys)?.is_empty() {
            idx += 1;
        } else {
            kept.remove(idx);
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64(v)
    }

    fn plane_monoid() -> AffineSemigroup {
        AffineSemigroup::from_generators(vec![
            iv(&[2, 0]),
            iv(&[0, 2]),
            iv(&[1, 1]),
            iv(&[1, 2]),
        ])
        .unwrap()
    }

    #[test]
    fn redundant_generator_is_dropped() {
        let m = AffineSemigroup::from_generators(vec![
            iv(&[2, 0]),
            iv(&[0, 2]),
            iv(&[1, 1]),
            iv(&[1, 2]),
            iv(&[2, 2]),
        ])
        .unwrap();
        assert_eq!(
            m.minimal_generators().unwrap(),
            &[iv(&[2, 0]), iv(&[0, 2]), iv(&[1, 1]), iv(&[1, 2])]
        );
    }

    #[test]
    fn equation_defined_generators_are_hilbert_basis() {
        let m = AffineSemigroup::from_equations(
            vec![iv(&[0, 1, 1]), iv(&[1, 0, 1])],
            vec![Some(BigInt::from(2)), Some(BigInt::from(2))],
        )
        .unwrap();
        assert_eq!(
            m.minimal_generators().unwrap(),
            &[iv(&[0, 0, 2]), iv(&[0, 2, 0]), iv(&[1, 1, 1]), iv(&[2, 0, 0])]
        );
        assert!(m.is_full());
    }

    #[test]
    fn fiber_of_plane_element() {
        let m = plane_monoid();
        let fiber = m.factorizations(&iv(&[2, 2])).unwrap();
        assert_eq!(
            fiber,
            vec![
                Factorization::new(iv(&[0, 0, 2, 0])),
                Factorization::new(iv(&[1, 1, 0, 0])),
            ]
        );
    }

    #[test]
    fn fiber_of_zero_is_the_zero_vector() {
        let m = plane_monoid();
        let fiber = m.factorizations(&iv(&[0, 0])).unwrap();
        assert_eq!(fiber, vec![Factorization::new(iv(&[0, 0, 0, 0]))]);
    }

    #[test]
    fn membership_by_empty_fiber() {
        let m = plane_monoid();
        assert!(!m.contains(&iv(&[1, 0])).unwrap());
        assert!(m.contains(&iv(&[2, 4])).unwrap());
    }

    #[test]
    fn lifts_append_a_coordinate() {
        let s = AffineSemigroup::from_generators(vec![iv(&[2]), iv(&[3])]).unwrap();
        let eq = s.eq_lift().unwrap();
        assert_eq!(
            eq.minimal_generators().unwrap(),
            &[iv(&[2, 1]), iv(&[3, 1])]
        );
        let hom = s.hom_lift().unwrap();
        assert_eq!(
            hom.minimal_generators().unwrap(),
            &[iv(&[2, 1]), iv(&[3, 1]), iv(&[0, 1])]
        );
    }

    #[test]
    fn apply_reconstructs_element() {
        let m = plane_monoid();
        let img = m.apply(&iv(&[0, 1, 2, 0])).unwrap();
        assert_eq!(img, iv(&[2, 4]));
    }
}
