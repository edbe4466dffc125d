//! Tame degrees.
//!
//! `t(m, m_i)` is the worst distance from a factorization of `m` to one
//! that uses the atom `m_i`. The monoid value maximizes over the minimal
//! elements of the principal ideals `m_i + M`; numerical semigroups admit
//! a candidate set built from the Apéry sets of all the atoms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::invariants::distance::distance;
use crate::kernel::IntVector;
use crate::monoid::{AffineSemigroup, Factorization, NumericalSemigroup};

fn tame_of_fiber(fiber: &[Factorization], atom_index: usize) -> Result<BigInt> {
    let with_atom: Vec<&Factorization> = fiber
        .iter()
        .filter(|z| !z.exponents().get(atom_index).is_zero())
        .collect();
    if with_atom.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no factorization uses atom {atom_index}; element not in the principal ideal"
        )));
    }
    let mut worst = BigInt::zero();
    for z in fiber {
        if !z.exponents().get(atom_index).is_zero() {
            continue; // distance 0 to itself
        }
        let nearest = with_atom
            .iter()
            .map(|w| distance(z, w))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .unwrap();
        worst = worst.max(nearest);
    }
    Ok(worst)
}

/// `t(m, m_i)`: largest over `z ∈ Z(m)` of the least distance to a
/// factorization with a nonzero `i`-th coordinate. Errors when `m` is not
/// in `m_i + M`.
pub fn tame_element(
    monoid: &AffineSemigroup,
    m: &IntVector,
    atom_index: usize,
) -> Result<BigInt> {
    let e = monoid.atom_count()?;
    if atom_index >= e {
        return Err(Error::InvalidArgument(format!(
            "atom index {atom_index} out of range for {e} atoms"
        )));
    }
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    tame_of_fiber(&fiber, atom_index)
}

/// `t(M, m_i)`: maximum of `t(m, m_i)` over the images of the minimal
/// factorizations of the principal ideal `m_i + M`.
pub fn tame_wrt(monoid: &AffineSemigroup, atom_index: usize) -> Result<BigInt> {
    let atoms = monoid.minimal_generators()?;
    let atom = atoms
        .get(atom_index)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("atom index {atom_index} out of range"))
        })?
        .clone();
    let minimals = monoid.principal_ideal_minimal_factorizations(&atom)?;
    let images: BTreeSet<IntVector> = minimals
        .iter()
        .map(|z| monoid.apply(z.exponents()))
        .collect::<Result<_>>()?;
    let best = images
        .into_par_iter()
        .map(|m| tame_element(monoid, &m, atom_index))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max();
    Ok(best.unwrap_or_else(BigInt::zero))
}

/// Tame degree of the monoid: the maximum over all atoms.
pub fn tame(monoid: &AffineSemigroup) -> Result<BigInt> {
    let e = monoid.atom_count()?;
    let best = (0..e)
        .into_par_iter()
        .map(|i| tame_wrt(monoid, i))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max();
    Ok(best.unwrap_or_else(BigInt::zero))
}

/// Numerical candidate-set path: the tame degree is attained on
/// `{m_1, …, m_e} + (∪_i Ap(S, m_i) ∖ {0})`.
pub fn tame_numerical(s: &NumericalSemigroup) -> Result<BigInt> {
    let mut apery_union: BTreeSet<u64> = BTreeSet::new();
    for &mi in s.generators() {
        for w in s.apery_set(mi)? {
            if w != 0 {
                apery_union.insert(w);
            }
        }
    }
    let mut candidates: BTreeSet<u64> = BTreeSet::new();
    for &mi in s.generators() {
        for &w in &apery_union {
            candidates.insert(mi + w);
        }
    }
    let gens = s.generators().to_vec();
    let best = candidates
        .into_par_iter()
        .map(|c| {
            let fiber = s.factorizations(c);
            let mut worst = BigInt::zero();
            for (i, &mi) in gens.iter().enumerate() {
                if c >= mi && s.contains(c - mi) {
                    worst = worst.max(tame_of_fiber(&fiber, i)?);
                }
            }
            Ok(worst)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max();
    Ok(best.unwrap_or_else(BigInt::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64(v)
    }

    #[test]
    fn tame_of_2_3_is_three() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(tame(&s.as_affine()).unwrap(), BigInt::from(3));
        assert_eq!(tame_numerical(&s).unwrap(), BigInt::from(3));
    }

    #[test]
    fn tame_element_of_6_wrt_2_in_2_3() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap().as_affine();
        assert_eq!(tame_element(&s, &iv(&[6]), 0).unwrap(), BigInt::from(3));
        assert_eq!(tame_element(&s, &iv(&[6]), 1).unwrap(), BigInt::from(3));
    }

    #[test]
    fn singleton_fiber_with_atom_has_tame_zero() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap().as_affine();
        assert_eq!(tame_element(&s, &iv(&[2]), 0).unwrap(), BigInt::zero());
    }

    #[test]
    fn element_outside_principal_ideal_is_rejected() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap().as_affine();
        // 2 is not in 3 + M
        assert!(tame_element(&s, &iv(&[2]), 1).is_err());
    }
}
