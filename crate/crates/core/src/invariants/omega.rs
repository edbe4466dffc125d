//! ω-primality.
//!
//! `ω(m)` is the largest length of a minimal factorization in the
//! principal ideal `m + M`; the monoid value is the maximum over the
//! atoms. For numerical semigroups the minimal factorizations all factor
//! elements `m + w` with `w` in the Apéry set of some atom, which avoids
//! the principal-ideal solve.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::IntVector;
use crate::monoid::{AffineSemigroup, NumericalSemigroup};

/// `ω(m)`: the maximal length over `Minimals_≤ Z(m + M)`.
pub fn omega_element(monoid: &AffineSemigroup, m: &IntVector) -> Result<BigInt> {
    if !monoid.contains(m)? {
        return Err(Error::NotAnElement(m.to_string()));
    }
    let minimals = monoid.principal_ideal_minimal_factorizations(m)?;
    Ok(minimals
        .iter()
        .map(|z| z.length())
        .max()
        .unwrap_or_else(BigInt::zero))
}

/// `ω(M)`: the maximum of `ω(m_i)` over the atoms, with the atom
/// attaining it.
pub fn omega_with_witness(monoid: &AffineSemigroup) -> Result<(BigInt, Option<IntVector>)> {
    let atoms = monoid.minimal_generators()?.to_vec();
    let values: Vec<(BigInt, IntVector)> = atoms
        .into_par_iter()
        .map(|a| omega_element(monoid, &a).map(|w| (w, a)))
        .collect::<Result<_>>()?;
    Ok(values
        .into_iter()
        .max()
        .map_or((BigInt::zero(), None), |(w, a)| (w, Some(a))))
}

pub fn omega(monoid: &AffineSemigroup) -> Result<BigInt> {
    Ok(omega_with_witness(monoid)?.0)
}

fn minimalize_u64(mut vs: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    vs.sort_by_key(|v| (v.iter().sum::<u64>(), v.clone()));
    vs.dedup();
    let mut minimal: Vec<Vec<u64>> = Vec::new();
    for v in vs {
        if !minimal
            .iter()
            .any(|m| m.iter().zip(&v).all(|(a, b)| a <= b))
        {
            minimal.push(v);
        }
    }
    minimal
}

/// Apéry-set shortcut for `ω(x)` in a numerical semigroup: search the
/// fibers of `x + w` for `w` in the union of the atom Apéry sets.
pub fn omega_element_numerical(s: &NumericalSemigroup, x: u64) -> Result<BigInt> {
    if !s.contains(x) {
        return Err(Error::NotAnElement(x.to_string()));
    }
    let mut shifts: BTreeSet<u64> = BTreeSet::new();
    for &mi in s.generators() {
        for w in s.apery_set(mi)? {
            shifts.insert(w);
        }
    }
    let mut pool: Vec<Vec<u64>> = Vec::new();
    for w in shifts {
        pool.extend(s.factorizations_raw(x + w));
    }
    let minimals = minimalize_u64(pool);
    Ok(minimals
        .iter()
        .map(|v| v.iter().sum::<u64>())
        .max()
        .map_or_else(BigInt::zero, BigInt::from))
}

pub fn omega_numerical(s: &NumericalSemigroup) -> Result<BigInt> {
    let gens = s.generators().to_vec();
    let best = gens
        .into_par_iter()
        .map(|g| omega_element_numerical(s, g))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max();
    Ok(best.unwrap_or_else(BigInt::zero))
}
