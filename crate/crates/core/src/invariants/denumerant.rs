//! Denumerants: fiber cardinalities and the maximal denumerant.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernel::IntVector;
use crate::monoid::{AffineSemigroup, NumericalSemigroup};

/// Number of factorizations of `m`; errors when `m` is not an element.
pub fn denumerant(monoid: &AffineSemigroup, m: &IntVector) -> Result<BigInt> {
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    Ok(BigInt::from(fiber.len()))
}

/// Number of factorizations of `m` of maximal length.
pub fn max_denumerant_element(monoid: &AffineSemigroup, m: &IntVector) -> Result<BigInt> {
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    let max = fiber.iter().map(|z| z.length()).max().unwrap();
    Ok(BigInt::from(
        fiber.iter().filter(|z| z.length() == max).count(),
    ))
}

fn denumerant_raw(s: &NumericalSemigroup, x: u64) -> (u64, u64) {
    let fiber = s.factorizations_raw(x);
    let max = fiber.iter().map(|v| v.iter().sum::<u64>()).max().unwrap_or(0);
    let at_max = fiber
        .iter()
        .filter(|v| v.iter().sum::<u64>() == max)
        .count() as u64;
    (fiber.len() as u64, at_max)
}

pub fn denumerant_numerical(s: &NumericalSemigroup, x: u64) -> Result<u64> {
    if !s.contains(x) {
        return Err(Error::NotAnElement(x.to_string()));
    }
    Ok(denumerant_raw(s, x).0)
}

/// Result of a maximal-denumerant scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxDenumerant {
    pub value: u64,
    /// Element attaining the maximum.
    pub witness: u64,
    /// Upper end of the scanned element range.
    pub bound_used: u64,
    /// True when the caller supplied the bound (and vouches for it);
    /// otherwise the default heuristic bound `F(S) + 1 + m_1 m_e` was used.
    pub bound_supplied: bool,
}

/// Maximal denumerant of the semigroup: the largest number of
/// maximal-length factorizations of any element, scanned for elements up
/// to `scan_bound` (defaulting to `F(S) + 1 + m_1 m_e`).
pub fn max_denumerant(
    s: &NumericalSemigroup,
    scan_bound: Option<u64>,
) -> Result<MaxDenumerant> {
    let default_bound = {
        let f_plus_one = (s.frobenius() + 1) as u64;
        let gens = s.generators();
        let product = gens[0]
            .checked_mul(*gens.last().unwrap())
            .ok_or_else(|| Error::InvalidArgument("scan bound overflows".into()))?;
        f_plus_one
            .checked_add(product)
            .ok_or_else(|| Error::InvalidArgument("scan bound overflows".into()))?
    };
    let bound = scan_bound.unwrap_or(default_bound);
    let mut best = 0u64;
    let mut witness = 0u64;
    for x in 0..=bound {
        if !s.contains(x) {
            continue;
        }
        let (_, at_max) = denumerant_raw(s, x);
        if at_max > best {
            best = at_max;
            witness = x;
        }
    }
    Ok(MaxDenumerant {
        value: best,
        witness,
        bound_used: bound,
        bound_supplied: scan_bound.is_some(),
    })
}
