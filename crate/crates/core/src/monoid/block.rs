//! Monoids of zero-sum sequences over finite abelian groups.
//!
//! For a group `Z_{d_1} × … × Z_{d_r}` and chosen elements `g_1, …, g_k`,
//! the sequences `x ∈ N^k` with `Σ x_j g_j = 0` form a full affine
//! semigroup; its minimal generators are the minimal zero-sum sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::IntVector;
use crate::monoid::affine::AffineSemigroup;

/// The block monoid `B({g_1, …, g_k})` over `Z_{d_1} × … × Z_{d_r}` as an
/// equation-defined affine semigroup in `N^k` (one congruence row per
/// group component). Element coordinates are reduced modulo the group.
pub fn block_monoid(moduli: &[u64], elements: &[IntVector]) -> Result<AffineSemigroup> {
    if moduli.is_empty() {
        return Err(Error::InvalidGroup("the group has no components".into()));
    }
    for &d in moduli {
        if d < 2 {
            return Err(Error::InvalidGroup(format!(
                "modulus {d} does not define a nontrivial cyclic component"
            )));
        }
    }
    if elements.is_empty() {
        return Err(Error::InvalidGroup("no group elements given".into()));
    }
    let r = moduli.len();
    for g in elements {
        if g.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: g.len(),
            });
        }
    }
    let rows: Vec<IntVector> = (0..r)
        .map(|row| {
            IntVector::new(
                elements
                    .iter()
                    .map(|g| g.get(row).mod_floor(&BigInt::from(moduli[row])))
                    .collect(),
            )
        })
        .collect();
    let moduli_opt: Vec<Option<BigInt>> = moduli.iter().map(|&d| Some(BigInt::from(d))).collect();
    AffineSemigroup::from_equations(rows, moduli_opt)
}

/// The Davenport constant of the chosen elements: the maximal length of a
/// minimal zero-sum sequence.
pub fn davenport_constant(moduli: &[u64], elements: &[IntVector]) -> Result<BigInt> {
    let monoid = block_monoid(moduli, elements)?;
    let max = monoid
        .minimal_generators()?
        .iter()
        .map(IntVector::norm1)
        .max()
        .unwrap_or_else(BigInt::zero);
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64(v)
    }

    #[test]
    fn block_monoid_of_z2_squared() {
        let b = block_monoid(&[2, 2], &[iv(&[0, 1]), iv(&[1, 0]), iv(&[1, 1])]).unwrap();
        assert_eq!(
            b.minimal_generators().unwrap(),
            &[iv(&[0, 0, 2]), iv(&[0, 2, 0]), iv(&[1, 1, 1]), iv(&[2, 0, 0])]
        );
        assert_eq!(davenport_constant(&[2, 2], &[iv(&[0, 1]), iv(&[1, 0]), iv(&[1, 1])]).unwrap(), BigInt::from(3));
    }

    #[test]
    fn block_monoid_of_z2() {
        let b = block_monoid(&[2], &[iv(&[1])]).unwrap();
        assert_eq!(b.minimal_generators().unwrap(), &[iv(&[2])]);
        assert_eq!(
            davenport_constant(&[2], &[iv(&[1])]).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn zero_modulus_is_rejected() {
        assert!(matches!(
            block_monoid(&[0], &[iv(&[1])]),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn elements_are_reduced_modulo_the_group() {
        let b = block_monoid(&[2], &[iv(&[3])]).unwrap();
        assert_eq!(b.minimal_generators().unwrap(), &[iv(&[2])]);
    }
}
