use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monoid::{AffineSemigroup, Factorization};

/// Distance between two factorizations:
/// `d(x,y) = max{ |x - x∧y|, |y - x∧y| } = max{|x|, |y|} - |x∧y|`.
pub fn distance(x: &Factorization, y: &Factorization) -> Result<BigInt> {
    let meet = x.exponents().meet(y.exponents())?;
    let common = meet.norm1();
    Ok(x.length().max(y.length()) - common)
}

/// Least `N` such that the graph on `zs` with edges of distance at most
/// `N` is connected: the largest edge on a minimum bottleneck spanning
/// tree. Zero for a single factorization.
pub(crate) fn bottleneck_connectivity(zs: &[Factorization]) -> BigInt {
    let n = zs.len();
    if n <= 1 {
        return BigInt::zero();
    }
    let mut edges: Vec<(BigInt, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let d = distance(&zs[i], &zs[j]).expect("fiber vectors share a length");
            edges.push((d, i, j));
        }
    }
    edges.sort();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }

    let mut components = n;
    let mut bottleneck = BigInt::zero();
    for (d, i, j) in edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            components -= 1;
            bottleneck = d;
            if components == 1 {
                break;
            }
        }
    }
    bottleneck
}

/// Catenary degree of a set of factorizations of one element: the least
/// `N` admitting `N`-chains between any two of them.
///
/// Errors when the set is empty or mixes factorizations of different
/// elements of `m`.
pub fn catenary_of_factorizations(
    monoid: &AffineSemigroup,
    zs: &[Factorization],
) -> Result<BigInt> {
    let Some(first) = zs.first() else {
        return Err(Error::InvalidArgument(
            "catenary degree of an empty factorization set".into(),
        ));
    };
    let image = monoid.apply(first.exponents())?;
    for z in &zs[1..] {
        if monoid.apply(z.exponents())? != image {
            return Err(Error::MixedFiber);
        }
    }
    Ok(bottleneck_connectivity(zs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::IntVector;
    use crate::monoid::NumericalSemigroup;

    fn fz(v: &[i64]) -> Factorization {
        Factorization::new(IntVector::from_i64(v))
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            distance(&fz(&[11, 0, 0]), &fz(&[0, 0, 6])).unwrap(),
            BigInt::from(11)
        );
        assert_eq!(
            distance(&fz(&[0, 7, 0, 0]), &fz(&[2, 1, 2, 0])).unwrap(),
            BigInt::from(6)
        );
        let x = fz(&[3, 1, 4]);
        assert_eq!(distance(&x, &x).unwrap(), BigInt::zero());
    }

    #[test]
    fn distance_dimension_mismatch() {
        assert!(distance(&fz(&[1, 2]), &fz(&[1, 2, 3])).is_err());
    }

    #[test]
    fn bottleneck_of_66() {
        let s = NumericalSemigroup::new(&[6, 9, 11]).unwrap();
        let fiber = s.factorizations(66);
        assert_eq!(bottleneck_connectivity(&fiber), BigInt::from(4));
    }

    #[test]
    fn bottleneck_of_77() {
        let s = NumericalSemigroup::new(&[10, 11, 23, 35]).unwrap();
        let fiber = s.factorizations(77);
        assert_eq!(bottleneck_connectivity(&fiber), BigInt::from(3));
    }

    #[test]
    fn singleton_fiber_has_catenary_zero() {
        assert_eq!(bottleneck_connectivity(&[fz(&[1, 0])]), BigInt::zero());
    }

    #[test]
    fn mixed_fiber_is_rejected() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap().as_affine();
        let err = catenary_of_factorizations(&s, &[fz(&[1, 0]), fz(&[0, 1])]);
        assert_eq!(err, Err(Error::MixedFiber));
    }
}
