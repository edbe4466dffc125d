//! The catenary degree family: plain, equal, homogeneous, adjacent and
//! monotone variants.
//!
//! The plain catenary degree of the monoid is the maximum over its Betti
//! elements; for numerical semigroups the maximum may equivalently be
//! taken over `{m_2, …, m_e} + (Ap(S, m_1) ∖ {0})`. The equal and
//! homogeneous variants are the plain catenary degrees of the lifts with a
//! length-tracking coordinate; the monotone variant is the maximum of
//! equal and adjacent catenary degrees over the projections of the
//! primitive elements of the homogeneous lift.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::invariants::distance::{bottleneck_connectivity, distance};
use crate::kernel::IntVector;
use crate::monoid::{AffineSemigroup, Factorization, NumericalSemigroup};

/// Catenary degree of one element of the monoid.
pub fn catenary_element(monoid: &AffineSemigroup, m: &IntVector) -> Result<BigInt> {
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    Ok(bottleneck_connectivity(&fiber))
}

/// Catenary degree of the monoid: the maximum over its Betti elements,
/// with the element attaining it (0 and no witness for factorial monoids).
pub fn catenary_with_witness(
    monoid: &AffineSemigroup,
) -> Result<(BigInt, Option<IntVector>)> {
    let betti = monoid.betti_elements()?;
    let values: Vec<(BigInt, IntVector)> = betti
        .par_iter()
        .map(|b| catenary_element(monoid, b).map(|c| (c, b.clone())))
        .collect::<Result<_>>()?;
    Ok(values
        .into_iter()
        .max()
        .map_or((BigInt::zero(), None), |(c, b)| (c, Some(b))))
}

pub fn catenary(monoid: &AffineSemigroup) -> Result<BigInt> {
    Ok(catenary_with_witness(monoid)?.0)
}

/// Numerical fast path: maximum of the element catenary degrees over
/// `{m_2, …, m_e} + (Ap(S, m_1) ∖ {0})`, skipping Betti computations.
pub fn catenary_numerical(s: &NumericalSemigroup) -> Result<BigInt> {
    let mut candidates: BTreeSet<u64> = BTreeSet::new();
    for &mi in &s.generators()[1..] {
        for &w in s.apery_by_residue() {
            if w != 0 {
                candidates.insert(mi + w);
            }
        }
    }
    let best = candidates
        .into_par_iter()
        .map(|c| bottleneck_connectivity(&s.factorizations(c)))
        .max();
    Ok(best.unwrap_or_else(BigInt::zero))
}

pub fn equal_catenary(monoid: &AffineSemigroup) -> Result<BigInt> {
    catenary(&monoid.eq_lift()?)
}

pub fn homogeneous_catenary(monoid: &AffineSemigroup) -> Result<BigInt> {
    catenary(&monoid.hom_lift()?)
}

fn distance_u64(x: &[u64], y: &[u64]) -> u64 {
    let mut lx = 0u64;
    let mut ly = 0u64;
    let mut meet = 0u64;
    for (a, b) in x.iter().zip(y) {
        lx += a;
        ly += b;
        meet += a.min(b);
    }
    lx.max(ly) - meet
}

fn bottleneck_u64(zs: &[Vec<u64>]) -> u64 {
    let n = zs.len();
    if n <= 1 {
        return 0;
    }
    let mut edges: Vec<(u64, u32, u32)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((distance_u64(&zs[i], &zs[j]), i as u32, j as u32));
        }
    }
    edges.sort_unstable();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
        if parent[x as usize] != x {
            let root = find(parent, parent[x as usize]);
            parent[x as usize] = root;
        }
        parent[x as usize]
    }
    let mut components = n;
    let mut bottleneck = 0;
    for (d, i, j) in edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri as usize] = rj;
            components -= 1;
            bottleneck = d;
            if components == 1 {
                break;
            }
        }
    }
    bottleneck
}

fn length_classes_u64(fiber: &[Vec<u64>]) -> Vec<(u64, Vec<Vec<u64>>)> {
    let mut classes: Vec<(u64, Vec<Vec<u64>>)> = Vec::new();
    for z in fiber {
        let l = z.iter().sum::<u64>();
        match classes.binary_search_by(|(cl, _)| cl.cmp(&l)) {
            Ok(i) => classes[i].1.push(z.clone()),
            Err(i) => classes.insert(i, (l, vec![z.clone()])),
        }
    }
    classes
}

fn equal_of_fiber_u64(fiber: &[Vec<u64>]) -> u64 {
    length_classes_u64(fiber)
        .into_iter()
        .map(|(_, class)| bottleneck_u64(&class))
        .max()
        .unwrap_or(0)
}

fn adjacent_of_fiber_u64(fiber: &[Vec<u64>]) -> u64 {
    let classes = length_classes_u64(fiber);
    let mut best = 0;
    for pair in classes.windows(2) {
        let mut min_d = u64::MAX;
        for x in &pair[0].1 {
            for y in &pair[1].1 {
                min_d = min_d.min(distance_u64(x, y));
            }
        }
        if min_d != u64::MAX {
            best = best.max(min_d);
        }
    }
    best
}

/// Monotone catenary degree of a numerical semigroup: the affine
/// procedure with the per-element work done on machine-word exponent
/// vectors.
pub fn monotone_catenary_numerical(s: &NumericalSemigroup) -> Result<BigInt> {
    let hom = s.as_affine().hom_lift()?;
    let mut projected: BTreeSet<u64> = BTreeSet::new();
    for p in hom.primitive_elements()? {
        let v: u64 = p.get(0).try_into().map_err(|_| {
            Error::InvalidArgument("primitive element exceeds the machine range".into())
        })?;
        projected.insert(v);
    }
    let best = projected
        .into_par_iter()
        .map(|v| {
            let fiber = s.factorizations_raw(v);
            equal_of_fiber_u64(&fiber).max(adjacent_of_fiber_u64(&fiber))
        })
        .max();
    Ok(best.map_or_else(BigInt::zero, BigInt::from))
}

fn length_classes(fiber: &[Factorization]) -> Vec<(BigInt, Vec<Factorization>)> {
    let mut classes: Vec<(BigInt, Vec<Factorization>)> = Vec::new();
    for z in fiber {
        let l = z.length();
        match classes.binary_search_by(|(cl, _)| cl.cmp(&l)) {
            Ok(i) => classes[i].1.push(z.clone()),
            Err(i) => classes.insert(i, (l, vec![z.clone()])),
        }
    }
    classes
}

/// Adjacent catenary degree of an element: the maximum over consecutive
/// length classes `Z_{l_i}(m)`, `Z_{l_{i+1}}(m)` of their set distance
/// (the minimum distance across the two classes).
pub fn adjacent_catenary_element(monoid: &AffineSemigroup, m: &IntVector) -> Result<BigInt> {
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    Ok(adjacent_of_fiber(&fiber))
}

fn adjacent_of_fiber(fiber: &[Factorization]) -> BigInt {
    let classes = length_classes(fiber);
    let mut best = BigInt::zero();
    for pair in classes.windows(2) {
        let mut min_d: Option<BigInt> = None;
        for x in &pair[0].1 {
            for y in &pair[1].1 {
                let d = distance(x, y).expect("fiber vectors share a length");
                if min_d.as_ref().is_none_or(|m| &d < m) {
                    min_d = Some(d);
                }
            }
        }
        if let Some(d) = min_d {
            best = best.max(d);
        }
    }
    best
}

/// Equal catenary degree of an element: within every fixed-length class,
/// the least `N` making the class `N`-connected; singleton classes
/// contribute 0.
pub fn equal_catenary_element(monoid: &AffineSemigroup, m: &IntVector) -> Result<BigInt> {
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    Ok(equal_of_fiber(&fiber))
}

fn equal_of_fiber(fiber: &[Factorization]) -> BigInt {
    length_classes(fiber)
        .into_iter()
        .map(|(_, class)| bottleneck_connectivity(&class))
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// Monotone catenary degree of the monoid, with the element attaining it:
/// the maximum of `max(equal, adjacent)` over the projections of the
/// primitive elements of the homogeneous lift.
pub fn monotone_catenary_with_witness(
    monoid: &AffineSemigroup,
) -> Result<(BigInt, Option<IntVector>)> {
    let hom = monoid.hom_lift()?;
    let k = monoid.dimension();
    let projected: BTreeSet<IntVector> = hom
        .primitive_elements()?
        .into_iter()
        .map(|p| IntVector::new(p.entries()[..k].to_vec()))
        .collect();
    let values: Vec<(BigInt, IntVector)> = projected
        .into_par_iter()
        .map(|m| {
            let fiber = monoid.factorizations(&m)?;
            if fiber.is_empty() {
                return Err(Error::NotAnElement(m.to_string()));
            }
            let value = equal_of_fiber(&fiber).max(adjacent_of_fiber(&fiber));
            Ok((value, m))
        })
        .collect::<Result<_>>()?;
    Ok(values
        .into_iter()
        .max()
        .map_or((BigInt::zero(), None), |(c, m)| (c, Some(m))))
}

pub fn monotone_catenary(monoid: &AffineSemigroup) -> Result<BigInt> {
    Ok(monotone_catenary_with_witness(monoid)?.0)
}

/// For half-factorial monoids the element catenary degrees all occur at
/// Betti elements; returns that value set together with 0.
pub fn catenary_values_half_factorial(monoid: &AffineSemigroup) -> Result<Vec<BigInt>> {
    if !crate::invariants::is_half_factorial(monoid)? {
        return Err(Error::InvalidArgument(
            "catenary value set requires a half-factorial monoid".into(),
        ));
    }
    let mut values: BTreeSet<BigInt> = BTreeSet::new();
    values.insert(BigInt::zero());
    for b in monoid.betti_elements()? {
        values.insert(catenary_element(monoid, b)?);
    }
    Ok(values.into_iter().collect())
}
