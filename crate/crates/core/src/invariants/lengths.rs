//! Length sets, Delta sets and the numerical dynamic-programming scans.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::IntVector;
use crate::monoid::{AffineSemigroup, NumericalSemigroup};

/// The set of factorization lengths of one element, sorted ascending.
/// Nonempty for elements of the monoid; `{0}` for the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSet {
    lengths: Vec<BigInt>,
}

impl LengthSet {
    fn from_sorted(lengths: Vec<BigInt>) -> Self {
        LengthSet { lengths }
    }

    pub fn lengths(&self) -> &[BigInt] {
        &self.lengths
    }

    pub fn min(&self) -> &BigInt {
        &self.lengths[0]
    }

    pub fn max(&self) -> &BigInt {
        self.lengths.last().unwrap()
    }

    /// Gaps between consecutive lengths (the Delta set of the element).
    pub fn deltas(&self) -> Vec<BigInt> {
        self.lengths
            .windows(2)
            .map(|w| &w[1] - &w[0])
            .collect()
    }
}

/// `L(m)`: the lengths of the factorizations of `m`.
pub fn length_set(monoid: &AffineSemigroup, m: &IntVector) -> Result<LengthSet> {
    let fiber = monoid.factorizations(m)?;
    if fiber.is_empty() {
        return Err(Error::NotAnElement(m.to_string()));
    }
    let set: BTreeSet<BigInt> = fiber.iter().map(|z| z.length()).collect();
    Ok(LengthSet::from_sorted(set.into_iter().collect()))
}

/// Width of the bitset rows for a scan up to `bound`.
fn words_for(bound: u64, multiplicity: u64) -> usize {
    (bound / multiplicity) as usize / 64 + 1
}

/// Dynamic programming over `L(v) = ∪_i (1 + L(v - m_i))`, visiting every
/// element `v <= bound` of the semigroup with the bitset of its lengths.
/// Rows are kept in a rolling window of the largest generator.
fn scan_length_bitsets(
    s: &NumericalSemigroup,
    bound: u64,
    mut visit: impl FnMut(u64, &[u64]),
) -> Result<()> {
    let gens = s.generators();
    let max_gen = *gens.last().unwrap();
    let words = words_for(bound, s.multiplicity());
    let window = (max_gen + 1) as usize;
    let cells = words
        .checked_mul(window)
        .ok_or_else(|| Error::InvalidArgument("length scan bound overflows".into()))?;
    if cells > 200_000_000 {
        return Err(Error::InvalidArgument(format!(
            "length scan needs {cells} words; bound too large"
        )));
    }
    let mut ring: Vec<Vec<u64>> = vec![vec![0u64; words]; window];
    let mut scratch = vec![0u64; words];

    for v in 0..=bound {
        let slot = (v % window as u64) as usize;
        if v == 0 {
            ring[slot].iter_mut().for_each(|w| *w = 0);
            ring[slot][0] = 1;
            visit(0, &ring[slot]);
            continue;
        }
        scratch.iter_mut().for_each(|w| *w = 0);
        let mut any = false;
        for &g in gens {
            if g > v {
                break;
            }
            let src = ((v - g) % window as u64) as usize;
            // OR in the shifted-by-one-bit row of v - g
            let mut carry = 0u64;
            for (dst, &word) in scratch.iter_mut().zip(&ring[src]) {
                let shifted = (word << 1) | carry;
                carry = word >> 63;
                if shifted != 0 {
                    any = true;
                }
                *dst |= shifted;
            }
        }
        ring[slot].copy_from_slice(&scratch);
        if any {
            visit(v, &ring[slot]);
        }
    }
    Ok(())
}

fn lengths_of_bits(bits: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let b = word.trailing_zeros() as u64;
            out.push(w as u64 * 64 + b);
            word &= word - 1;
        }
    }
    out
}

/// `L(x)` for a numerical semigroup by dynamic programming; agrees with
/// the fiber enumeration route.
pub fn length_set_numerical(s: &NumericalSemigroup, x: u64) -> Result<LengthSet> {
    let mut found: Option<Vec<u64>> = None;
    scan_length_bitsets(s, x, |v, bits| {
        if v == x {
            found = Some(lengths_of_bits(bits));
        }
    })?;
    match found {
        Some(lengths) if !lengths.is_empty() => Ok(LengthSet::from_sorted(
            lengths.into_iter().map(BigInt::from).collect(),
        )),
        _ => Err(Error::NotAnElement(x.to_string())),
    }
}

/// Delta set of one element: gaps between consecutive lengths.
pub fn delta_element(monoid: &AffineSemigroup, m: &IntVector) -> Result<Vec<BigInt>> {
    let set: BTreeSet<BigInt> = length_set(monoid, m)?.deltas().into_iter().collect();
    Ok(set.into_iter().collect())
}

/// `min Δ(M) = gcd Δ(M)`, read off a minimal presentation: the gcd of the
/// length differences of its pairs. `None` for half-factorial monoids.
pub fn delta_min(monoid: &AffineSemigroup) -> Result<Option<BigInt>> {
    let mut g = BigInt::zero();
    for pair in monoid.minimal_presentation()? {
        let diff = (pair.lhs.length() - pair.rhs.length()).abs();
        g = num_integer::Integer::gcd(&g, &diff);
    }
    Ok(if g.is_zero() { None } else { Some(g) })
}

/// `max Δ(M)`: the largest gap over the Betti elements. `None` for
/// half-factorial monoids.
pub fn delta_max(monoid: &AffineSemigroup) -> Result<Option<BigInt>> {
    let mut best: Option<BigInt> = None;
    for b in monoid.betti_elements()? {
        for d in delta_element(monoid, b)? {
            if best.as_ref().is_none_or(|m| &d > m) {
                best = Some(d);
            }
        }
    }
    Ok(best)
}

/// `min Δ(S)` through the Apéry-based minimal presentation.
pub fn delta_min_numerical(s: &NumericalSemigroup) -> Option<u64> {
    let mut g = 0u64;
    for pair in s.minimal_presentation() {
        let a: u64 = pair.lhs.length().try_into().unwrap();
        let b: u64 = pair.rhs.length().try_into().unwrap();
        g = num_integer::Integer::gcd(&g, &a.abs_diff(b));
    }
    (g != 0).then_some(g)
}

/// `max Δ(S)` over the Apéry-based Betti elements.
pub fn delta_max_numerical(s: &NumericalSemigroup) -> Option<u64> {
    let mut best: Option<u64> = None;
    for b in s.betti_elements() {
        let mut lengths: Vec<u64> = s
            .factorizations_raw(b)
            .iter()
            .map(|v| v.iter().sum())
            .collect();
        lengths.sort_unstable();
        lengths.dedup();
        for w in lengths.windows(2) {
            let d = w[1] - w[0];
            if best.is_none_or(|m| d > m) {
                best = Some(d);
            }
        }
    }
    best
}

/// Result of a bounded Delta-set scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaScan {
    /// Union of the element Delta sets up to the scan bound, ascending.
    pub deltas: Vec<u64>,
    pub scan_bound: u64,
    /// True when the caller supplied a periodicity bound and the scan
    /// reached it, so the union is the whole Delta set of the semigroup.
    pub complete: bool,
}

/// Union of `Δ(v)` over the elements `v <= scan_bound`, by the length-set
/// dynamic program. The sets of length gaps are eventually periodic, so a
/// caller who knows a periodicity bound can mark the scan complete by
/// passing it.
pub fn delta_set_numerical(
    s: &NumericalSemigroup,
    scan_bound: u64,
    periodicity_bound: Option<u64>,
) -> Result<DeltaScan> {
    let mut deltas: BTreeSet<u64> = BTreeSet::new();
    scan_length_bitsets(s, scan_bound, |_, bits| {
        let lengths = lengths_of_bits(bits);
        for w in lengths.windows(2) {
            deltas.insert(w[1] - w[0]);
        }
    })?;
    Ok(DeltaScan {
        deltas: deltas.into_iter().collect(),
        scan_bound,
        complete: periodicity_bound.is_some_and(|p| scan_bound >= p),
    })
}

/// Elasticity of one element: `max L(m) / min L(m)` as an exact rational.
pub fn elasticity_element(
    monoid: &AffineSemigroup,
    m: &IntVector,
) -> Result<num_rational::BigRational> {
    if m.is_zero() {
        return Err(Error::InvalidArgument(
            "elasticity of the identity is undefined".into(),
        ));
    }
    let lengths = length_set(monoid, m)?;
    Ok(num_rational::BigRational::new(
        lengths.max().clone(),
        lengths.min().clone(),
    ))
}

/// Elasticity of the monoid: the maximum of `|a| / |b|` over the circuits
/// `(a, b)` of the kernel congruence, 1 when no unbalanced circuit exists.
pub fn elasticity(monoid: &AffineSemigroup) -> Result<num_rational::BigRational> {
    let rows = monoid.generator_matrix()?;
    let mut best = num_rational::BigRational::one();
    for c in crate::kernel::circuits(&rows)? {
        let plus = c.positive_part().norm1();
        let minus = c.negative_part().norm1();
        if plus.is_zero() || minus.is_zero() {
            continue;
        }
        let (hi, lo) = if plus >= minus {
            (plus, minus)
        } else {
            (minus, plus)
        };
        let ratio = num_rational::BigRational::new(hi, lo);
        if ratio > best {
            best = ratio;
        }
    }
    Ok(best)
}

/// Half-factoriality: every relation in a minimal presentation preserves
/// length.
pub fn is_half_factorial(monoid: &AffineSemigroup) -> Result<bool> {
    Ok(monoid
        .minimal_presentation()?
        .iter()
        .all(|p| p.lhs.length() == p.rhs.length()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64(v)
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn length_set_of_66() {
        let s = NumericalSemigroup::new(&[6, 9, 11]).unwrap();
        let l = length_set(&s.as_affine(), &iv(&[66])).unwrap();
        assert_eq!(l.lengths(), big(&[6, 7, 8, 9, 10, 11]).as_slice());
        let dp = length_set_numerical(&s, 66).unwrap();
        assert_eq!(dp, l);
    }

    #[test]
    fn length_set_of_zero() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        let l = length_set(&s.as_affine(), &iv(&[0])).unwrap();
        assert_eq!(l.lengths(), big(&[0]).as_slice());
        assert_eq!(length_set_numerical(&s, 0).unwrap(), l);
    }

    #[test]
    fn length_set_of_77() {
        let s = NumericalSemigroup::new(&[10, 11, 23, 35]).unwrap();
        let l = length_set(&s.as_affine(), &iv(&[77])).unwrap();
        assert_eq!(l.lengths(), big(&[5, 6, 7]).as_slice());
    }

    #[test]
    fn length_set_of_non_element_errors() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        assert!(matches!(
            length_set(&s.as_affine(), &iv(&[4])),
            Err(Error::NotAnElement(_))
        ));
        assert!(matches!(
            length_set_numerical(&s, 4),
            Err(Error::NotAnElement(_))
        ));
    }

    #[test]
    fn delta_of_2_3_is_one() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        let scan = delta_set_numerical(&s, 60, None).unwrap();
        assert_eq!(scan.deltas, vec![1]);
        assert!(!scan.complete);
        let m = s.as_affine();
        assert_eq!(delta_min(&m).unwrap(), Some(BigInt::one()));
        assert_eq!(delta_max(&m).unwrap(), Some(BigInt::one()));
    }

    #[test]
    fn delta_of_free_monoid_is_empty() {
        let free = AffineSemigroup::from_generators(vec![iv(&[1, 0]), iv(&[0, 1])]).unwrap();
        assert_eq!(delta_min(&free).unwrap(), None);
        assert_eq!(delta_max(&free).unwrap(), None);
        assert!(is_half_factorial(&free).unwrap());
    }

    #[test]
    fn elasticity_of_2_3() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap().as_affine();
        let rho = elasticity(&s).unwrap();
        assert_eq!(
            rho,
            num_rational::BigRational::new(BigInt::from(3), BigInt::from(2))
        );
    }

    #[test]
    fn elasticity_element_of_12_in_2_3() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap().as_affine();
        // 12 = 6*2 = 4*3: lengths {4,5,6}
        let rho = elasticity_element(&s, &iv(&[12])).unwrap();
        assert_eq!(
            rho,
            num_rational::BigRational::new(BigInt::from(6), BigInt::from(4))
        );
    }

    #[test]
    fn free_monoid_is_half_factorial_with_elasticity_one() {
        let free = AffineSemigroup::from_generators(vec![iv(&[1, 0]), iv(&[0, 1])]).unwrap();
        assert_eq!(elasticity(&free).unwrap(), num_rational::BigRational::one());
        assert!(is_half_factorial(&free).unwrap());
    }

    #[test]
    fn plane_monoid_is_not_half_factorial() {
        let m = AffineSemigroup::from_generators(vec![
            iv(&[2, 0]),
            iv(&[0, 2]),
            iv(&[1, 1]),
            iv(&[1, 2]),
        ])
        .unwrap();
        assert!(!is_half_factorial(&m).unwrap());
    }

    #[test]
    fn lifts_are_half_factorial() {
        let s = NumericalSemigroup::new(&[10, 17, 24, 31, 43]).unwrap().as_affine();
        assert!(is_half_factorial(&s.eq_lift().unwrap()).unwrap());
        assert!(is_half_factorial(&s.hom_lift().unwrap()).unwrap());
    }
}
