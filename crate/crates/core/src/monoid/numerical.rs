use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernel::IntVector;
use crate::monoid::affine::AffineSemigroup;
use crate::monoid::Factorization;

/// Largest generator for which the dense membership routines are allowed
/// to allocate residue tables.
const DENSE_LIMIT: u64 = 100_000_000;

/// A numerical semigroup: the submonoid of N generated by coprime positive
/// integers, stored through its minimal generating system `m_1 < … < m_e`.
///
/// The Apéry set of the multiplicity is computed once and reused by every
/// membership test and fast path.
#[derive(Debug)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    apery_mult: OnceLock<Vec<u64>>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`, which must be
    /// positive with gcd 1. Redundant generators are removed, so the
    /// stored system is minimal.
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "a numerical semigroup needs at least one generator".into(),
            ));
        }
        if generators.contains(&0) {
            return Err(Error::InvalidArgument(
                "generators must be positive".into(),
            ));
        }
        let mut gens: Vec<u64> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::InvalidArgument(format!(
                "generators have gcd {g}, expected 1"
            )));
        }
        if *gens.last().unwrap() > DENSE_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "generators larger than {DENSE_LIMIT} are not supported"
            )));
        }
        // drop generators representable by the others
        let mut idx = 0;
        while idx < gens.len() {
            let candidate = gens[idx];
            let others: Vec<u64> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, &g)| g)
                .collect();
            if representable(candidate, &others) {
                gens.remove(idx);
            } else {
                idx += 1;
            }
        }
        Ok(NumericalSemigroup {
            gens,
            apery_mult: OnceLock::new(),
        })
    }

    /// The minimal generating system `m_1 < … < m_e`.
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    /// Apéry set of the multiplicity, indexed by residue class mod `m_1`.
    pub(crate) fn apery_by_residue(&self) -> &[u64] {
        self.apery_mult
            .get_or_init(|| apery_table(&self.gens, self.gens[0]).expect("apery of multiplicity"))
    }

    pub fn contains(&self, x: u64) -> bool {
        let m = self.multiplicity();
        let w = self.apery_by_residue();
        x >= w[(x % m) as usize]
    }

    /// Apéry set `Ap(S, n) = { s ∈ S : s - n ∉ S }` for `n ∈ S`, `n > 0`:
    /// the least element of S in every residue class mod n, sorted
    /// ascending. Always contains 0 and has exactly n elements.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAnElement(n.to_string()));
        }
        let mut w = apery_table(&self.gens, n)?;
        w.sort_unstable();
        Ok(w)
    }

    /// Frobenius number: the largest integer not in S (−1 for S = N).
    pub fn frobenius(&self) -> i128 {
        let w = self.apery_by_residue();
        let max = *w.iter().max().unwrap();
        max as i128 - self.multiplicity() as i128
    }

    /// All factorizations of `x` over the generators, as exponent vectors.
    pub fn factorizations_raw(&self, x: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut current = vec![0u64; self.gens.len()];
        enumerate_fibers(&self.gens, 0, x, &mut current, &mut out);
        out.sort_unstable();
        out
    }

    pub fn factorizations(&self, x: u64) -> Vec<Factorization> {
        self.factorizations_raw(x)
            .into_iter()
            .map(|v| {
                Factorization::new(IntVector::new(
                    v.into_iter().map(BigInt::from).collect(),
                ))
            })
            .collect()
    }

    /// The same monoid as a 1-dimensional affine semigroup, for the
    /// general-path algorithms.
    pub fn as_affine(&self) -> AffineSemigroup {
        let gens: Vec<IntVector> = self
            .gens
            .iter()
            .map(|&g| IntVector::new(vec![BigInt::from(g)]))
            .collect();
        AffineSemigroup::from_minimal_generators(gens).expect("minimal generators are valid")
    }
}

/// Least element of the semigroup in every residue class mod `n`
/// (Dijkstra over the residue classes; edge `r → r + m_i` costs `m_i`).
fn apery_table(gens: &[u64], n: u64) -> Result<Vec<u64>> {
    if n > DENSE_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "Apéry set modulus {n} exceeds the dense limit"
        )));
    }
    let n_us = n as usize;
    let mut dist: Vec<u64> = vec![u64::MAX; n_us];
    dist[0] = 0;
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d.checked_add(g).ok_or_else(|| {
                Error::InvalidArgument("arithmetic overflow in Apéry computation".into())
            })?;
            let nr = ((r as u64 + g) % n) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

/// Is `x` a nonnegative combination of `gens`?
fn representable(x: u64, gens: &[u64]) -> bool {
    if x == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let x_us = x as usize;
    let mut dp = vec![false; x_us + 1];
    dp[0] = true;
    for v in 1..=x_us {
        for &g in gens {
            let g_us = g as usize;
            if g_us <= v && dp[v - g_us] {
                dp[v] = true;
                break;
            }
        }
    }
    dp[x_us]
}

fn enumerate_fibers(
    gens: &[u64],
    idx: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if idx == gens.len() - 1 {
        let g = gens[idx];
        if remaining % g == 0 {
            current[idx] = remaining / g;
            out.push(current.clone());
            current[idx] = 0;
        }
        return;
    }
    let g = gens[idx];
    let bound = remaining / g;
    for k in 0..=bound {
        current[idx] = k;
        enumerate_fibers(gens, idx + 1, remaining - k * g, current, out);
    }
    current[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_gcd_not_one() {
        assert!(matches!(
            NumericalSemigroup::new(&[2, 4]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn minimal_system_is_kept() {
        let s = NumericalSemigroup::new(&[10, 17, 24, 31, 43]).unwrap();
        assert_eq!(s.generators(), &[10, 17, 24, 31, 43]);
        let t = NumericalSemigroup::new(&[2, 3, 4, 5]).unwrap();
        assert_eq!(t.generators(), &[2, 3]);
    }

    #[test]
    fn apery_of_3_in_3_5_7() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 5, 7]);
    }

    #[test]
    fn apery_of_2_in_2_3() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 3]);
    }

    #[test]
    fn apery_always_contains_zero_and_has_n_elements() {
        let s = NumericalSemigroup::new(&[6, 9, 11]).unwrap();
        let ap = s.apery_set(9).unwrap();
        assert_eq!(ap.len(), 9);
        assert_eq!(ap[0], 0);
    }

    #[test]
    fn apery_of_non_element_is_rejected() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        assert!(matches!(s.apery_set(4), Err(Error::NotAnElement(_))));
        assert!(matches!(s.apery_set(0), Err(Error::NotAnElement(_))));
    }

    #[test]
    fn membership_and_frobenius() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        assert!(s.contains(0));
        assert!(!s.contains(4));
        assert!(s.contains(12));
        assert_eq!(s.frobenius(), 4);
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(n.frobenius(), -1);
    }

    #[test]
    fn factorizations_of_66() {
        let s = NumericalSemigroup::new(&[6, 9, 11]).unwrap();
        let z = s.factorizations_raw(66);
        assert_eq!(
            z,
            vec![
                vec![0, 0, 6],
                vec![1, 3, 3],
                vec![2, 6, 0],
                vec![4, 1, 3],
                vec![5, 4, 0],
                vec![8, 2, 0],
                vec![11, 0, 0],
            ]
        );
    }
}
