//! Minimal factorizations in principal ideals.
//!
//! `Minimals_≤ Z(m + M)` drives both the tame degree and ω-primality. The
//! general route solves `φ(x) = m + φ(x')` in 2e unknowns and projects the
//! minimal solutions to the first e coordinates; for full (equation
//! defined) semigroups, membership of `φ(x) - m` reduces to componentwise
//! inequalities, so the system `φ(x) - s = m` with slack unknowns is
//! solved instead.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{minimalize, solve_system, IntVector, LinearSystem};
use crate::monoid::affine::{generator_matrix_of, AffineSemigroup};
use crate::monoid::numerical::NumericalSemigroup;
use crate::monoid::Factorization;

/// Componentwise-minimal nonnegative `x` with `Σ x_j g_j >= m` (columns
/// `g_j`, all nonnegative). Breadth-first deficit-guided search: a node
/// with an uncovered row extends only by columns positive on the first
/// such row, so every step strictly shrinks the total deficit.
fn minimal_covers(atoms: &[IntVector], m: &IntVector) -> Vec<IntVector> {
    let e = atoms.len();
    let k = m.len();
    let zero = vec![0u32; e];
    let deficit_of = |x: &[u32]| -> Vec<BigInt> {
        (0..k)
            .map(|r| {
                let mut covered = BigInt::zero();
                for (j, g) in atoms.iter().enumerate() {
                    if x[j] > 0 {
                        covered += g.get(r) * BigInt::from(x[j]);
                    }
                }
                let want = m.get(r) - covered;
                if want.is_zero() || want < BigInt::zero() {
                    BigInt::zero()
                } else {
                    want
                }
            })
            .collect()
    };

    let mut minimal: Vec<Vec<u32>> = Vec::new();
    let dominated = |minimal: &[Vec<u32>], x: &[u32]| {
        minimal
            .iter()
            .any(|b| b.iter().zip(x).all(|(a, c)| a <= c))
    };

    let mut frontier: Vec<Vec<u32>> = vec![zero];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    while !frontier.is_empty() {
        let mut next: Vec<Vec<u32>> = Vec::new();
        // solutions of this level first, then expansion
        let mut level: Vec<(Vec<u32>, Vec<BigInt>)> = frontier
            .into_iter()
            .map(|x| {
                let d = deficit_of(&x);
                (x, d)
            })
            .collect();
        level.sort();
        for (x, deficit) in &level {
            if deficit.iter().all(Zero::is_zero) && !dominated(&minimal, x) {
                minimal.push(x.clone());
            }
        }
        for (x, deficit) in &level {
            let Some(row) = deficit.iter().position(|d| !d.is_zero()) else {
                continue;
            };
            for (j, g) in atoms.iter().enumerate() {
                if g.get(row).is_zero() {
                    continue;
                }
                let mut child = x.clone();
                child[j] += 1;
                if dominated(&minimal, &child) || !seen.insert(child.clone()) {
                    continue;
                }
                next.push(child);
            }
        }
        frontier = next;
    }

    minimal.sort();
    minimal
        .into_iter()
        .map(|x| IntVector::new(x.into_iter().map(BigInt::from).collect()))
        .collect()
}

impl AffineSemigroup {
    /// The minimal factorizations of the principal ideal `m + M`:
    /// `Minimals_≤ { x : φ(x) ∈ m + M }`.
    pub fn principal_ideal_minimal_factorizations(
        &self,
        m: &IntVector,
    ) -> Result<Vec<Factorization>> {
        if m.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: m.len(),
            });
        }
        let atoms = self.minimal_generators()?;
        let e = atoms.len();
        let k = self.dimension();
        let rows_gen = generator_matrix_of(k, atoms);

        if self.is_full() {
            // membership of φ(x) - m reduces to componentwise inequalities,
            // which is only valid for m in the monoid
            if !self.contains(m)? {
                return Err(Error::NotAnElement(m.to_string()));
            }
            return Ok(minimal_covers(atoms, m)
                .into_iter()
                .map(Factorization::new)
                .collect());
        }

        // φ(x) - φ(x') = m over 2e unknowns
        let rows: Vec<IntVector> = (0..k)
            .map(|r| {
                let mut entries = rows_gen[r].entries().to_vec();
                entries.extend(rows_gen[r].entries().iter().map(|c| -c));
                IntVector::new(entries)
            })
            .collect();
        let sys = LinearSystem::new(rows, m.clone())?;
        let solution = solve_system(&sys)?;
        let projected: Vec<IntVector> = solution
            .inhomogeneous
            .iter()
            .map(|v| IntVector::new(v.entries()[..e].to_vec()))
            .collect();
        Ok(minimalize(projected)
            .into_iter()
            .map(Factorization::new)
            .collect())
    }
}

impl NumericalSemigroup {
    pub fn principal_ideal_minimal_factorizations(&self, m: u64) -> Result<Vec<Factorization>> {
        self.as_affine()
            .principal_ideal_minimal_factorizations(&IntVector::new(vec![BigInt::from(m)]))
    }
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
    fn minimals_of_2_0_plus_plane_monoid() {
        let m = plane_monoid();
        let minimals = m
            .principal_ideal_minimal_factorizations(&iv(&[2, 0]))
            .unwrap();
        let expected: Vec<Factorization> = [
            iv(&[0, 0, 0, 2]),
            iv(&[0, 0, 2, 0]),
            iv(&[1, 0, 0, 0]),
        ]
        .into_iter()
        .map(Factorization::new)
        .collect();
        assert_eq!(minimals, expected);
        // their images
        let images: Vec<IntVector> = minimals
            .iter()
            .map(|f| m.apply(f.exponents()).unwrap())
            .collect();
        assert_eq!(images, vec![iv(&[2, 4]), iv(&[2, 2]), iv(&[2, 0])]);
    }

    #[test]
    fn minimals_of_zero_is_zero_factorization() {
        let m = plane_monoid();
        let minimals = m
            .principal_ideal_minimal_factorizations(&iv(&[0, 0]))
            .unwrap();
        assert_eq!(minimals, vec![Factorization::new(iv(&[0, 0, 0, 0]))]);
    }

    #[test]
    fn full_monoid_shortcut_matches_general_path() {
        // block monoid of Z_2^2: generators (0,0,2),(0,2,0),(1,1,1),(2,0,0)
        let full = AffineSemigroup::from_equations(
            vec![iv(&[0, 1, 1]), iv(&[1, 0, 1])],
            vec![Some(BigInt::from(2)), Some(BigInt::from(2))],
        )
        .unwrap();
        let via_full = full
            .principal_ideal_minimal_factorizations(&iv(&[0, 0, 2]))
            .unwrap();
        let generators = full.minimal_generators().unwrap().to_vec();
        let free = AffineSemigroup::from_minimal_generators(generators).unwrap();
        let via_general = free
            .principal_ideal_minimal_factorizations(&iv(&[0, 0, 2]))
            .unwrap();
        assert_eq!(via_full, via_general);
        assert!(!via_full.is_empty());
    }
}
