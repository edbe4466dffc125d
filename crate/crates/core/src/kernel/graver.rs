//! Graver bases of integer matrices.
//!
//! `x ⊑ y` (sign-compatible componentwise domination) holds exactly when
//! `(x^+, x^-) <= (y^+, y^-)` in the product order, so the Graver basis of
//! `A` is the set of ⊑-minimal nonzero vectors of the kernel lattice
//! `ker_Z(A)`. It is computed by a normal-form completion: starting from a
//! lattice basis and its negations, sums of sign-conflicting pairs are
//! reduced modulo the current set (subtracting ⊑-smaller elements) and
//! irreducible remainders are adjoined until every pair reduces to zero;
//! the ⊑-minimal survivors are exactly the Graver basis. A breadth-first
//! search on the doubled system `[A | -A]` gives the same set but its
//! frontier grows far too quickly on the lifted monoids used by the
//! catenary-degree computations, so the completion is used throughout.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::budget;
use crate::kernel::vector::IntVector;

/// A lattice basis of `ker_Z(A) = {x : A x = 0}`.
///
/// Column-style elimination with unimodular column operations: once every
/// row has been exhausted, the transform columns that zero out the whole
/// matrix form a basis of the kernel lattice.
pub(crate) fn kernel_lattice_basis(matrix: &[IntVector]) -> Result<Vec<IntVector>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, IntVector::len);
    for row in matrix {
        if row.len() != cols {
            return Err(Error::MalformedSystem(
                "rows have inconsistent lengths".into(),
            ));
        }
    }
    // work is column-major; transform starts as the identity
    let mut work: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..rows).map(|r| matrix[r].get(j).clone()).collect())
        .collect();
    let mut transform: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut col = vec![BigInt::zero(); cols];
            col[j] = BigInt::from(1);
            col
        })
        .collect();

    let mut free = cols; // columns [0, free) are still active
    for r in 0..rows {
        loop {
            // choose the active column with the smallest nonzero entry in row r
            let Some(best) = (0..free)
                .filter(|&j| !work[j][r].is_zero())
                .min_by_key(|&j| work[j][r].abs())
            else {
                break;
            };
            let mut reduced_any = false;
            for j in 0..free {
                if j == best || work[j][r].is_zero() {
                    continue;
                }
                let q = div_round(&work[j][r], &work[best][r]);
                if !q.is_zero() {
                    for row_i in 0..rows {
                        let t = &work[best][row_i] * &q;
                        work[j][row_i] -= t;
                    }
                    for k in 0..cols {
                        let t = &transform[best][k] * &q;
                        transform[j][k] -= t;
                    }
                }
                if !work[j][r].is_zero() {
                    reduced_any = true;
                }
            }
            if !reduced_any {
                // row r now has a single nonzero active column: freeze it
                free -= 1;
                work.swap(best, free);
                transform.swap(best, free);
                break;
            }
        }
    }

    let mut basis: Vec<IntVector> = (0..free)
        .map(|j| IntVector::new(transform[j].clone()))
        .collect();
    basis.retain(|b| !b.is_zero());
    Ok(basis)
}

/// Division rounded to nearest, used to keep elimination entries small.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if r.abs() * 2 > b.abs() {
        q + 1
    } else {
        q
    }
}

struct SignedVec {
    v: Vec<BigInt>,
    pos: u128,
    neg: u128,
}

impl SignedVec {
    fn new(v: Vec<BigInt>) -> Self {
        let mut pos = 0u128;
        let mut neg = 0u128;
        for (i, x) in v.iter().enumerate().take(128) {
            if x.is_positive() {
                pos |= 1 << i;
            } else if x.is_negative() {
                neg |= 1 << i;
            }
        }
        SignedVec { v, pos, neg }
    }

    /// `self ⊑ other` given the support masks already passed the subset test.
    fn conforms_entrywise(&self, other: &[BigInt]) -> bool {
        self.v.iter().zip(other).all(|(a, b)| {
            (!a.is_negative() && !b.is_negative() && a <= b)
                || (!a.is_positive() && !b.is_positive() && a >= b)
        })
    }
}

fn sign_conflict(f: &SignedVec, g: &SignedVec) -> bool {
    f.pos & g.neg != 0 || f.neg & g.pos != 0
}

fn masks_of(v: &[BigInt]) -> (u128, u128) {
    let mut pos = 0u128;
    let mut neg = 0u128;
    for (i, x) in v.iter().enumerate().take(128) {
        if x.is_positive() {
            pos |= 1 << i;
        } else if x.is_negative() {
            neg |= 1 << i;
        }
    }
    (pos, neg)
}

/// Reduces `s` modulo `set`: repeatedly subtracts elements ⊑ s until no
/// further reduction applies. Returns the (possibly zero) remainder.
fn normal_form(mut s: Vec<BigInt>, set: &[SignedVec]) -> Vec<BigInt> {
    'outer: loop {
        if s.iter().all(Zero::is_zero) {
            return s;
        }
        let (pos, neg) = masks_of(&s);
        for g in set {
            if g.pos & !pos != 0 || g.neg & !neg != 0 {
                continue;
            }
            if g.conforms_entrywise(&s) {
                for (si, gi) in s.iter_mut().zip(&g.v) {
                    *si -= gi;
                }
                continue 'outer;
            }
        }
        return s;
    }
}

/// The Graver basis of `A`: all ⊑-minimal nonzero integer solutions of
/// `A x = 0`, one representative per `±` pair, sorted lexicographically.
pub fn graver_basis(matrix: &[IntVector]) -> Result<Vec<IntVector>> {
    let basis = kernel_lattice_basis(matrix)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut set: Vec<SignedVec> = Vec::new();
    for b in &basis {
        set.push(SignedVec::new(b.entries().to_vec()));
        set.push(SignedVec::new(b.negate().into_entries()));
    }

    // pair queue ordered by 1-norm of the sum
    let mut queue: BinaryHeap<Reverse<(BigInt, Vec<BigInt>)>> = BinaryHeap::new();
    let mut enqueued: HashSet<Vec<BigInt>> = HashSet::new();
    let push_pair = |f: &SignedVec,
                         g: &SignedVec,
                         queue: &mut BinaryHeap<Reverse<(BigInt, Vec<BigInt>)>>,
                         enqueued: &mut HashSet<Vec<BigInt>>| {
        if !sign_conflict(f, g) {
            return;
        }
        let sum: Vec<BigInt> = f.v.iter().zip(&g.v).map(|(a, b)| a + b).collect();
        if sum.iter().all(Zero::is_zero) {
            return;
        }
        if enqueued.insert(sum.clone()) {
            let norm: BigInt = sum.iter().map(|x| x.abs()).sum();
            queue.push(Reverse((norm, sum)));
        }
    };

    for i in 0..set.len() {
        for j in i + 1..set.len() {
            push_pair(&set[i], &set[j], &mut queue, &mut enqueued);
        }
    }

    while let Some(Reverse((_, s))) = queue.pop() {
        budget::consume()?;
        let r = normal_form(s, &set);
        if r.iter().all(Zero::is_zero) {
            continue;
        }
        let rv = SignedVec::new(r);
        for g in &set {
            push_pair(&rv, g, &mut queue, &mut enqueued);
        }
        set.push(rv);
    }

    // keep the ⊑-minimal elements only
    let mut minimal: Vec<IntVector> = Vec::new();
    for (i, g) in set.iter().enumerate() {
        let reducible = set.iter().enumerate().any(|(j, h)| {
            j != i
                && h.pos & !g.pos == 0
                && h.neg & !g.neg == 0
                && h.conforms_entrywise(&g.v)
        });
        if !reducible {
            minimal.push(IntVector::new(g.v.clone()).sign_normalized());
        }
    }
    minimal.sort_by(|a, b| a.lex_cmp(b));
    minimal.dedup();
    Ok(minimal)
}
