//! Bounded completion over the nonnegative integers.
//!
//! The engine below is a breadth-first completion in the style of
//! Contejean and Devie: starting from the unit vectors, a node `t` is
//! extended by `e_i` only when the defect `A·t` has negative scalar product
//! with column `i`, nodes dominating an already-found minimal solution are
//! pruned, and solutions are collected level by level (level = coordinate
//! sum). The procedure terminates with exactly the componentwise-minimal
//! nonzero solutions of `A x = 0`, i.e. the Hilbert basis of the solution
//! monoid. Alternative completion strategies (e.g. project-and-lift) could
//! be dropped in behind the same entry points.
//!
//! Inhomogeneous systems are homogenized with one extra unknown carrying
//! `-b` as its column; minimal solutions with value 1 there are the minimal
//! solutions of `A x = b`, value 0 gives the Hilbert basis, and larger
//! values are discarded. Congruence rows are lifted to plain equations
//! first (see `LinearSystem::lifted_columns`), and the auxiliary
//! coordinates are projected away at the end, re-minimalizing the result.
//!
//! Node multiplicities are kept as `u32` with checked increments; defects
//! are exact `BigInt` vectors updated incrementally, so no intermediate
//! value is ever truncated.

use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::budget;
use crate::kernel::system::{LinearSystem, SolutionSet};
use crate::kernel::vector::{minimalize, IntVector};

type Node = Vec<u32>;

fn support_mask(node: &Node) -> u128 {
    let mut mask = 0u128;
    for (i, &x) in node.iter().enumerate().take(128) {
        if x != 0 {
            mask |= 1u128 << i;
        }
    }
    mask
}

fn le(a: &Node, b: &Node) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

struct MinimalSet {
    items: Vec<(Node, u128)>,
}

impl MinimalSet {
    fn new() -> Self {
        MinimalSet { items: Vec::new() }
    }

    /// True when some stored vector is componentwise <= `node`.
    fn dominates(&self, node: &Node, mask: u128) -> bool {
        self.items
            .iter()
            .any(|(b, bm)| bm & !mask == 0 && le(b, node))
    }

    fn insert(&mut self, node: Node) {
        let mask = support_mask(&node);
        self.items.push((node, mask));
    }
}

/// Hilbert basis of `A x = 0` for a matrix given by its columns.
///
/// Returns the minimal nonzero solutions as raw multiplicity vectors.
pub(crate) fn complete_homogeneous(cols: &[Vec<BigInt>], rows: usize) -> Result<Vec<Node>> {
    let n = cols.len();
    let mut basis = MinimalSet::new();
    let mut frontier: HashMap<Node, Vec<BigInt>> = HashMap::new();
    for i in 0..n {
        let mut node = vec![0u32; n];
        node[i] = 1;
        frontier.insert(node, cols[i].clone());
    }
    let zero_defect = |d: &Vec<BigInt>| d.iter().all(Zero::is_zero);

    while !frontier.is_empty() {
        // Collect this level's solutions first so that expansion prunes
        // against every solution of norm <= level.
        let mut found: Vec<Node> = frontier
            .iter()
            .filter(|(_, d)| zero_defect(d))
            .map(|(t, _)| t.clone())
            .collect();
        found.sort_unstable();
        for t in found {
            let mask = support_mask(&t);
            if !basis.dominates(&t, mask) {
                basis.insert(t);
            }
        }

        let mut next: HashMap<Node, Vec<BigInt>> = HashMap::new();
        for (t, defect) in &frontier {
            if zero_defect(defect) {
                continue;
            }
            for (i, col) in cols.iter().enumerate() {
                let ip: BigInt = defect.iter().zip(col).map(|(d, c)| d * c).sum();
                if ip.sign() != Sign::Minus {
                    continue;
                }
                budget::consume()?;
                let mut child = t.clone();
                child[i] = child[i].checked_add(1).expect("node multiplicity overflow");
                if next.contains_key(&child) {
                    continue;
                }
                let mask = support_mask(&child);
                if basis.dominates(&child, mask) {
                    continue;
                }
                let mut child_defect = defect.clone();
                for (d, c) in child_defect.iter_mut().zip(col) {
                    *d += c;
                }
                next.insert(child, child_defect);
            }
        }
        frontier = next;
    }

    let _ = rows;
    let mut out: Vec<Node> = basis.items.into_iter().map(|(node, _)| node).collect();
    out.sort_unstable();
    Ok(out)
}

fn node_to_vector(node: &Node, take: usize) -> IntVector {
    IntVector::new(node.iter().take(take).map(|&x| BigInt::from(x)).collect())
}

/// Exact decomposition of the nonnegative solutions of `sys`.
///
/// The inhomogeneous part holds the componentwise-minimal solutions of
/// `A x = b` (just `{0}` when `b = 0`), the homogeneous part the Hilbert
/// basis of `A x = 0`. An unsolvable system yields an empty inhomogeneous
/// part; that is not an error.
pub fn solve_system(sys: &LinearSystem) -> Result<SolutionSet> {
    let (mut cols, n_orig) = sys.lifted_columns();
    let m = sys.rows();
    let rhs_col: Vec<BigInt> = (0..m).map(|r| -sys.rhs().get(r)).collect();
    cols.push(rhs_col);
    let z_index = cols.len() - 1;

    let raw = complete_homogeneous(&cols, m)?;

    let mut inhom: Vec<IntVector> = Vec::new();
    let mut hom: Vec<IntVector> = Vec::new();
    for node in &raw {
        let x = node_to_vector(node, n_orig);
        match node[z_index] {
            0 => {
                if !x.is_zero() {
                    hom.push(x);
                }
            }
            1 => inhom.push(x),
            _ => {}
        }
    }
    Ok(SolutionSet {
        inhomogeneous: minimalize(inhom),
        homogeneous: minimalize(hom),
    })
}

/// Hilbert basis of `A x = 0`, rows optionally read as congruences.
///
/// `moduli` may be empty (all rows plain equations) or hold one optional
/// modulus per row. The result is the unique minimal generating set of the
/// monoid of nonnegative solutions, sorted lexicographically.
pub fn hilbert_basis(matrix: &[IntVector], moduli: &[Option<BigInt>]) -> Result<Vec<IntVector>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, IntVector::len);
    let moduli = if moduli.is_empty() {
        vec![None; rows]
    } else {
        moduli.to_vec()
    };
    let sys = LinearSystem::with_moduli(matrix.to_vec(), IntVector::zeros(rows), moduli)?;
    let (lifted, n_orig) = sys.lifted_columns();
    let raw = complete_homogeneous(&lifted, rows)?;
    let mut out: Vec<IntVector> = raw
        .iter()
        .map(|node| node_to_vector(node, n_orig))
        .filter(|x| !x.is_zero())
        .collect();
    out = minimalize(out);
    let _ = cols;
    Ok(out)
}

/// All nonnegative solutions of `A x = b`, which must be finitely many.
///
/// Errors with [`Error::InfiniteFiber`] when the homogeneous system has a
/// nonzero solution. An empty result just means `b` is not reachable.
pub fn enumerate_bounded(sys: &LinearSystem) -> Result<Vec<IntVector>> {
    let n = sys.cols();
    let all_nonneg = sys
        .matrix()
        .iter()
        .all(|row| row.entries().iter().all(|x| !x.is_negative()));
    let no_zero_column = (0..n).all(|j| sys.matrix().iter().any(|row| !row.get(j).is_zero()));

    if !sys.has_moduli() && all_nonneg && no_zero_column {
        return enumerate_nonneg(sys);
    }

    let decomposition = solve_system(sys)?;
    if !decomposition.homogeneous.is_empty() {
        return Err(Error::InfiniteFiber);
    }
    Ok(decomposition.inhomogeneous)
}

/// Direct bounded enumeration for systems with nonnegative matrices whose
/// columns are all nonzero; every unknown is then bounded by the right-hand
/// side and the solution set is finite.
fn enumerate_nonneg(sys: &LinearSystem) -> Result<Vec<IntVector>> {
    let n = sys.cols();
    let m = sys.rows();
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..m).map(|r| sys.matrix()[r].get(j).clone()).collect())
        .collect();
    let mut remaining: Vec<BigInt> = (0..m).map(|r| sys.rhs().get(r).clone()).collect();
    let mut current = vec![BigInt::zero(); n];
    let mut out: Vec<IntVector> = Vec::new();

    fn recurse(
        cols: &[Vec<BigInt>],
        idx: usize,
        remaining: &mut Vec<BigInt>,
        current: &mut Vec<BigInt>,
        out: &mut Vec<IntVector>,
    ) {
        if remaining.iter().any(Signed::is_negative) {
            return;
        }
        if idx == cols.len() {
            if remaining.iter().all(Zero::is_zero) {
                out.push(IntVector::new(current.clone()));
            }
            return;
        }
        // try x_idx = 0, 1, ... while every row stays nonnegative
        let mut steps = BigInt::zero();
        loop {
            recurse(cols, idx + 1, remaining, current, out);
            let fits = remaining
                .iter()
                .zip(&cols[idx])
                .all(|(rem, c)| rem >= c);
            if !fits {
                break;
            }
            for (rem, c) in remaining.iter_mut().zip(&cols[idx]) {
                *rem -= c;
            }
            steps += 1;
            current[idx] = steps.clone();
        }
        // undo
        for (rem, c) in remaining.iter_mut().zip(&cols[idx]) {
            *rem += c.clone() * &steps;
        }
        current[idx] = BigInt::zero();
    }

    recurse(&cols, 0, &mut remaining, &mut current, &mut out);
    out.sort_by(|a, b| a.lex_cmp(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::vector::IntVector;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64(v)
    }

    fn ivs(vs: &[&[i64]]) -> Vec<IntVector> {
        vs.iter().map(|v| IntVector::from_i64(v)).collect()
    }

    #[test]
    fn hilbert_of_diagonal_kernel() {
        let basis = hilbert_basis(&[iv(&[1, -1])], &[]).unwrap();
        assert_eq!(basis, ivs(&[&[1, 1]]));
    }

    #[test]
    fn hilbert_of_block_monoid_z2_squared() {
        // columns (0,1),(1,0),(1,1), both rows mod 2
        let basis = hilbert_basis(
            &[iv(&[0, 1, 1]), iv(&[1, 0, 1])],
            &[Some(BigInt::from(2)), Some(BigInt::from(2))],
        )
        .unwrap();
        assert_eq!(
            basis,
            ivs(&[&[0, 0, 2], &[0, 2, 0], &[1, 1, 1], &[2, 0, 0]])
        );
    }

    #[test]
    fn trivial_kernel_yields_zero_inhomogeneous_solution() {
        let sys = LinearSystem::new(vec![iv(&[1])], iv(&[0])).unwrap();
        let sol = solve_system(&sys).unwrap();
        assert_eq!(sol.inhomogeneous, ivs(&[&[0]]));
        assert!(sol.homogeneous.is_empty());
    }

    #[test]
    fn principal_ideal_solution_set() {
        // factorizations of (2,0) + M for M = <(2,0),(0,2),(1,1),(1,2)>
        let sys = LinearSystem::new(
            vec![iv(&[2, 0, 1, 1, -2, 0, -1, -1]), iv(&[0, 2, 1, 2, 0, -2, -1, -2])],
            iv(&[2, 0]),
        )
        .unwrap();
        let sol = solve_system(&sys).unwrap();
        let expected_inhom = ivs(&[
            &[0, 0, 0, 2, 0, 2, 0, 0],
            &[0, 0, 2, 0, 0, 1, 0, 0],
            &[0, 0, 4, 0, 0, 0, 0, 2],
            &[1, 0, 0, 0, 0, 0, 0, 0],
        ]);
        assert_eq!(sol.inhomogeneous, expected_inhom);
        let expected_hom = {
            let mut h = ivs(&[
                &[1, 0, 0, 2, 0, 0, 4, 0],
                &[0, 0, 4, 0, 1, 0, 0, 2],
                &[1, 2, 0, 0, 0, 0, 0, 2],
                &[0, 0, 1, 0, 0, 0, 1, 0],
                &[0, 0, 0, 1, 0, 0, 0, 1],
                &[0, 1, 2, 0, 0, 0, 0, 2],
                &[0, 0, 2, 0, 1, 1, 0, 0],
                &[0, 1, 0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 2, 1, 2, 0, 0],
                &[1, 0, 0, 0, 1, 0, 0, 0],
                &[1, 1, 0, 0, 0, 0, 2, 0],
                &[0, 0, 0, 2, 0, 1, 2, 0],
            ]);
            h.sort_by(|a, b| a.lex_cmp(b));
            h
        };
        assert_eq!(sol.homogeneous, expected_hom);
    }

    #[test]
    fn factorizations_of_66_are_reconstructible() {
        let sys = LinearSystem::new(vec![iv(&[6, 9, 11])], iv(&[66])).unwrap();
        let sol = solve_system(&sys).unwrap();
        assert!(sol.homogeneous.is_empty());
        assert_eq!(sol.inhomogeneous.len(), 7);
        let fiber = enumerate_bounded(&sys).unwrap();
        assert_eq!(sol.inhomogeneous, fiber);
    }

    #[test]
    fn enumerate_fiber_of_66() {
        let sys = LinearSystem::new(vec![iv(&[6, 9, 11])], iv(&[66])).unwrap();
        let fiber = enumerate_bounded(&sys).unwrap();
        let expected = {
            let mut f = ivs(&[
                &[0, 0, 6],
                &[1, 3, 3],
                &[2, 6, 0],
                &[4, 1, 3],
                &[5, 4, 0],
                &[8, 2, 0],
                &[11, 0, 0],
            ]);
            f.sort_by(|a, b| a.lex_cmp(b));
            f
        };
        assert_eq!(fiber, expected);
    }

    #[test]
    fn enumerate_fiber_of_77() {
        let sys = LinearSystem::new(vec![iv(&[10, 11, 23, 35])], iv(&[77])).unwrap();
        let fiber = enumerate_bounded(&sys).unwrap();
        let expected = {
            let mut f = ivs(&[&[0, 7, 0, 0], &[1, 4, 1, 0], &[2, 1, 2, 0], &[2, 2, 0, 1]]);
            f.sort_by(|a, b| a.lex_cmp(b));
            f
        };
        assert_eq!(fiber, expected);
    }

    #[test]
    fn enumerate_missing_element_is_empty() {
        let sys = LinearSystem::new(vec![iv(&[3, 5, 7])], iv(&[2])).unwrap();
        assert!(enumerate_bounded(&sys).unwrap().is_empty());
    }

    #[test]
    fn enumerate_detects_infinite_fiber() {
        let sys = LinearSystem::new(vec![iv(&[1, -1])], iv(&[0])).unwrap();
        assert_eq!(enumerate_bounded(&sys), Err(Error::InfiniteFiber));
    }

    #[test]
    fn solutions_satisfy_their_system() {
        let sys = LinearSystem::with_moduli(
            vec![iv(&[2, -1, 3]), iv(&[1, 1, 1])],
            iv(&[1, 3]),
            vec![None, Some(BigInt::from(3))],
        )
        .unwrap();
        let sol = solve_system(&sys).unwrap();
        for x in &sol.inhomogeneous {
            assert!(sys.satisfied_by(x).unwrap());
        }
        let hom_sys = LinearSystem::with_moduli(
            sys.matrix().to_vec(),
            iv(&[0, 0]),
            sys.moduli().to_vec(),
        )
        .unwrap();
        for x in &sol.homogeneous {
            assert!(hom_sys.satisfied_by(x).unwrap());
        }
    }
}
