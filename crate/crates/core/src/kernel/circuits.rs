//! Circuits of an integer matrix: the kernel vectors with minimal support,
//! computed from signed maximal minors and normalized to primitive vectors.

use std::collections::BTreeSet;

use rayon::prelude::*;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::vector::IntVector;

/// Exact determinant by fraction-free (Bareiss) elimination. Entries that
/// fit machine words run on checked `i128` arithmetic and fall back to the
/// arbitrary-precision route on any overflow.
fn determinant(m: Vec<Vec<BigInt>>) -> BigInt {
    let small: Option<Vec<Vec<i128>>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| i128::try_from(x).ok())
                .collect::<Option<Vec<i128>>>()
        })
        .collect();
    if let Some(small) = small {
        if let Some(det) = determinant_i128(small) {
            return BigInt::from(det);
        }
    }
    determinant_big(m)
}

fn determinant_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j]
                    .checked_mul(m[k][k])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign.checked_mul(m[n - 1][n - 1])
}

fn determinant_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Row indices of a maximal linearly independent set of rows (the rank is
/// the returned length). Fraction-free row elimination over the integers.
fn row_basis(matrix: &[IntVector]) -> Vec<usize> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, IntVector::len);
    let mut work: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.entries().to_vec()).collect();
    let mut row_of: Vec<usize> = (0..rows).collect();
    let mut basis = Vec::new();
    let mut pivot_row = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(r) = (pivot_row..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivot_row, r);
        row_of.swap(pivot_row, r);
        for i in pivot_row + 1..rows {
            for j in col + 1..cols {
                let num = &work[i][j] * &work[pivot_row][col] - &work[i][col] * &work[pivot_row][j];
                work[i][j] = num / &prev;
            }
            work[i][col] = BigInt::zero();
        }
        prev = work[pivot_row][col].clone();
        basis.push(row_of[pivot_row]);
        pivot_row += 1;
    }
    basis.sort_unstable();
    basis
}

fn content(entries: &[BigInt]) -> BigInt {
    entries
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// All circuits of `A`, one representative per `±` pair, each divided by
/// its content, sorted lexicographically.
///
/// For every `(r+1)`-subset of columns (`r` = rank of `A`) the vector of
/// alternating-sign `r×r` minors spans the kernel of the restricted matrix
/// when that kernel is one-dimensional; such vectors are exactly the
/// minimal-support kernel vectors of `A`.
pub fn circuits(matrix: &[IntVector]) -> Result<Vec<IntVector>> {
    let cols = matrix.first().map_or(0, IntVector::len);
    for row in matrix {
        if row.len() != cols {
            return Err(Error::MalformedSystem(
                "rows have inconsistent lengths".into(),
            ));
        }
    }
    let basis_rows = row_basis(matrix);
    let rank = basis_rows.len();
    if cols < rank + 1 {
        return Ok(Vec::new());
    }

    let subsets = column_subsets(cols, rank + 1);
    let seen = subsets
        .par_iter()
        .fold(BTreeSet::new, |mut acc: BTreeSet<IntVector>, subset| {
            // signed minors of the (rank) x (rank+1) submatrix on `subset`
            let mut entries = vec![BigInt::zero(); cols];
            let mut all_zero = true;
            for (t, &col_t) in subset.iter().enumerate() {
                let minor: Vec<Vec<BigInt>> = basis_rows
                    .iter()
                    .map(|&r| {
                        subset
                            .iter()
                            .filter(|&&c| c != col_t)
                            .map(|&c| matrix[r].get(c).clone())
                            .collect()
                    })
                    .collect();
                let det = determinant(minor);
                if !det.is_zero() {
                    all_zero = false;
                }
                entries[col_t] = if t % 2 == 0 { det } else { -det };
            }
            if !all_zero {
                let c = content(&entries);
                let normalized: Vec<BigInt> = entries.iter().map(|x| x / &c).collect();
                acc.insert(IntVector::new(normalized).sign_normalized());
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(seen.into_iter().collect())
}

fn column_subsets(cols: usize, size: usize) -> Vec<Vec<usize>> {
    let mut subsets = Vec::new();
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        subsets.push(subset.clone());
        let mut i = size;
        loop {
            if i == 0 {
                return subsets;
            }
            i -= 1;
            if subset[i] != i + cols - size {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..size {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64(v)
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            determinant(vec![vec![BigInt::from(2)]]),
            BigInt::from(2)
        );
        assert_eq!(
            determinant(vec![
                vec![BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(3), BigInt::from(4)],
            ]),
            BigInt::from(-2)
        );
        assert_eq!(
            determinant(vec![
                vec![BigInt::from(0), BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(1), BigInt::from(0), BigInt::from(3)],
                vec![BigInt::from(4), BigInt::from(5), BigInt::from(0)],
            ]),
            BigInt::from(22)
        );
    }

    #[test]
    fn circuits_of_numerical_pair() {
        let c = circuits(&[iv(&[2, 3])]).unwrap();
        assert_eq!(c, vec![iv(&[3, -2])]);
    }

    #[test]
    fn circuits_of_symmetric_pair() {
        let c = circuits(&[iv(&[1, 1])]).unwrap();
        assert_eq!(c, vec![iv(&[1, -1])]);
    }

    #[test]
    fn circuits_of_plane_monoid_contain_expected_support() {
        let c = circuits(&[iv(&[2, 0, 1, 1]), iv(&[0, 2, 1, 2])]).unwrap();
        let expected = iv(&[1, 1, -2, 0]);
        assert!(c.contains(&expected), "missing {expected} in {c:?}");
    }

    #[test]
    fn circuits_of_zero_rank_matrix_are_units() {
        let c = circuits(&[iv(&[0, 0])]).unwrap();
        assert_eq!(c, vec![iv(&[0, 1]), iv(&[1, 0])]);
    }
}
