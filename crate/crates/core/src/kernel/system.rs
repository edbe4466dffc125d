use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::vector::IntVector;

/// A system of linear equations `A x = b` over the nonnegative integers,
/// where individual rows may instead be congruences `(row · x - b_r) ≡ 0 (mod d_r)`.
///
/// Rows are stored as vectors; columns correspond to unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: Vec<IntVector>,
    rhs: IntVector,
    moduli: Vec<Option<BigInt>>,
}

impl LinearSystem {
    /// Builds a system of plain equations `A x = b`.
    pub fn new(matrix: Vec<IntVector>, rhs: IntVector) -> Result<Self> {
        let rows = matrix.len();
        Self::with_moduli(matrix, rhs, vec![None; rows])
    }

    /// Builds a homogeneous system `A x = 0`.
    pub fn homogeneous(matrix: Vec<IntVector>) -> Result<Self> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, IntVector::len);
        let _ = cols;
        Self::new(matrix, IntVector::zeros(rows))
    }

    /// Builds a system where row `r` is a congruence modulo `moduli[r]` when
    /// that entry is present (each modulus must be at least 2).
    pub fn with_moduli(
        matrix: Vec<IntVector>,
        rhs: IntVector,
        moduli: Vec<Option<BigInt>>,
    ) -> Result<Self> {
        let rows = matrix.len();
        if rhs.len() != rows {
            return Err(Error::MalformedSystem(format!(
                "rhs has {} entries for {} rows",
                rhs.len(),
                rows
            )));
        }
        if moduli.len() != rows {
            return Err(Error::MalformedSystem(format!(
                "moduli list has {} entries for {} rows",
                moduli.len(),
                rows
            )));
        }
        let cols = matrix.first().map_or(0, IntVector::len);
        for row in &matrix {
            if row.len() != cols {
                return Err(Error::MalformedSystem(
                    "rows have inconsistent lengths".into(),
                ));
            }
        }
        for d in moduli.iter().flatten() {
            if *d < BigInt::from(2) {
                return Err(Error::MalformedSystem(format!(
                    "modulus {d} is smaller than 2"
                )));
            }
        }
        Ok(LinearSystem {
            matrix,
            rhs,
            moduli,
        })
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.first().map_or(0, IntVector::len)
    }

    pub fn matrix(&self) -> &[IntVector] {
        &self.matrix
    }

    pub fn rhs(&self) -> &IntVector {
        &self.rhs
    }

    pub fn moduli(&self) -> &[Option<BigInt>] {
        &self.moduli
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rhs.is_zero()
    }

    pub fn has_moduli(&self) -> bool {
        self.moduli.iter().any(Option::is_some)
    }

    /// Exact satisfaction check, honouring congruence rows.
    pub fn satisfied_by(&self, x: &IntVector) -> Result<bool> {
        if x.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                got: x.len(),
            });
        }
        for (r, row) in self.matrix.iter().enumerate() {
            let lhs = row.dot(x)?;
            let diff = lhs - self.rhs.get(r);
            match &self.moduli[r] {
                None => {
                    if !diff.is_zero() {
                        return Ok(false);
                    }
                }
                Some(d) => {
                    if !diff.mod_floor(d).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Column-major view of the matrix after eliminating congruence rows.
    ///
    /// Every congruence row modulo `d` gets a pair of auxiliary unknowns with
    /// coefficients `-d` and `+d` on that row, turning the congruence into a
    /// plain equation over the nonnegative integers. Returns the columns and
    /// the number of original unknowns (auxiliary columns come last).
    pub(crate) fn lifted_columns(&self) -> (Vec<Vec<BigInt>>, usize) {
        let n = self.cols();
        let m = self.rows();
        let mut cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| (0..m).map(|r| self.matrix[r].get(j).clone()).collect())
            .collect();
        for (r, d) in self.moduli.iter().enumerate() {
            if let Some(d) = d {
                let mut minus = vec![BigInt::zero(); m];
                minus[r] = -d.clone();
                let mut plus = vec![BigInt::zero(); m];
                plus[r] = d.clone();
                cols.push(minus);
                cols.push(plus);
            }
        }
        (cols, n)
    }
}

/// The decomposition of the nonnegative solutions of a linear system:
/// every solution of `A x = b` is one inhomogeneous element plus a
/// nonnegative integer combination of homogeneous elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// The componentwise-minimal nonnegative solutions of `A x = b`.
    pub inhomogeneous: Vec<IntVector>,
    /// The Hilbert basis of `A x = 0`.
    pub homogeneous: Vec<IntVector>,
}
