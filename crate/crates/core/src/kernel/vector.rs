use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A fixed-length vector of arbitrary-precision integers.
///
/// Used both for nonnegative exponent vectors (factorizations, Hilbert basis
/// elements) and for signed lattice vectors (Graver basis elements, circuits).
/// Arithmetic is only defined between vectors of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector {
    entries: Vec<BigInt>,
}

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector { entries }
    }

    pub fn zeros(len: usize) -> Self {
        IntVector {
            entries: vec![BigInt::zero(); len],
        }
    }

    /// Standard unit vector `e_i` of the given length.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.entries[i] = BigInt::from(1);
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector {
            entries: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    /// Coordinate sum. For a factorization this is its length `|x|`.
    pub fn norm1(&self) -> BigInt {
        self.entries.iter().map(|x| x.abs()).sum()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(IntVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(IntVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Componentwise minimum; for factorizations the common part `x ∧ y`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(IntVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        })
    }

    pub fn dot(&self, other: &Self) -> Result<BigInt> {
        self.check_len(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a <= b)
    }

    /// Positive part `x^+` (negative entries clamped to zero).
    pub fn positive_part(&self) -> Self {
        IntVector {
            entries: self
                .entries
                .iter()
                .map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() })
                .collect(),
        }
    }

    /// Negative part `x^-`, so that `x = x^+ - x^-` with disjoint supports.
    pub fn negative_part(&self) -> Self {
        IntVector {
            entries: self
                .entries
                .iter()
                .map(|x| if x.is_negative() { -x } else { BigInt::zero() })
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        IntVector {
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// Sign-compatible componentwise domination: `self ⊑ other` holds when
    /// `self_i * other_i >= 0` and `|self_i| <= |other_i|` for every i.
    /// Equivalent to `(s^+, s^-) <= (o^+, o^-)` in the usual product order.
    pub fn conforms_to(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| {
                (!a.is_negative() && !b.is_negative() && a <= b)
                    || (!a.is_positive() && !b.is_positive() && a >= b)
            })
    }

    /// Canonical sign: flips the vector if its first nonzero entry is negative.
    pub fn sign_normalized(&self) -> Self {
        match self.entries.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => self.negate(),
            _ => self.clone(),
        }
    }

    /// Lexicographic comparison (entrywise, first difference decides).
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(entries: Vec<BigInt>) -> Self {
        IntVector { entries }
    }
}

/// Keeps only the componentwise-minimal vectors of a set of nonnegative
/// vectors. The result is sorted lexicographically and duplicate-free.
pub fn minimalize(mut vectors: Vec<IntVector>) -> Vec<IntVector> {
    vectors.sort_by(|a, b| a.norm1().cmp(&b.norm1()).then_with(|| a.lex_cmp(b)));
    vectors.dedup();
    let mut minimal: Vec<IntVector> = Vec::new();
    for v in vectors {
        if !minimal.iter().any(|m| m.le(&v)) {
            minimal.push(v);
        }
    }
    minimal.sort_by(|a, b| a.lex_cmp(b));
    minimal
}
