//! Semigroup definition documents and inline argument parsing.

use factorinv::kernel::IntVector;
use factorinv::monoid::{block_monoid, AffineSemigroup, NumericalSemigroup};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A parsed semigroup definition, as read from `--semigroup <file>` (JSON)
/// or assembled from inline flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SemigroupSpec {
    Numerical {
        generators: Vec<u64>,
    },
    Affine {
        generators: Vec<Vec<i64>>,
    },
    Equations {
        matrix: Vec<Vec<i64>>,
        #[serde(default)]
        moduli: Vec<u64>,
    },
    Block {
        moduli: Vec<u64>,
        elements: Vec<Vec<i64>>,
    },
}

/// A semigroup instantiated from a spec: numerical semigroups keep their
/// fast paths, everything else is an affine semigroup.
pub enum Monoid {
    Numerical(NumericalSemigroup),
    Affine(AffineSemigroup),
}

impl SemigroupSpec {
    /// Validates the definition and builds the semigroup. Violations of
    /// semantic constraints (gcd, moduli, signs) surface as library errors.
    pub fn instantiate(&self) -> factorinv::Result<Monoid> {
        match self {
            SemigroupSpec::Numerical { generators } => {
                Ok(Monoid::Numerical(NumericalSemigroup::new(generators)?))
            }
            SemigroupSpec::Affine { generators } => {
                let gens: Vec<IntVector> = generators.iter().map(|g| IntVector::from_i64(g)).collect();
                Ok(Monoid::Affine(AffineSemigroup::from_generators(gens)?))
            }
            SemigroupSpec::Equations { matrix, moduli } => {
                let rows: Vec<IntVector> = matrix.iter().map(|r| IntVector::from_i64(r)).collect();
                let moduli: Vec<Option<BigInt>> = if moduli.is_empty() {
                    vec![None; rows.len()]
                } else {
                    moduli
                        .iter()
                        .map(|&d| if d == 0 { None } else { Some(BigInt::from(d)) })
                        .collect()
                };
                Ok(Monoid::Affine(AffineSemigroup::from_equations(rows, moduli)?))
            }
            SemigroupSpec::Block { moduli, elements } => {
                let els: Vec<IntVector> = elements.iter().map(|g| IntVector::from_i64(g)).collect();
                Ok(Monoid::Affine(block_monoid(moduli, &els)?))
            }
        }
    }
}

/// Parses `"10,17,24,31,43"` (scalars) or `"(2,0),(0,2)"` (vectors) into a
/// numerical or affine spec.
pub fn parse_inline_generators(text: &str) -> Result<SemigroupSpec, String> {
    let trimmed = text.trim();
    if trimmed.contains('(') {
        let vectors = parse_vector_list(trimmed)?;
        Ok(SemigroupSpec::Affine { generators: vectors })
    } else {
        let generators = parse_scalar_list::<u64>(trimmed)?;
        Ok(SemigroupSpec::Numerical { generators })
    }
}

pub fn parse_scalar_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| format!("cannot parse integer {:?}", t.trim()))
        })
        .collect()
}

/// `"(2,0),(0,2),(1,1)"` into rows of integers.
pub fn parse_vector_list(text: &str) -> Result<Vec<Vec<i64>>, String> {
    let mut vectors = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(format!("expected '(' in {rest:?}"));
        };
        let Some(close) = rest.find(')') else {
            return Err(format!("unbalanced parentheses in {text:?}"));
        };
        if close < open {
            return Err(format!("unbalanced parentheses in {text:?}"));
        }
        vectors.push(parse_scalar_list::<i64>(&rest[open + 1..close])?);
        rest = rest[close + 1..].trim_start_matches([',', ' ']);
    }
    if vectors.is_empty() {
        return Err("empty vector list".into());
    }
    Ok(vectors)
}

/// `"2,0,1,1;0,2,1,2"` into matrix rows.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, String> {
    text.split(';').map(parse_scalar_list::<i64>).collect()
}

/// An element: `"66"` for numerical monoids, `"(2,4)"` for affine ones.
pub fn parse_element(text: &str) -> Result<Vec<i64>, String> {
    let trimmed = text.trim();
    if trimmed.starts_with('(') {
        let vs = parse_vector_list(trimmed)?;
        if vs.len() != 1 {
            return Err(format!("expected one vector, got {}", vs.len()));
        }
        Ok(vs.into_iter().next().unwrap())
    } else {
        Ok(vec![trimmed
            .parse::<i64>()
            .map_err(|_| format!("cannot parse element {trimmed:?}"))?])
    }
}
