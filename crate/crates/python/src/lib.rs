//! Python bindings: numerical and affine semigroups with their
//! factorization invariants, plus the raw kernel calls.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use factorinv::invariants;
use factorinv::kernel::{self, IntVector};
use factorinv::monoid;

fn to_py_err(e: factorinv::Error) -> PyErr {
    match e {
        factorinv::Error::StepLimitExceeded => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn vectors_in(rows: Vec<Vec<BigInt>>) -> Vec<IntVector> {
    rows.into_iter().map(IntVector::new).collect()
}

fn vectors_out(vs: &[IntVector]) -> Vec<Vec<BigInt>> {
    vs.iter().map(|v| v.entries().to_vec()).collect()
}

fn factorizations_out(zs: &[monoid::Factorization]) -> Vec<Vec<BigInt>> {
    zs.iter().map(|z| z.exponents().entries().to_vec()).collect()
}

fn moduli_in(moduli: Option<Vec<u64>>, rows: usize) -> Vec<Option<BigInt>> {
    match moduli {
        None => vec![None; rows],
        Some(ds) => ds
            .into_iter()
            .map(|d| if d == 0 { None } else { Some(BigInt::from(d)) })
            .collect(),
    }
}

/// A numerical semigroup given by coprime positive generators.
#[pyclass(name = "NumericalSemigroup")]
struct PyNumericalSemigroup {
    inner: monoid::NumericalSemigroup,
}

#[pymethods]
impl PyNumericalSemigroup {
    #[new]
    fn new(generators: Vec<u64>) -> PyResult<Self> {
        Ok(PyNumericalSemigroup {
            inner: monoid::NumericalSemigroup::new(&generators).map_err(to_py_err)?,
        })
    }

    /// Minimal generating system.
    fn generators(&self) -> Vec<u64> {
        self.inner.generators().to_vec()
    }

    fn multiplicity(&self) -> u64 {
        self.inner.multiplicity()
    }

    fn frobenius(&self) -> i128 {
        self.inner.frobenius()
    }

    fn contains(&self, x: u64) -> bool {
        self.inner.contains(x)
    }

    #[pyo3(signature = (n=None))]
    fn apery(&self, n: Option<u64>) -> PyResult<Vec<u64>> {
        let n = n.unwrap_or_else(|| self.inner.multiplicity());
        self.inner.apery_set(n).map_err(to_py_err)
    }

    fn factorizations(&self, x: u64) -> Vec<Vec<u64>> {
        self.inner.factorizations_raw(x)
    }

    fn length_set(&self, x: u64) -> PyResult<Vec<BigInt>> {
        Ok(invariants::length_set_numerical(&self.inner, x)
            .map_err(to_py_err)?
            .lengths()
            .to_vec())
    }

    fn betti(&self) -> Vec<u64> {
        self.inner.betti_elements()
    }

    fn minimal_presentation(&self) -> Vec<(Vec<BigInt>, Vec<BigInt>)> {
        self.inner
            .minimal_presentation()
            .iter()
            .map(|p| {
                (
                    p.lhs.exponents().entries().to_vec(),
                    p.rhs.exponents().entries().to_vec(),
                )
            })
            .collect()
    }

    /// Elasticity as a (numerator, denominator) pair.
    fn elasticity(&self) -> PyResult<(BigInt, BigInt)> {
        let rho = invariants::elasticity(&self.inner.as_affine()).map_err(to_py_err)?;
        Ok((rho.numer().clone(), rho.denom().clone()))
    }

    #[pyo3(signature = (bound, periodicity_bound=None))]
    fn delta_set(&self, bound: u64, periodicity_bound: Option<u64>) -> PyResult<(Vec<u64>, bool)> {
        let scan = invariants::delta_set_numerical(&self.inner, bound, periodicity_bound)
            .map_err(to_py_err)?;
        Ok((scan.deltas, scan.complete))
    }

    fn delta_min(&self) -> Option<u64> {
        invariants::delta_min_numerical(&self.inner)
    }

    fn delta_max(&self) -> Option<u64> {
        invariants::delta_max_numerical(&self.inner)
    }

    /// Catenary degree; flavor is one of "plain", "equal", "homogeneous",
    /// "monotone".
    #[pyo3(signature = (flavor="plain"))]
    fn catenary(&self, flavor: &str) -> PyResult<BigInt> {
        let a = self.inner.as_affine();
        match flavor {
            "plain" => invariants::catenary_numerical(&self.inner),
            "equal" => invariants::equal_catenary(&a),
            "homogeneous" => invariants::homogeneous_catenary(&a),
            "monotone" => invariants::monotone_catenary_numerical(&self.inner),
            _ => {
                return Err(PyValueError::new_err(format!(
                    "unknown catenary flavor {flavor:?}"
                )))
            }
        }
        .map_err(to_py_err)
    }

    fn catenary_of_element(&self, x: u64) -> PyResult<BigInt> {
        invariants::catenary_element(
            &self.inner.as_affine(),
            &IntVector::new(vec![BigInt::from(x)]),
        )
        .map_err(to_py_err)
    }

    fn tame(&self) -> PyResult<BigInt> {
        invariants::tame_numerical(&self.inner).map_err(to_py_err)
    }

    #[pyo3(signature = (element=None))]
    fn omega(&self, element: Option<u64>) -> PyResult<BigInt> {
        match element {
            Some(x) => invariants::omega_element_numerical(&self.inner, x),
            None => invariants::omega_numerical(&self.inner),
        }
        .map_err(to_py_err)
    }

    fn denumerant(&self, x: u64) -> PyResult<u64> {
        invariants::denumerant_numerical(&self.inner, x).map_err(to_py_err)
    }

    /// Maximal denumerant and the scan bound used.
    #[pyo3(signature = (bound=None))]
    fn max_denumerant(&self, bound: Option<u64>) -> PyResult<(u64, u64)> {
        let md = invariants::max_denumerant(&self.inner, bound).map_err(to_py_err)?;
        Ok((md.value, md.bound_used))
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.generators().iter().map(u64::to_string).collect();
        format!("NumericalSemigroup({})", gens.join(", "))
    }
}

/// An affine semigroup: a finitely generated submonoid of N^k.
#[pyclass(name = "AffineSemigroup")]
struct PyAffineSemigroup {
    inner: monoid::AffineSemigroup,
}

#[pymethods]
impl PyAffineSemigroup {
    #[new]
    fn new(generators: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(PyAffineSemigroup {
            inner: monoid::AffineSemigroup::from_generators(vectors_in(generators))
                .map_err(to_py_err)?,
        })
    }

    /// Full affine semigroup of the nonnegative solutions of `matrix·x = 0`,
    /// rows with modulus 0 read as plain equations.
    #[staticmethod]
    #[pyo3(signature = (matrix, moduli=None))]
    fn from_equations(matrix: Vec<Vec<BigInt>>, moduli: Option<Vec<u64>>) -> PyResult<Self> {
        let rows = matrix.len();
        Ok(PyAffineSemigroup {
            inner: monoid::AffineSemigroup::from_equations(
                vectors_in(matrix),
                moduli_in(moduli, rows),
            )
            .map_err(to_py_err)?,
        })
    }

    fn minimal_generators(&self) -> PyResult<Vec<Vec<BigInt>>> {
        Ok(vectors_out(self.inner.minimal_generators().map_err(to_py_err)?))
    }

    fn contains(&self, element: Vec<BigInt>) -> PyResult<bool> {
        self.inner.contains(&IntVector::new(element)).map_err(to_py_err)
    }

    fn factorizations(&self, element: Vec<BigInt>) -> PyResult<Vec<Vec<BigInt>>> {
        Ok(factorizations_out(
            &self
                .inner
                .factorizations(&IntVector::new(element))
                .map_err(to_py_err)?,
        ))
    }

    fn betti(&self) -> PyResult<Vec<Vec<BigInt>>> {
        Ok(vectors_out(self.inner.betti_elements().map_err(to_py_err)?))
    }

    fn minimal_presentation(&self) -> PyResult<Vec<(Vec<BigInt>, Vec<BigInt>)>> {
        Ok(self
            .inner
            .minimal_presentation()
            .map_err(to_py_err)?
            .iter()
            .map(|p| {
                (
                    p.lhs.exponents().entries().to_vec(),
                    p.rhs.exponents().entries().to_vec(),
                )
            })
            .collect())
    }

    fn primitive_elements(&self) -> PyResult<Vec<Vec<BigInt>>> {
        Ok(vectors_out(&self.inner.primitive_elements().map_err(to_py_err)?))
    }

    fn graver(&self) -> PyResult<Vec<Vec<BigInt>>> {
        Ok(vectors_out(self.inner.graver().map_err(to_py_err)?))
    }

    fn elasticity(&self) -> PyResult<(BigInt, BigInt)> {
        let rho = invariants::elasticity(&self.inner).map_err(to_py_err)?;
        Ok((rho.numer().clone(), rho.denom().clone()))
    }

    fn is_half_factorial(&self) -> PyResult<bool> {
        invariants::is_half_factorial(&self.inner).map_err(to_py_err)
    }

    #[pyo3(signature = (flavor="plain"))]
    fn catenary(&self, flavor: &str) -> PyResult<BigInt> {
        match flavor {
            "plain" => invariants::catenary(&self.inner),
            "equal" => invariants::equal_catenary(&self.inner),
            "homogeneous" => invariants::homogeneous_catenary(&self.inner),
            "monotone" => invariants::monotone_catenary(&self.inner),
            _ => {
                return Err(PyValueError::new_err(format!(
                    "unknown catenary flavor {flavor:?}"
                )))
            }
        }
        .map_err(to_py_err)
    }

    fn catenary_of_element(&self, element: Vec<BigInt>) -> PyResult<BigInt> {
        invariants::catenary_element(&self.inner, &IntVector::new(element)).map_err(to_py_err)
    }

    fn tame(&self) -> PyResult<BigInt> {
        invariants::tame(&self.inner).map_err(to_py_err)
    }

    #[pyo3(signature = (element=None))]
    fn omega(&self, element: Option<Vec<BigInt>>) -> PyResult<BigInt> {
        match element {
            Some(m) => invariants::omega_element(&self.inner, &IntVector::new(m)),
            None => invariants::omega(&self.inner),
        }
        .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("AffineSemigroup(dimension={})", self.inner.dimension())
    }
}

/// The block monoid of zero-sum sequences over `Z_d1 × … × Z_dr`.
#[pyfunction]
fn block_monoid(moduli: Vec<u64>, elements: Vec<Vec<BigInt>>) -> PyResult<PyAffineSemigroup> {
    Ok(PyAffineSemigroup {
        inner: monoid::block_monoid(&moduli, &vectors_in(elements)).map_err(to_py_err)?,
    })
}

/// Davenport constant: maximal length of a minimal zero-sum sequence.
#[pyfunction]
fn davenport_constant(moduli: Vec<u64>, elements: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    monoid::davenport_constant(&moduli, &vectors_in(elements)).map_err(to_py_err)
}

/// Hilbert basis of `matrix·x = 0` over the nonnegative integers; rows
/// with modulus 0 are plain equations, others congruences.
#[pyfunction]
#[pyo3(signature = (matrix, moduli=None))]
fn hilbert_basis(matrix: Vec<Vec<BigInt>>, moduli: Option<Vec<u64>>) -> PyResult<Vec<Vec<BigInt>>> {
    let rows = matrix.len();
    let basis = kernel::hilbert_basis(&vectors_in(matrix), &moduli_in(moduli, rows))
        .map_err(to_py_err)?;
    Ok(vectors_out(&basis))
}

/// Graver basis of an integer matrix, one representative per sign pair.
#[pyfunction]
fn graver_basis(matrix: Vec<Vec<BigInt>>) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(vectors_out(
        &kernel::graver_basis(&vectors_in(matrix)).map_err(to_py_err)?,
    ))
}

/// Circuits of an integer matrix: minimal-support kernel vectors.
#[pyfunction]
fn circuits(matrix: Vec<Vec<BigInt>>) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(vectors_out(
        &kernel::circuits(&vectors_in(matrix)).map_err(to_py_err)?,
    ))
}

/// All nonnegative solutions of `matrix·x = rhs` (must be finitely many).
#[pyfunction]
fn solve_fiber(matrix: Vec<Vec<BigInt>>, rhs: Vec<BigInt>) -> PyResult<Vec<Vec<BigInt>>> {
    let sys = kernel::LinearSystem::new(vectors_in(matrix), IntVector::new(rhs))
        .map_err(to_py_err)?;
    Ok(vectors_out(
        &kernel::enumerate_bounded(&sys).map_err(to_py_err)?,
    ))
}

#[pymodule]
fn factorinv_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNumericalSemigroup>()?;
    m.add_class::<PyAffineSemigroup>()?;
    m.add_function(wrap_pyfunction!(block_monoid, m)?)?;
    m.add_function(wrap_pyfunction!(davenport_constant, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_basis, m)?)?;
    m.add_function(wrap_pyfunction!(graver_basis, m)?)?;
    m.add_function(wrap_pyfunction!(circuits, m)?)?;
    m.add_function(wrap_pyfunction!(solve_fiber, m)?)?;
    Ok(())
}
