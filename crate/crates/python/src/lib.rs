//! Python bindings. Structured reports come back as plain dicts with the
//! same shape as the library's JSON.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;

use nsgp::ci::{self, PairSelection};
use nsgp::knots::{self, Family};
use nsgp::resolution::{betti_diagram, minimal_relations, ShadedComplex};
use nsgp::{deformation, series, IntPolynomial};

fn err(e: nsgp::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.kind()))
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn poly_from_coeffs(coeffs: Vec<i64>) -> IntPolynomial {
    IntPolynomial::from_i64(&coeffs)
}

/// A numerical semigroup given by generators with gcd 1.
#[pyclass(name = "NumericalSemigroup", frozen)]
struct PySemigroup {
    inner: nsgp::NumericalSemigroup,
}

#[pymethods]
impl PySemigroup {
    #[new]
    fn new(generators: Vec<u64>) -> PyResult<Self> {
        nsgp::NumericalSemigroup::new(generators)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    /// Parses `"5,7,9"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        nsgp::NumericalSemigroup::parse(text)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[getter]
    fn generators(&self) -> Vec<u64> {
        self.inner.generators().to_vec()
    }

    #[getter]
    fn minimal_generators(&self) -> Vec<u64> {
        self.inner.minimal_generators().to_vec()
    }

    #[getter]
    fn multiplicity(&self) -> u64 {
        self.inner.multiplicity()
    }

    #[getter]
    fn embedding_dimension(&self) -> usize {
        self.inner.embedding_dimension()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.inner.frobenius()
    }

    #[getter]
    fn conductor(&self) -> u64 {
        self.inner.conductor()
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.inner.genus()
    }

    fn __contains__(&self, n: i64) -> bool {
        self.inner.contains(n)
    }

    fn contains(&self, n: i64) -> bool {
        self.inner.contains(n)
    }

    fn gaps(&self) -> Vec<u64> {
        self.inner.gaps()
    }

    fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        self.inner.elements_up_to(bound).collect()
    }

    fn apery_set(&self, s: u64) -> PyResult<Vec<u64>> {
        self.inner.apery_set(s).map_err(err)
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn invariants(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.inner.numeric_invariants())
    }

    fn classify_branch(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.inner.classify_branch())
    }

    /// Free witness for the given ordering, or `None`.
    fn is_free(&self, py: Python<'_>, ordering: Vec<u64>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.inner.is_free(&ordering).map_err(err)?)
    }

    /// `{(i, m): β_{i,m}}` over the nonzero entries.
    fn betti<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let dict = PyDict::new(py);
        for (&(i, m), &b) in betti_diagram(&self.inner).entries() {
            dict.set_item((i, m), b)?;
        }
        Ok(dict)
    }

    /// `[dim H̃_0, …, dim H̃_{g−2}]` of the shaded complex in degree `m`.
    fn homology(&self, m: i64) -> Vec<usize> {
        let h = ShadedComplex::new(&self.inner, m).reduced_homology();
        (0..self.inner.embedding_dimension().saturating_sub(1))
            .map(|k| h.dim(k as isize))
            .collect()
    }

    fn minimal_relations(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &minimal_relations(&self.inner).map_err(err)?)
    }

    /// Delorme's test; `largest=True` merges the largest-degree pair first.
    #[pyo3(signature = (largest = false))]
    fn delorme(&self, py: Python<'_>, largest: bool) -> PyResult<Py<PyAny>> {
        let selection = if largest {
            PairSelection::LargestDegree
        } else {
            PairSelection::SmallestDegree
        };
        let report = ci::delorme_check_with(self.inner.minimal_generators(), selection).map_err(err)?;
        to_py(py, &report)
    }

    fn is_complete_intersection(&self) -> PyResult<bool> {
        Ok(ci::delorme_check(self.inner.minimal_generators()).map_err(err)?.is_ci)
    }

    /// Defining binomials of a complete intersection, rendered as text.
    fn binomials(&self) -> PyResult<Option<Vec<String>>> {
        let report = ci::delorme_check(self.inner.minimal_generators()).map_err(err)?;
        Ok(report
            .tree
            .map(|t| ci::defining_binomials(&t).iter().map(|b| b.to_string()).collect()))
    }

    fn herzog_kunz(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &ci::herzog_kunz_check(&self.inner).map_err(err)?)
    }

    fn dedekind(&self, py: Python<'_>, h: u64) -> PyResult<Py<PyAny>> {
        to_py(py, &ci::dedekind_semimodule(&self.inner, h).map_err(err)?)
    }

    fn hilbert_numerator(&self) -> Vec<BigInt> {
        series::hilbert_numerator(&self.inner).coeffs().to_vec()
    }

    fn alexander(&self) -> Vec<BigInt> {
        knots::alexander_from_semigroup(&self.inner).coeffs().to_vec()
    }

    fn t1_dimension(&self, n: i64) -> PyResult<usize> {
        deformation::t1_dimension(&self.inner, n).map_err(err)
    }

    fn t1_spectrum(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &deformation::t1_spectrum(&self.inner).map_err(err)?)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.minimal_generators().iter().map(u64::to_string).collect();
        format!("NumericalSemigroup([{}])", gens.join(", "))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.minimal_generators() == other.inner.minimal_generators()
    }
}

/// Glues `s1` and `s2` into `⟨d1·s1, d2·s2⟩`.
#[pyfunction]
fn glue(s1: &PySemigroup, s2: &PySemigroup, d1: u64, d2: u64) -> PyResult<PySemigroup> {
    ci::glue(&s1.inner, &s2.inner, d1, d2)
        .map(|g| PySemigroup { inner: g.semigroup })
        .map_err(err)
}

/// Formal semigroup of an Alexander polynomial given by ascending coefficients.
#[pyfunction]
fn formal_semigroup(py: Python<'_>, coeffs: Vec<i64>) -> PyResult<Py<PyAny>> {
    let f = knots::formal_semigroup_from_alexander(&poly_from_coeffs(coeffs)).map_err(err)?;
    to_py(py, &f)
}

#[pyfunction]
fn torus_alexander(p: u64, q: u64) -> PyResult<Vec<BigInt>> {
    Ok(knots::torus_alexander(p, q).map_err(err)?.coeffs().to_vec())
}

/// Teragaito's family `"a"` or `"b"` at `n`.
#[pyfunction]
fn teragaito(n: u64, family: &str) -> PyResult<PySemigroup> {
    let fam = match family {
        "a" | "A" => Family::A,
        "b" | "B" => Family::B,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    knots::teragaito_family(n, fam)
        .map(|inner| PySemigroup { inner })
        .map_err(err)
}

/// Whether every root of the polynomial is a root of unity.
#[pyfunction]
fn cyclotomic_test(coeffs: Vec<i64>) -> PyResult<bool> {
    series::cyclotomic_test(&poly_from_coeffs(coeffs)).map_err(err)
}

#[pymodule]
#[pyo3(name = "nsgp")]
fn nsgp_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_function(wrap_pyfunction!(glue, m)?)?;
    m.add_function(wrap_pyfunction!(formal_semigroup, m)?)?;
    m.add_function(wrap_pyfunction!(torus_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(teragaito, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_test, m)?)?;
    Ok(())
}
