//! Python bindings for the `redcyc` library.
//!
//! Field elements cross the boundary as packed integers (plain residues for
//! prime fields); matrices as `[a, b, c, d]` lists in row-major order.
//!
//!     import pyredcyc as rc
//!     f = rc.Field.parse("13")
//!     rc.count_reducible_classes(12).n_classes   # 14
//!     [r.type_tag for r in rc.representatives(f, 12)]

use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use redcyc::census::{self, ClassKind};
use redcyc::ff::FieldDesignation;
use redcyc::{numtheory, reps, Error, FieldElement, FieldSpec, Gl2, Mat2};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::InvalidInput(_)
        | Error::NoSuchElement { .. }
        | Error::UnsupportedCharacteristic { .. } => PyValueError::new_err(err.to_string()),
        Error::DivisionByZero => PyZeroDivisionError::new_err(err.to_string()),
        Error::ResourceLimit(_) | Error::Internal(_) | Error::LemmaViolation(_) => {
            PyRuntimeError::new_err(err.to_string())
        }
    }
}

fn factored(n: u64) -> PyResult<numtheory::FactoredInt> {
    numtheory::factorize(n).map_err(to_py)
}

// =============================================================================
// Number theory
// =============================================================================

/// Ascending prime factorization as a list of (prime, exponent).
#[pyfunction]
fn factorize(n: u64) -> PyResult<Vec<(u64, u32)>> {
    Ok(factored(n)?.factors().to_vec())
}

#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    Ok(numtheory::euler_phi(&factored(n)?))
}

#[pyfunction]
fn rho(m: u64) -> PyResult<u128> {
    Ok(numtheory::rho(&factored(m)?))
}

#[pyfunction]
fn delta(m: u64) -> PyResult<u64> {
    Ok(numtheory::delta(&factored(m)?))
}

#[pyfunction]
fn involution_count(m: u64) -> PyResult<u64> {
    Ok(numtheory::involution_count(&factored(m)?))
}

#[pyfunction]
fn unit_involutions(m: u64) -> PyResult<Vec<u64>> {
    if m == 0 {
        return Err(PyValueError::new_err("m must be positive"));
    }
    Ok(numtheory::unit_involutions(m))
}

#[pyfunction]
fn fix_bijectivity_predicate(m: u64) -> PyResult<bool> {
    Ok(numtheory::fix_bijectivity_predicate(&factored(m)?))
}

#[pyclass(name = "CountReport", frozen, get_all)]
struct PyCountReport {
    m: u64,
    rho: u128,
    delta: u64,
    n_classes: u128,
    involutions: u64,
}

#[pymethods]
impl PyCountReport {
    fn __repr__(&self) -> String {
        format!(
            "CountReport(m={}, rho={}, delta={}, n_classes={}, involutions={})",
            self.m, self.rho, self.delta, self.n_classes, self.involutions
        )
    }
}

#[pyfunction]
fn count_reducible_classes(m: u64) -> PyResult<PyCountReport> {
    let r = numtheory::count_reducible_classes(&factored(m)?);
    Ok(PyCountReport {
        m: r.m,
        rho: r.rho,
        delta: r.delta,
        n_classes: r.n_classes,
        involutions: r.involutions,
    })
}

// =============================================================================
// Diagonal model
// =============================================================================

type Orbit = Vec<(u64, u64)>;

/// Returns (orbit count, orbits) with each orbit a list of (a, b) generators.
#[pyfunction]
fn diagonal_model_classes(m: u64) -> PyResult<(u64, Vec<Orbit>)> {
    if m == 0 {
        return Err(PyValueError::new_err("m must be positive"));
    }
    let d = census::diagonal_model_classes(m);
    let orbits = d
        .orbits
        .iter()
        .map(|o| o.members.iter().map(|p| (p.a, p.b)).collect())
        .collect();
    Ok((d.count, orbits))
}

#[pyfunction]
fn burnside_count(m: u64) -> PyResult<u64> {
    if m == 0 {
        return Err(PyValueError::new_err("m must be positive"));
    }
    census::burnside_count(m).map_err(to_py)
}

/// Swap-fixed subgroups as (a, b, l) with the subgroup equal to <(1, l)>.
#[pyfunction]
fn fix_swap_subgroups(m: u64) -> PyResult<Vec<(u64, u64, u64)>> {
    if m == 0 {
        return Err(PyValueError::new_err("m must be positive"));
    }
    Ok(census::fix_swap_subgroups(m)
        .map_err(to_py)?
        .iter()
        .map(|f| (f.generator.a, f.generator.b, f.l))
        .collect())
}

// =============================================================================
// Field and matrices
// =============================================================================

/// The finite field GF(p^k).
#[pyclass(name = "Field", frozen)]
struct PyField {
    inner: FieldSpec,
}

impl PyField {
    fn elem(&self, x: u64) -> PyResult<FieldElement> {
        self.inner.from_packed(x).map_err(to_py)
    }

    fn mat(&self, h: [u64; 4]) -> PyResult<Mat2> {
        Ok(Mat2::new(
            self.elem(h[0])?,
            self.elem(h[1])?,
            self.elem(h[2])?,
            self.elem(h[3])?,
        ))
    }
}

fn unmat(h: &Mat2) -> [u64; 4] {
    [h.a, h.b, h.c, h.d].map(|x| x.packed() as u64)
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (p, k=1))]
    fn new(p: u64, k: u32) -> PyResult<Self> {
        Ok(PyField {
            inner: FieldSpec::new(p, k).map_err(to_py)?,
        })
    }

    /// Builds a field from "q" or "p^k".
    #[staticmethod]
    fn parse(designation: &str) -> PyResult<Self> {
        let d: FieldDesignation = designation.parse().map_err(to_py)?;
        Ok(PyField {
            inner: FieldSpec::from_designation(d).map_err(to_py)?,
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q()
    }

    #[getter]
    fn modulus(&self) -> Vec<u64> {
        self.inner.modulus().to_vec()
    }

    #[getter]
    fn primitive(&self) -> u64 {
        self.inner.primitive().packed() as u64
    }

    fn coeffs(&self, x: u64) -> PyResult<Vec<u64>> {
        Ok(self.inner.coeffs(self.elem(x)?))
    }

    fn add(&self, x: u64, y: u64) -> PyResult<u64> {
        Ok(self.inner.add(self.elem(x)?, self.elem(y)?).packed() as u64)
    }

    fn mul(&self, x: u64, y: u64) -> PyResult<u64> {
        Ok(self.inner.mul(self.elem(x)?, self.elem(y)?).packed() as u64)
    }

    fn inv(&self, x: u64) -> PyResult<u64> {
        Ok(self.inner.inv(self.elem(x)?).map_err(to_py)?.packed() as u64)
    }

    fn pow(&self, x: u64, e: u64) -> PyResult<u64> {
        Ok(self.inner.pow(self.elem(x)?, e).packed() as u64)
    }

    fn element_order(&self, x: u64) -> PyResult<u64> {
        self.inner.element_order(self.elem(x)?).map_err(to_py)
    }

    fn element_of_order(&self, m: u64) -> PyResult<u64> {
        Ok(self.inner.element_of_order(m).map_err(to_py)?.packed() as u64)
    }

    fn mat_order(&self, h: [u64; 4]) -> PyResult<u64> {
        Gl2::new(&self.inner)
            .mat_order(&self.mat(h)?)
            .map_err(to_py)
    }

    fn mat_mul(&self, g: [u64; 4], h: [u64; 4]) -> PyResult<[u64; 4]> {
        Ok(unmat(
            &Gl2::new(&self.inner).mul(&self.mat(g)?, &self.mat(h)?),
        ))
    }

    fn conjugate(&self, g: [u64; 4], h: [u64; 4]) -> PyResult<[u64; 4]> {
        let gl = Gl2::new(&self.inner);
        Ok(unmat(
            &gl.conjugate(&self.mat(g)?, &self.mat(h)?).map_err(to_py)?,
        ))
    }

    fn is_split_reducible(&self, h: [u64; 4]) -> PyResult<bool> {
        Gl2::new(&self.inner)
            .is_split_reducible(&self.mat(h)?)
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Field(p={}, k={})", self.inner.p(), self.inner.k())
    }
}

// =============================================================================
// Census and representatives
// =============================================================================

#[pyclass(name = "CensusReport", frozen, get_all)]
struct PyCensusReport {
    q: u64,
    m: u64,
    total_subgroups: usize,
    reducible_classes: usize,
    irreducible_classes: usize,
    formula_n: Option<u128>,
    matches: Option<bool>,
    irreducible_ok: bool,
    /// (min generator, class size, kind) per class.
    classes: Vec<([u64; 4], usize, &'static str)>,
}

#[pymethods]
impl PyCensusReport {
    fn passed(&self) -> bool {
        self.matches != Some(false) && self.irreducible_ok
    }

    fn __repr__(&self) -> String {
        format!(
            "CensusReport(q={}, m={}, reducible_classes={}, irreducible_classes={}, formula_n={:?})",
            self.q, self.m, self.reducible_classes, self.irreducible_classes, self.formula_n
        )
    }
}

impl From<census::CensusReport> for PyCensusReport {
    fn from(r: census::CensusReport) -> Self {
        PyCensusReport {
            q: r.q,
            m: r.m,
            total_subgroups: r.total_subgroups,
            reducible_classes: r.reducible_classes,
            irreducible_classes: r.irreducible_classes,
            formula_n: r.formula_n,
            matches: r.matches,
            irreducible_ok: r.irreducible_ok,
            classes: r
                .classes
                .iter()
                .map(|c| {
                    (
                        unmat(&c.representative.min_generator),
                        c.class_size,
                        ClassKind::as_str(c.kind),
                    )
                })
                .collect(),
        }
    }
}

#[pyfunction(name = "census")]
fn run_census(py: Python<'_>, field: &PyField, m: u64) -> PyResult<PyCensusReport> {
    let report = py
        .detach(|| census::census(&field.inner, m))
        .map_err(to_py)?;
    Ok(report.into())
}

#[pyfunction]
fn verify_field(py: Python<'_>, field: &PyField) -> PyResult<Vec<PyCensusReport>> {
    let reports = py
        .detach(|| census::verify_field(&field.inner))
        .map_err(to_py)?;
    Ok(reports.into_iter().map(Into::into).collect())
}

#[pyclass(name = "RepEntry", frozen, get_all)]
struct PyRepEntry {
    m: u64,
    exponent_pair: (u64, u64),
    generator: [u64; 4],
    type_tag: String,
    paper_form: Option<Vec<u64>>,
    involution_l: Option<u64>,
    normalizer: &'static str,
}

#[pymethods]
impl PyRepEntry {
    fn __repr__(&self) -> String {
        format!(
            "RepEntry(m={}, type={}, exponent_pair={:?}, generator={:?})",
            self.m, self.type_tag, self.exponent_pair, self.generator
        )
    }
}

#[pyfunction]
fn representatives(field: &PyField, m: u64) -> PyResult<Vec<PyRepEntry>> {
    reps::representatives(&field.inner, m)
        .map_err(to_py)?
        .into_iter()
        .map(|e| {
            Ok(PyRepEntry {
                m: e.m,
                exponent_pair: e.exponent_pair,
                generator: unmat(&e.generator),
                type_tag: e.type_tag.to_string(),
                paper_form: e.paper_form,
                involution_l: e.involution_l,
                normalizer: reps::normalizer_type(m, e.exponent_pair)
                    .map_err(to_py)?
                    .as_str(),
            })
        })
        .collect()
}

#[pyfunction]
fn cross_validate(py: Python<'_>, field: &PyField, m: u64) -> PyResult<bool> {
    py.detach(|| reps::cross_validate(&field.inner, m))
        .map_err(to_py)
}

#[pymodule]
fn pyredcyc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(involution_count, m)?)?;
    m.add_function(wrap_pyfunction!(unit_involutions, m)?)?;
    m.add_function(wrap_pyfunction!(fix_bijectivity_predicate, m)?)?;
    m.add_function(wrap_pyfunction!(count_reducible_classes, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_model_classes, m)?)?;
    m.add_function(wrap_pyfunction!(burnside_count, m)?)?;
    m.add_function(wrap_pyfunction!(fix_swap_subgroups, m)?)?;
    m.add_function(wrap_pyfunction!(run_census, m)?)?;
    m.add_function(wrap_pyfunction!(verify_field, m)?)?;
    m.add_function(wrap_pyfunction!(representatives, m)?)?;
    m.add_function(wrap_pyfunction!(cross_validate, m)?)?;
    m.add_class::<PyField>()?;
    m.add_class::<PyCountReport>()?;
    m.add_class::<PyCensusReport>()?;
    m.add_class::<PyRepEntry>()?;
    Ok(())
}
