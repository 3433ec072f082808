//! Python bindings. Rationals cross the boundary as `fractions.Fraction`,
//! base classes as `{monomial: Fraction}` dicts.

use std::sync::Arc;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use plucker_core::chow::{oracle_pushforward_theta_pow as core_theta_pow, BaseModel, BundleModel, FlagRing, GradedElement};
use plucker_core::degree::{self, DegreeResult};
use plucker_core::pushforward::{self as pf, DenominatorVariant, Method, PushforwardSeries};
use plucker_core::suite;
use plucker_core::symfunc::{self, CauchyForm, Partition, DEFAULT_SAMPLE_HEIGHT};
use plucker_core::Rational;

fn err(e: plucker_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn class_to_dict<'py>(py: Python<'py>, g: &GradedElement) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    for (_, e, q) in g.sorted_terms() {
        dict.set_item(g.monomial_name(e), q.clone())?;
    }
    Ok(dict)
}

fn parse_variant(s: &str) -> PyResult<DenominatorVariant> {
    s.parse().map_err(err)
}

fn parse_method(s: &str) -> PyResult<Method> {
    s.parse().map_err(err)
}

#[pyclass(frozen, skip_from_py_object, name = "BaseModel", module = "plucker")]
#[derive(Clone)]
struct PyBaseModel {
    inner: Arc<BaseModel>,
}

#[pymethods]
impl PyBaseModel {
    #[staticmethod]
    fn point() -> Self {
        PyBaseModel { inner: BaseModel::point() }
    }

    #[staticmethod]
    fn projective(n: u32) -> Self {
        PyBaseModel {
            inner: BaseModel::projective(n),
        }
    }

    /// Free Segre generators truncated above degree `n`.
    #[staticmethod]
    #[pyo3(signature = (n = 3, families = 1))]
    fn formal(n: u32, families: u32) -> PyResult<Self> {
        if families == 0 {
            return Err(PyValueError::new_err("families must be positive"));
        }
        Ok(PyBaseModel {
            inner: BaseModel::formal(n, families),
        })
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.inner.dim()
    }

    #[getter]
    fn is_formal(&self) -> bool {
        self.inner.is_formal()
    }

    fn __repr__(&self) -> String {
        format!("BaseModel({})", self.inner.describe())
    }
}

#[pyclass(frozen, skip_from_py_object, name = "Bundle", module = "plucker")]
#[derive(Clone)]
struct PyBundle {
    inner: BundleModel,
}

#[pymethods]
impl PyBundle {
    /// Split bundle `⊕ O(a_i)` with roots given as multiples of the hyperplane class.
    #[staticmethod]
    fn from_chern_roots(base: &PyBaseModel, roots: Vec<i64>) -> PyResult<Self> {
        BundleModel::from_chern_roots(&base.inner, &roots)
            .map(|inner| PyBundle { inner })
            .map_err(err)
    }

    /// Segre classes `s_0..s_n` as multiples of `h^i`.
    #[staticmethod]
    fn from_segre(base: &PyBaseModel, rank: u32, segre: Vec<Rational>) -> PyResult<Self> {
        if base.inner.is_formal() {
            return Err(PyValueError::new_err("explicit Segre classes need a concrete base"));
        }
        let classes = segre
            .into_iter()
            .enumerate()
            .map(|(i, q)| GradedElement::hyperplane_power(&base.inner, i as u32, q))
            .collect();
        BundleModel::from_segre(&base.inner, rank, classes)
            .map(|inner| PyBundle { inner })
            .map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (base, rank, family = 0))]
    fn formal(base: &PyBaseModel, rank: u32, family: u32) -> PyResult<Self> {
        BundleModel::formal(&base.inner, rank, family)
            .map(|inner| PyBundle { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn trivial(base: &PyBaseModel, rank: u32) -> PyResult<Self> {
        BundleModel::trivial(&base.inner, rank)
            .map(|inner| PyBundle { inner })
            .map_err(err)
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.inner.rank()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn base(&self) -> PyBaseModel {
        PyBaseModel {
            inner: Arc::clone(self.inner.base()),
        }
    }

    fn segre<'py>(&self, py: Python<'py>, i: i64) -> PyResult<Bound<'py, PyDict>> {
        class_to_dict(py, &self.inner.segre(i))
    }

    fn chern<'py>(&self, py: Python<'py>, i: i64) -> PyResult<Bound<'py, PyDict>> {
        class_to_dict(py, &self.inner.chern(i))
    }

    fn __repr__(&self) -> String {
        format!("Bundle({})", self.inner.describe())
    }
}

#[pyclass(frozen, name = "PushforwardSeries", module = "plucker")]
struct PySeries {
    inner: PushforwardSeries,
}

#[pymethods]
impl PySeries {
    #[getter]
    fn method(&self) -> &'static str {
        self.inner.method.name()
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.inner.rank
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d
    }

    /// Component `m` is the degree-`m` part of the push-forward.
    fn components<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.inner.components.iter().map(|c| class_to_dict(py, c)).collect()
    }

    /// Push-forward of `θ^{d(r-d)+m}`.
    fn theta_power<'py>(&self, py: Python<'py>, m: usize) -> PyResult<Bound<'py, PyDict>> {
        if m >= self.inner.components.len() {
            return Err(PyValueError::new_err(format!("component {m} is beyond the truncation")));
        }
        class_to_dict(py, &self.inner.theta_power(m))
    }

    fn agrees_with(&self, other: &PySeries) -> bool {
        self.inner.agrees_with(&other.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.components.len()
    }

    fn __repr__(&self) -> String {
        let parts: Vec<String> = self.inner.components.iter().map(|c| c.to_string()).collect();
        format!("PushforwardSeries({}: [{}])", self.inner.method, parts.join(", "))
    }
}

#[pyclass(frozen, name = "DegreeResult", module = "plucker")]
struct PyDegreeResult {
    inner: DegreeResult,
}

#[pymethods]
impl PyDegreeResult {
    #[getter]
    fn degree(&self) -> Rational {
        self.inner.degree.clone()
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.inner.rank
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n
    }

    #[getter]
    fn base(&self) -> String {
        self.inner.base.clone()
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.inner.variant.name()
    }

    /// `[(k, contribution)]` over `|k| = n`.
    #[getter]
    fn breakdown(&self) -> Vec<(Vec<u32>, Rational)> {
        self.inner.breakdown.clone()
    }

    fn is_integer(&self) -> bool {
        self.inner.is_integer()
    }

    fn __repr__(&self) -> String {
        format!("DegreeResult({})", self.inner)
    }
}

#[pyfunction]
#[pyo3(signature = (bundle, d, method = "closed", variant = "proof"))]
fn ch_pushforward(bundle: &PyBundle, d: usize, method: &str, variant: &str) -> PyResult<PySeries> {
    let inner = pf::ch_pushforward(&bundle.inner, d, parse_method(method)?, parse_variant(variant)?).map_err(err)?;
    Ok(PySeries { inner })
}

#[pyfunction]
#[pyo3(signature = (bundle, d, variant = "proof"))]
fn plucker_degree(bundle: &PyBundle, d: usize, variant: &str) -> PyResult<PyDegreeResult> {
    let inner = degree::plucker_degree(&bundle.inner, d, parse_variant(variant)?).map_err(err)?;
    Ok(PyDegreeResult { inner })
}

#[pyfunction]
fn oracle_degree(bundle: &PyBundle, d: usize) -> PyResult<Rational> {
    degree::oracle_degree(&bundle.inner, d).map_err(err)
}

#[pyfunction]
fn fiber_degree_hook(r: u32, d: u32) -> PyResult<BigUint> {
    degree::fiber_degree_hook(r, d).map_err(err)
}

#[pyfunction]
fn oracle_pushforward_theta_pow<'py>(
    py: Python<'py>,
    bundle: &PyBundle,
    d: usize,
    power: u32,
) -> PyResult<Bound<'py, PyDict>> {
    class_to_dict(py, &core_theta_pow(&bundle.inner, d, power).map_err(err)?)
}

/// Push-forward of `ξ_0^{p_0} ... ξ_{d-1}^{p_{d-1}}` from the flag bundle.
#[pyfunction]
#[pyo3(signature = (bundle, p, method = "constant-term"))]
fn monomial_pushforward<'py>(
    py: Python<'py>,
    bundle: &PyBundle,
    p: Vec<u32>,
    method: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let g = match method {
        "constant-term" => pf::monomial_pushforward_ct(&p, &bundle.inner),
        "determinant" => pf::monomial_pushforward_det(&p, &bundle.inner),
        "flag-oracle" => FlagRing::new(&bundle.inner, p.len()).map(|ring| ring.coeff_xi(&ring.monomial(&p))),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown method {other:?} (expected constant-term, determinant or flag-oracle)"
            )))
        }
    }
    .map_err(err)?;
    class_to_dict(py, &g)
}

/// `Φ(∏ t_i^{k_i})` computed from the definition.
#[pyfunction]
fn phi_monomial(k: Vec<i64>) -> Rational {
    pf::phi_monomial_by_definition(&k)
}

#[pyfunction]
fn phi_eval_monomial(k: Vec<i64>) -> Rational {
    pf::phi_eval_monomial(&k)
}

#[pyfunction]
fn factorial_det_check(x: Vec<i64>) -> bool {
    pf::factorial_det_check(&x)
}

#[pyfunction]
fn syt_count(parts: Vec<u32>) -> PyResult<BigUint> {
    Ok(symfunc::syt_count(&Partition::new(parts).map_err(err)?))
}

/// Returns `(passed, cases, first_failure)`.
#[pyfunction]
#[pyo3(signature = (r, d, trials = 100, seed = suite::DEFAULT_SEED, form = "normalized"))]
fn gen_cauchy_check(r: usize, d: usize, trials: usize, seed: u64, form: &str) -> PyResult<(bool, usize, Option<String>)> {
    let form = match form {
        "literal" => CauchyForm::Literal,
        "normalized" => CauchyForm::ShuffleNormalized,
        other => return Err(PyValueError::new_err(format!("unknown form {other:?}"))),
    };
    let rep = symfunc::gen_cauchy_check(r, d, trials, seed, form, DEFAULT_SAMPLE_HEIGHT).map_err(err)?;
    Ok((rep.passed(), rep.cases, rep.failure))
}

/// Four-way agreement over the standard grid; returns `[(name, passed, failure)]`.
#[pyfunction]
#[pyo3(signature = (max_rank = 4))]
fn verify_grid(py: Python<'_>, max_rank: u32) -> PyResult<Vec<(String, bool, Option<String>)>> {
    let reports = py
        .detach(|| suite::run_grid(max_rank, suite::four_way_agreement))
        .map_err(err)?;
    Ok(reports.into_iter().map(|r| (r.name.clone(), r.passed(), r.failure)).collect())
}

#[pymodule]
fn plucker(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBaseModel>()?;
    m.add_class::<PyBundle>()?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyDegreeResult>()?;
    m.add_function(wrap_pyfunction!(ch_pushforward, m)?)?;
    m.add_function(wrap_pyfunction!(plucker_degree, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_degree, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_degree_hook, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_pushforward_theta_pow, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_pushforward, m)?)?;
    m.add_function(wrap_pyfunction!(phi_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(phi_eval_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(factorial_det_check, m)?)?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cauchy_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_grid, m)?)?;
    Ok(())
}
