//! Python bindings for `regen_core`. Rationals cross the boundary as
//! `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use regen_core::codes::{build_glued, GlueOptions, DEFAULT_FIELD_ORDER, DEFAULT_MAX_GLUE_NODES};
use regen_core::exactmath::{parse_rational, to_exact_string};
use regen_core::gf::PrimeField;
use regen_core::{simulate, tradeoff, Rational, SystemParams};

fn err(e: regen_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn params(n: usize, k: usize, d: usize) -> PyResult<SystemParams> {
    SystemParams::new(n, k, d).map_err(err)
}

fn to_fraction<'py>(py: Python<'py>, x: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((to_exact_string(x),))
}

fn from_py(py: Python<'_>, obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let frac = py.import("fractions")?.getattr("Fraction")?.call1((obj,))?;
    let s: String = frac.str()?.extract()?;
    parse_rational(&s).map_err(err)
}

/// A storage/bandwidth pair per unit file size.
#[pyclass(frozen, name = "TradeoffPoint")]
struct PyTradeoffPoint {
    inner: tradeoff::TradeoffPoint,
}

#[pymethods]
impl PyTradeoffPoint {
    #[getter]
    fn alpha<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.inner.alpha)
    }

    #[getter]
    fn gamma<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.inner.gamma)
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        self.inner.provenance.label()
    }

    #[getter]
    fn khat(&self) -> Option<usize> {
        self.inner.provenance.k_hat()
    }

    fn __repr__(&self) -> String {
        format!(
            "TradeoffPoint(alpha={}, gamma={}, provenance={})",
            self.inner.alpha, self.inner.gamma, self.inner.provenance
        )
    }
}

fn wrap(p: tradeoff::TradeoffPoint) -> PyTradeoffPoint {
    PyTradeoffPoint { inner: p }
}

#[pyfunction]
fn binomial(py: Python<'_>, a: u64, b: i64) -> PyResult<Bound<'_, PyAny>> {
    let v = regen_core::exactmath::binomial(a, b).to_string();
    py.import("builtins")?.getattr("int")?.call1((v,))
}

#[pyfunction]
fn msr_point(n: usize, k: usize, d: usize) -> PyResult<PyTradeoffPoint> {
    Ok(wrap(tradeoff::msr_point(&params(n, k, d)?)))
}

#[pyfunction]
fn mbr_point(n: usize, k: usize, d: usize) -> PyResult<PyTradeoffPoint> {
    Ok(wrap(tradeoff::mbr_point(&params(n, k, d)?)))
}

#[pyfunction]
fn construction1_point(n: usize, k: usize, d: usize, khat: usize) -> PyResult<PyTradeoffPoint> {
    tradeoff::construction1_point(&params(n, k, d)?, khat)
        .map(wrap)
        .map_err(err)
}

#[pyfunction]
fn construction2_point(n: usize, k: usize, d: usize, khat: usize) -> PyResult<PyTradeoffPoint> {
    tradeoff::construction2_point(&params(n, k, d)?, khat)
        .map(wrap)
        .map_err(err)
}

#[pyfunction]
fn baseline_point(n: usize, k: usize, d: usize, khat: usize) -> PyResult<PyTradeoffPoint> {
    tradeoff::baseline_point(&params(n, k, d)?, khat)
        .map(wrap)
        .map_err(err)
}

#[pyfunction]
fn functional_capacity<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    d: usize,
    alpha: &Bound<'py, PyAny>,
    gamma: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let p = params(n, k, d)?;
    let v = tradeoff::functional_capacity(&p, &from_py(py, alpha)?, &from_py(py, gamma)?);
    to_fraction(py, &v)
}

#[pyfunction]
fn min_functional_gamma<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    d: usize,
    alpha: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let p = params(n, k, d)?;
    let v = tradeoff::min_functional_gamma(&p, &from_py(py, alpha)?).map_err(err)?;
    to_fraction(py, &v)
}

#[pyfunction]
fn construction2_file_size(
    py: Python<'_>,
    n: usize,
    k: usize,
    d: usize,
    khat: usize,
) -> PyResult<Bound<'_, PyAny>> {
    let p = params(n, k, d)?;
    let small = tradeoff::match_small_code(&p, khat, tradeoff::ParityRule::Repair).map_err(err)?;
    let v = tradeoff::construction2_file_size(&p, &small).map_err(err)?;
    to_fraction(py, &v)
}

#[pyfunction]
fn mk_oracle(
    py: Python<'_>,
    n: usize,
    k: usize,
    d: usize,
    khat: usize,
) -> PyResult<Bound<'_, PyAny>> {
    let v = simulate::mk_oracle(&params(n, k, d)?, khat).map_err(err)?;
    to_fraction(py, &v)
}

/// Hull vertices of the combined inner bound (both constructions, MSR, MBR).
#[pyfunction]
fn inner_bound_hull(n: usize, k: usize, d: usize) -> PyResult<Vec<PyTradeoffPoint>> {
    let region = tradeoff::theorem2_region(&params(n, k, d)?).map_err(err)?;
    Ok(region
        .hull_vertices()
        .map_err(err)?
        .into_iter()
        .map(wrap)
        .collect())
}

/// A concrete glued code: one copy of the small MSR code plus empty nodes
/// per permutation of the node labels.
#[pyclass(name = "GluedCode")]
struct PyGluedCode {
    inner: regen_core::codes::GluedCode,
}

#[pymethods]
impl PyGluedCode {
    #[new]
    #[pyo3(signature = (n, khat, seed=0, field=DEFAULT_FIELD_ORDER, max_nodes=DEFAULT_MAX_GLUE_NODES))]
    fn new(n: usize, khat: usize, seed: u64, field: u32, max_nodes: usize) -> PyResult<Self> {
        let f = PrimeField::new(field).map_err(err)?;
        let opts = GlueOptions { seed, max_nodes };
        Ok(PyGluedCode {
            inner: build_glued(n, khat, f, &opts).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn copies(&self) -> usize {
        self.inner.copies.len()
    }

    fn node_contents(&self, node: usize) -> PyResult<Vec<u32>> {
        if node >= self.inner.n {
            return Err(PyValueError::new_err(format!("no node {node}")));
        }
        Ok(self.inner.node_contents(node))
    }

    fn files(&self) -> Vec<Vec<u32>> {
        self.inner.copies.iter().map(|c| c.file.clone()).collect()
    }

    fn reconstruct(&self, positions: Vec<usize>) -> PyResult<Vec<Vec<u32>>> {
        self.inner.reconstruct(&positions).map_err(err)
    }

    /// Returns `(total_subsymbols, per_copy_subsymbols)`.
    fn repair(&self, failed: usize, helpers: Vec<usize>) -> PyResult<(usize, Vec<usize>)> {
        let out = self.inner.repair(failed, &helpers).map_err(err)?;
        Ok((out.total_subsymbols, out.per_copy_subsymbols))
    }

    fn subset_information<'py>(
        &self,
        py: Python<'py>,
        positions: Vec<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &simulate::subset_information(&self.inner, &positions))
    }

    /// Exhaustive repair sweep at degree `d`.
    fn sweep<'py>(&self, py: Python<'py>, d: usize) -> PyResult<Bound<'py, PyDict>> {
        let ledger = simulate::sweep_repairs(&self.inner, d).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("alpha", to_fraction(py, &ledger.alpha)?)?;
        out.set_item("gamma", to_fraction(py, &ledger.gamma)?)?;
        out.set_item("nonempty_gamma", to_fraction(py, &ledger.nonempty_gamma)?)?;
        let node_gamma = ledger
            .node_gamma
            .iter()
            .map(|g| to_fraction(py, g))
            .collect::<PyResult<Vec<_>>>()?;
        out.set_item("node_gamma", node_gamma)?;
        out.set_item("repairs", ledger.records.len())?;
        Ok(out)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }
}

#[pymodule]
fn regen(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTradeoffPoint>()?;
    m.add_class::<PyGluedCode>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(msr_point, m)?)?;
    m.add_function(wrap_pyfunction!(mbr_point, m)?)?;
    m.add_function(wrap_pyfunction!(construction1_point, m)?)?;
    m.add_function(wrap_pyfunction!(construction2_point, m)?)?;
    m.add_function(wrap_pyfunction!(baseline_point, m)?)?;
    m.add_function(wrap_pyfunction!(functional_capacity, m)?)?;
    m.add_function(wrap_pyfunction!(min_functional_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(construction2_file_size, m)?)?;
    m.add_function(wrap_pyfunction!(mk_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(inner_bound_hull, m)?)?;
    Ok(())
}
