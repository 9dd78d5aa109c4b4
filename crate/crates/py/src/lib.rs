use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use coxnet_core::approx;
use coxnet_core::net::{self, NetBuilder};
use coxnet_core::nongroup;
use coxnet_core::oracle;
use coxnet_core::polynomial;
use coxnet_core::report::NetReport;
use coxnet_core::{GroupType, Sample};

fn value_error(e: coxnet_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn group(label: &str) -> PyResult<GroupType> {
    label.parse().map_err(value_error)
}

fn sample(y: Vec<f64>) -> PyResult<Sample> {
    Sample::new(y).map_err(value_error)
}

type CentralSet = (usize, usize, f64, f64, (i64, i64));

/// A confidence net: sorted boundaries and exact interval probabilities.
#[pyclass(name = "ConfidenceNet", frozen)]
struct PyNet {
    inner: net::ConfidenceNet,
    n: usize,
    gf: Vec<u64>,
}

#[pymethods]
impl PyNet {
    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn boundaries(&self) -> Vec<f64> {
        self.inner.boundaries.clone()
    }

    /// Interval probabilities as `(numerator, denominator)` pairs.
    #[getter]
    fn probs(&self) -> Vec<(i64, i64)> {
        self.inner
            .probs
            .iter()
            .map(|p| (*p.numer(), *p.denom()))
            .collect()
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inner.merged.clone()
    }

    fn interval(&self, j: usize) -> PyResult<(f64, f64)> {
        if j >= self.inner.interval_count() {
            return Err(PyValueError::new_err(format!("no interval {j}")));
        }
        Ok(self.inner.interval(j))
    }

    /// Index and probability of the interval containing `theta`.
    fn covering_interval(&self, theta: f64) -> (usize, (i64, i64)) {
        let (j, p) = self.inner.covering_interval(theta);
        (j, (*p.numer(), *p.denom()))
    }

    /// `(lo_index, hi_index, lower, upper, (num, den))` of the central set.
    fn central_coverage_set(&self, alpha: f64) -> PyResult<CentralSet> {
        let s = self
            .inner
            .central_coverage_set(alpha)
            .map_err(value_error)?;
        Ok((
            s.lo_index,
            s.hi_index,
            s.lower,
            s.upper,
            (*s.prob.numer(), *s.prob.denom()),
        ))
    }

    fn to_json(&self) -> String {
        NetReport::new(&self.inner, self.n, self.gf.clone()).to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.interval_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "ConfidenceNet(kind={:?}, intervals={})",
            self.inner.kind.to_string(),
            self.inner.interval_count()
        )
    }
}

#[pyfunction]
fn confidence_net(group_label: &str, y: Vec<f64>) -> PyResult<PyNet> {
    let builder = NetBuilder::new(group(group_label)?).map_err(value_error)?;
    let n = y.len();
    let inner = builder.net(&sample(y)?).map_err(value_error)?;
    Ok(PyNet {
        inner,
        n,
        gf: builder.gf().to_vec(),
    })
}

#[pyfunction]
fn hartigan_net(y: Vec<f64>) -> PyResult<PyNet> {
    let n = y.len();
    let inner = net::hartigan_net(&sample(y)?).map_err(value_error)?;
    Ok(PyNet {
        inner,
        n,
        gf: vec![1; 1 << n],
    })
}

#[pyfunction]
fn nongroup_net(y: Vec<f64>) -> PyResult<PyNet> {
    let n = y.len();
    let inner = nongroup::nongroup_net(&sample(y)?).map_err(value_error)?;
    let gf = nongroup::nongroup_gf(n)
        .and_then(|p| p.to_u64_coeffs())
        .map_err(value_error)?;
    Ok(PyNet { inner, n, gf })
}

#[pyfunction]
fn boundaries(group_label: &str, y: Vec<f64>) -> PyResult<Vec<f64>> {
    net::boundaries(group(group_label)?, &sample(y)?).map_err(value_error)
}

#[pyfunction]
fn net_generating_function(group_label: &str) -> PyResult<Vec<BigInt>> {
    let p = polynomial::net_generating_function(group(group_label)?).map_err(value_error)?;
    Ok(p.coeffs().to_vec())
}

#[pyfunction]
fn poincare_polynomial(group_label: &str) -> PyResult<Vec<BigInt>> {
    let p = polynomial::poincare_polynomial(group(group_label)?).map_err(value_error)?;
    Ok(p.coeffs().to_vec())
}

#[pyfunction]
fn nongroup_gf(n: usize) -> PyResult<Vec<BigInt>> {
    let p = nongroup::nongroup_gf(n).map_err(value_error)?;
    Ok(p.coeffs().to_vec())
}

#[pyfunction]
fn degrees(group_label: &str) -> PyResult<Vec<usize>> {
    Ok(polynomial::degrees(group(group_label)?)
        .map_err(value_error)?
        .as_slice()
        .to_vec())
}

#[pyfunction]
fn live_root_count(group_label: &str) -> PyResult<usize> {
    let b = NetBuilder::new(group(group_label)?).map_err(value_error)?;
    Ok(b.root_system().live_roots().boundary_count)
}

#[pyfunction]
fn ray_direction(group_label: &str) -> PyResult<Vec<f64>> {
    Ok(NetBuilder::new(group(group_label)?)
        .map_err(value_error)?
        .ray_direction())
}

#[pyfunction]
#[pyo3(signature = (group_label, limit = oracle::DEFAULT_GROUP_LIMIT))]
fn length_histogram(py: Python<'_>, group_label: &str, limit: u64) -> PyResult<Vec<u64>> {
    let g = group(group_label)?;
    py.detach(|| oracle::length_histogram_with_limit(g, limit))
        .map(|h| h.into_counts())
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (group_label, limit = oracle::DEFAULT_GROUP_LIMIT))]
fn coset_min_length_histogram(py: Python<'_>, group_label: &str, limit: u64) -> PyResult<Vec<u64>> {
    let g = group(group_label)?;
    py.detach(|| oracle::coset_min_length_histogram_with_limit(g, limit))
        .map(|h| h.into_counts())
        .map_err(value_error)
}

/// Simulated coverage counts; `group_label` may also be `hartigan<n>` or `nongroup<n>`.
#[pyfunction]
#[pyo3(signature = (group_label, trials, seed, theta = 0.0))]
fn monte_carlo_coverage<'py>(
    py: Python<'py>,
    group_label: &str,
    trials: u64,
    seed: u64,
    theta: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let target: coxnet_core::cli::Target = group_label.parse().map_err(value_error)?;
    let h = py
        .detach(|| match target {
            coxnet_core::cli::Target::Group(g) => {
                oracle::monte_carlo_coverage(g, trials, seed, theta)
            }
            coxnet_core::cli::Target::Hartigan(Some(n)) => {
                oracle::hartigan_mc_at(n, trials, seed, theta)
            }
            coxnet_core::cli::Target::NonGroup(Some(n)) => {
                oracle::nongroup_mc_at(n, trials, seed, theta)
            }
            _ => Err(coxnet_core::Error::InvalidArgument(
                "give the sample size, e.g. hartigan3".into(),
            )),
        })
        .map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("counts", h.counts.clone())?;
    d.set_item("trials", h.trials)?;
    d.set_item("expected", h.expected.clone())?;
    d.set_item("z_scores", h.z_scores())?;
    d.set_item("max_abs_z", h.max_abs_z())?;
    Ok(d)
}

/// Exact moments and Edgeworth error summary for a group's net distribution.
#[pyfunction]
fn edgeworth<'py>(py: Python<'py>, group_label: &str) -> PyResult<Bound<'py, PyDict>> {
    let p = polynomial::net_generating_function(group(group_label)?).map_err(value_error)?;
    let m = approx::gf_moments(&p).map_err(value_error)?;
    let (approx_probs, err) = approx::edgeworth_for(&p).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("mu", m.mu.to_string())?;
    d.set_item("sigma2", m.sigma2.to_string())?;
    d.set_item("kappa4", m.kappa4.to_string())?;
    d.set_item("approx", approx_probs)?;
    d.set_item("exact", approx::exact_cell_probs(&p))?;
    d.set_item("sum", err.sum)?;
    d.set_item("max_abs_error", err.max_abs_error)?;
    d.set_item("rmse", err.rmse)?;
    Ok(d)
}

#[pymodule]
fn coxnet(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNet>()?;
    m.add_function(wrap_pyfunction!(confidence_net, m)?)?;
    m.add_function(wrap_pyfunction!(hartigan_net, m)?)?;
    m.add_function(wrap_pyfunction!(nongroup_net, m)?)?;
    m.add_function(wrap_pyfunction!(boundaries, m)?)?;
    m.add_function(wrap_pyfunction!(net_generating_function, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(nongroup_gf, m)?)?;
    m.add_function(wrap_pyfunction!(degrees, m)?)?;
    m.add_function(wrap_pyfunction!(live_root_count, m)?)?;
    m.add_function(wrap_pyfunction!(ray_direction, m)?)?;
    m.add_function(wrap_pyfunction!(length_histogram, m)?)?;
    m.add_function(wrap_pyfunction!(coset_min_length_histogram, m)?)?;
    m.add_function(wrap_pyfunction!(monte_carlo_coverage, m)?)?;
    m.add_function(wrap_pyfunction!(edgeworth, m)?)?;
    Ok(())
}
