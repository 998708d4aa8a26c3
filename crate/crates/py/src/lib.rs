//! Python bindings. Exact values cross the boundary as `fractions.Fraction`;
//! inputs may be `int`, `Fraction`, `float` (taken at its exact binary value)
//! or a string such as `"5/2"` or `"-0.125"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyList};
use trivol_core::formula::{self, classify, VolumeReport};
use trivol_core::mixedvol::ZValueReport;
use trivol_core::oracle;
use trivol_core::scalar::{fmt_exact, from_f64, parse_scalar, to_f64};
use trivol_core::{BoxDomain3, Scalar};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_scalar(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if obj.is_instance_of::<PyFloat>() {
        let x: f64 = obj.extract()?;
        return from_f64(x).ok_or_else(|| value_error(format!("non-finite value {x}")));
    }
    let text = obj.str()?.to_string();
    parse_scalar(&text).map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    cls.call1((fmt_exact(x),))
}

fn fractions<'py>(py: Python<'py>, xs: &[Scalar]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    xs.iter().map(|x| fraction(py, x)).collect()
}

fn pairs(obj: &Bound<'_, PyAny>) -> PyResult<[(Scalar, Scalar); 3]> {
    let items: Vec<Bound<'_, PyAny>> = obj.try_iter()?.collect::<PyResult<_>>()?;
    if items.len() != 3 {
        return Err(value_error(format!(
            "expected 3 pairs, got {}",
            items.len()
        )));
    }
    let parsed = items
        .iter()
        .map(|item| {
            let p: Vec<Bound<'_, PyAny>> = item.try_iter()?.collect::<PyResult<_>>()?;
            match p.as_slice() {
                [a, b] => Ok((to_scalar(a)?, to_scalar(b)?)),
                _ => Err(value_error("each entry must be a pair")),
            }
        })
        .collect::<PyResult<Vec<_>>>()?;
    Ok(parsed.try_into().expect("length checked"))
}

/// A box `[lo1,hi1] x [lo2,hi2] x [lo3,hi3]` with positive side lengths.
#[pyclass(frozen, skip_from_py_object, module = "trivol")]
#[derive(Clone)]
pub struct Domain {
    inner: BoxDomain3,
}

impl Domain {
    fn report(&self) -> VolumeReport {
        formula::hull_volume_any(&self.inner)
    }
}

#[pymethods]
impl Domain {
    #[new]
    fn new(bounds: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = BoxDomain3::from_bounds(pairs(bounds)?).map_err(value_error)?;
        Ok(Domain { inner })
    }

    /// Builds a domain from `(center, half_length)` pairs.
    #[staticmethod]
    fn from_centers(intervals: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = BoxDomain3::from_centers(pairs(intervals)?).map_err(value_error)?;
        Ok(Domain { inner })
    }

    #[getter]
    fn bounds<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
        self.inner
            .bounds()
            .iter()
            .map(|(lo, hi)| Ok((fraction(py, lo)?, fraction(py, hi)?)))
            .collect()
    }

    #[getter]
    fn centers<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let c: Vec<Scalar> = (0..3).map(|i| self.inner.center(i).clone()).collect();
        fractions(py, &c)
    }

    #[getter]
    fn half_lengths<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let l: Vec<Scalar> = (0..3).map(|i| self.inner.half_length(i).clone()).collect();
        fractions(py, &l)
    }

    #[getter]
    fn ratios<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, &self.inner.ratios())
    }

    /// Returns `(canonical_domain, signs, permutation)`; `permutation[i]` is
    /// the zero-based canonical slot of variable `i`.
    fn normalize(&self) -> (Domain, [i8; 3], [usize; 3]) {
        let (c, n) = self.inner.normalize();
        (
            Domain {
                inner: c.into_inner(),
            },
            n.signs,
            n.permutation,
        )
    }

    /// Case number `1..=6` of the canonical form.
    fn case(&self) -> u8 {
        classify(&self.inner.normalize().0).id()
    }

    fn volume<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.report().closed_form)
    }

    fn breakdown<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        breakdown_dict(py, &self.report())
    }

    /// Exact volume from slice-hull quadrature.
    fn quadrature<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &oracle::oracle_volume_quadrature(&self.inner))
    }

    fn quadrature_f64(&self) -> f64 {
        oracle::oracle_volume_quadrature_f64(&self.inner)
    }

    #[pyo3(signature = (samples, seed = 0))]
    fn monte_carlo<'py>(
        &self,
        py: Python<'py>,
        samples: u64,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        if samples == 0 {
            return Err(value_error("samples must be positive"));
        }
        let mc = py.detach(|| oracle::oracle_volume_montecarlo(&self.inner, samples, seed));
        let d = PyDict::new(py);
        d.set_item("estimate", mc.estimate)?;
        d.set_item("std_error", mc.std_error)?;
        d.set_item("samples", mc.samples)?;
        d.set_item("hits", mc.hits)?;
        d.set_item("seed", mc.seed)?;
        d.set_item("bounding_volume", mc.bounding_volume)?;
        Ok(d)
    }

    fn __float__(&self) -> f64 {
        to_f64(&self.report().closed_form)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        let parts: Vec<String> = self
            .inner
            .bounds()
            .iter()
            .map(|(lo, hi)| format!("({}, {})", fmt_exact(lo), fmt_exact(hi)))
            .collect();
        format!("Domain([{}])", parts.join(", "))
    }
}

fn z_list<'py>(py: Python<'py>, z: &ZValueReport) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for e in &z.entries {
        let d = PyDict::new(py);
        d.set_item("normal", e.normal)?;
        d.set_item("value", fraction(py, &e.value)?)?;
        d.set_item("chosen_vertex", e.chosen_vertex)?;
        d.set_item("predicted_vertex", e.predicted_vertex)?;
        d.set_item("branch", e.branch)?;
        out.append(d)?;
    }
    Ok(out)
}

fn breakdown_dict<'py>(py: Python<'py>, r: &VolumeReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("case", r.case.id())?;
    for (key, x) in [
        ("vol_q", &r.vol_q),
        ("vol_r", &r.vol_r),
        ("v_qqr", &r.v_qqr),
        ("v_qrr", &r.v_qrr),
        ("closed_form", &r.closed_form),
        ("assembled", &r.assembled),
    ] {
        d.set_item(key, fraction(py, x)?)?;
    }
    d.set_item(
        "subcases",
        (r.subcases.qqr, r.subcases.qrr, r.subcases.volq),
    )?;
    d.set_item("subcases_match_table", r.subcases_match_table())?;
    d.set_item("signs", r.normalization.signs)?;
    d.set_item("permutation", r.normalization.permutation)?;
    d.set_item("z_qqr", z_list(py, &r.z_qqr)?)?;
    d.set_item("z_qrr", z_list(py, &r.z_qrr)?)?;
    Ok(d)
}

fn domain_of(bounds: &Bound<'_, PyAny>) -> PyResult<Domain> {
    match bounds.cast::<Domain>() {
        Ok(d) => Ok(d.get().clone()),
        Err(_) => Domain::new(bounds),
    }
}

/// Exact hull volume of a `Domain` or a list of three `(lo, hi)` pairs.
#[pyfunction]
fn volume<'py>(py: Python<'py>, domain: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    domain_of(domain)?.volume(py)
}

#[pyfunction]
fn classify_case(domain: &Bound<'_, PyAny>) -> PyResult<u8> {
    Ok(domain_of(domain)?.case())
}

#[pyfunction]
fn breakdown<'py>(py: Python<'py>, domain: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    domain_of(domain)?.breakdown(py)
}

#[pyfunction]
fn oracle_quadrature<'py>(
    py: Python<'py>,
    domain: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    domain_of(domain)?.quadrature(py)
}

#[pyfunction]
#[pyo3(signature = (domain, samples, seed = 0))]
fn oracle_monte_carlo<'py>(
    py: Python<'py>,
    domain: &Bound<'py, PyAny>,
    samples: u64,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    domain_of(domain)?.monte_carlo(py, samples, seed)
}

#[pymodule]
fn trivol(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Domain>()?;
    m.add_function(wrap_pyfunction!(volume, m)?)?;
    m.add("classify", wrap_pyfunction!(classify_case, m)?)?;
    m.add_function(wrap_pyfunction!(breakdown, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_monte_carlo, m)?)?;
    Ok(())
}
