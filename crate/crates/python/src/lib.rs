//! Python bindings: Betti tables, equivariant descriptors, brute-force Tor and the
//! verification suites.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use permsyz::betti::{self, Method};
use permsyz::combinat::{hook_dim as core_hook_dim, lr_coefficients as core_lr, CharacterTable, Partition};
use permsyz::hilbert::{hf_closed as core_hf_closed, hf_oracle as core_hf_oracle, NamedModule};
use permsyz::orbitmod::{Ideal, MultidegreePattern};
use permsyz::render::{render_betti, render_equivariant, render_report, EquivariantDoc, Format};
use permsyz::reps::VirtualRep;
use permsyz::resolve::{self, Resolver};
use permsyz::verify::{run_suite, Report, Suite, VerifyOptions};
use permsyz::Error;

create_exception!(permsyz, ResourceBoundError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::DegreeLimit { .. } => ResourceBoundError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn json<T: serde::Serialize>(x: &T) -> PyResult<String> {
    serde_json::to_string(x).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Graded Betti numbers `beta[p, q]`.
#[pyclass(name = "BettiTable", module = "permsyz", frozen)]
struct PyBettiTable(betti::BettiTable);

#[pymethods]
impl PyBettiTable {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn ideal(&self) -> String {
        self.0.ideal.to_string()
    }

    #[getter]
    fn provenance(&self) -> String {
        self.0.provenance.to_string()
    }

    fn get(&self, p: usize, q: usize) -> BigInt {
        self.0.get(p, q)
    }

    /// Nonzero entries as `{(p, q): dim}`.
    fn entries(&self) -> BTreeMap<(usize, usize), BigInt> {
        self.0.entries().map(|(p, q, v)| ((p, q), v.clone())).collect()
    }

    #[pyo3(signature = (format = "json"))]
    fn render(&self, format: &str) -> PyResult<String> {
        render_betti(&self.0, parse::<Format>(format)?).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        json(&self.0)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s)
            .map(PyBettiTable)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("BettiTable(n={}, ideal={}, provenance={}, entries={})", self.0.n, self.0.ideal, self.0.provenance, self.0.len())
    }
}

/// A virtual representation of `S_n` or `S_n x S_2`.
#[pyclass(name = "VirtualRep", module = "permsyz", frozen)]
struct PyVirtualRep(VirtualRep);

#[pymethods]
impl PyVirtualRep {
    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn has_s2(&self) -> bool {
        self.0.has_s2()
    }

    fn dim(&self) -> i64 {
        self.0.dim()
    }

    fn is_effective(&self) -> bool {
        self.0.is_effective()
    }

    /// `[(partition, s2_label_or_None, multiplicity)]`.
    fn terms(&self) -> Vec<(Vec<usize>, Option<String>, i64)> {
        self.0
            .terms()
            .map(|(irr, m)| (irr.shape.parts().to_vec(), irr.s2.map(|l| l.to_string()), m))
            .collect()
    }

    fn multiplicity(&self, shape: Vec<usize>) -> PyResult<i64> {
        Ok(self.0.multiplicity(&partition(shape)?, None))
    }

    fn restrict_to_sn(&self) -> Self {
        PyVirtualRep(self.0.restrict_to_sn())
    }

    fn to_json(&self) -> PyResult<String> {
        json(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }
}

/// Descriptor-based equivariant Betti numbers.
#[pyclass(name = "Equivariant", module = "permsyz", frozen)]
struct PyEquivariant(EquivariantDoc);

#[pymethods]
impl PyEquivariant {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    /// `[(p, q, dim, [orbit module strings], decomposition)]`.
    fn entries(&self) -> Vec<(usize, usize, BigInt, Vec<String>, PyVirtualRep)> {
        self.0
            .entries
            .iter()
            .map(|e| {
                (
                    e.p,
                    e.q,
                    e.dim.clone(),
                    e.orbits.iter().map(ToString::to_string).collect(),
                    PyVirtualRep(e.decomposition.clone()),
                )
            })
            .collect()
    }

    #[pyo3(signature = (format = "json"))]
    fn render(&self, format: &str) -> PyResult<String> {
        render_equivariant(&self.0, parse::<Format>(format)?).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        json(&self.0)
    }
}

/// Outcome of a verification suite.
#[pyclass(name = "Report", module = "permsyz", frozen)]
struct PyReport(Report);

#[pymethods]
impl PyReport {
    #[getter]
    fn command(&self) -> String {
        self.0.command.clone()
    }

    fn ok(&self) -> bool {
        self.0.ok()
    }

    fn summary(&self) -> BTreeMap<&'static str, usize> {
        let s = &self.0.summary;
        BTreeMap::from([
            ("total", s.total),
            ("match", s.matched),
            ("mismatch", s.mismatch),
            ("skip", s.skip),
            ("documented-discrepancy", s.documented_discrepancy),
        ])
    }

    /// `[(id, status, expected, actual)]`.
    fn items(&self) -> Vec<(String, String, String, String)> {
        self.0
            .items
            .iter()
            .map(|it| (it.id.clone(), it.status.to_string(), it.expected.clone(), it.actual.clone()))
            .collect()
    }

    #[pyo3(signature = (format = "json"))]
    fn render(&self, format: &str) -> PyResult<String> {
        render_report(&self.0, parse::<Format>(format)?).map_err(err)
    }
}

#[pyfunction]
#[pyo3(signature = (n, ideal = "P", method = "summation", max_degree = None))]
fn betti_table(n: usize, ideal: &str, method: &str, max_degree: Option<usize>) -> PyResult<PyBettiTable> {
    let (ideal, method) = (parse::<Ideal>(ideal)?, parse::<Method>(method)?);
    let t = if method == Method::Resolve {
        resolve::betti_table(n, ideal, max_degree)
    } else {
        betti::betti_table(n, ideal, method)
    };
    t.map(PyBettiTable).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, ideal = "P", g2 = false))]
fn equivariant(n: usize, ideal: &str, g2: bool) -> PyResult<PyEquivariant> {
    EquivariantDoc::build(n, parse(ideal)?, g2).map(PyEquivariant).map_err(err)
}

/// `dim Tor_p(I)_a` by Koszul homology.
#[pyfunction]
fn tor_dim(ideal: &str, p: usize, a: Vec<usize>) -> PyResult<usize> {
    resolve::tor_dim(parse(ideal)?, p, &a).map_err(err)
}

/// Brute-force `Tor_p` on the orbit of the pattern `(2^a, 1^b, 0^*)`; with `c` the bidegree
/// `(a+b-c, a+c)` is fixed, otherwise all bidegrees are summed.
#[pyfunction]
#[pyo3(signature = (ideal, n, p, a, b, c = None))]
fn tor_representation(ideal: &str, n: usize, p: usize, a: usize, b: usize, c: Option<usize>) -> PyResult<PyVirtualRep> {
    let pattern = MultidegreePattern::abc(n, a, b, c).map_err(err)?;
    Resolver::new(n, parse(ideal)?)
        .tor_representation(p, &pattern)
        .map(PyVirtualRep)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (suite, n = 3, n_max = 10, ideal = "P", max_degree = None, unsafe_large = false))]
fn verify(
    py: Python<'_>,
    suite: &str,
    n: usize,
    n_max: usize,
    ideal: &str,
    max_degree: Option<usize>,
    unsafe_large: bool,
) -> PyResult<PyReport> {
    let suite: Suite = parse(suite)?;
    let opts = VerifyOptions {
        n,
        n_max,
        max_degree,
        ideal: parse(ideal)?,
        unsafe_large,
    };
    py.detach(|| run_suite(suite, &opts)).map(PyReport).map_err(err)
}

#[pyfunction]
fn hf_closed(module: &str, a: Vec<usize>) -> PyResult<u64> {
    Ok(core_hf_closed(parse::<NamedModule>(module)?, &a))
}

#[pyfunction]
fn hf_oracle(module: &str, a: Vec<usize>) -> PyResult<u64> {
    core_hf_oracle(parse::<NamedModule>(module)?, &a).map_err(err)
}

#[pyfunction]
fn hook_dim(shape: Vec<usize>) -> PyResult<u64> {
    Ok(core_hook_dim(&partition(shape)?))
}

/// `[(shape, coefficient)]` for the nonzero Littlewood-Richardson coefficients.
#[pyfunction]
fn lr_coefficients(mu: Vec<usize>, nu: Vec<usize>) -> PyResult<Vec<(Vec<usize>, u64)>> {
    Ok(core_lr(&partition(mu)?, &partition(nu)?)
        .into_iter()
        .map(|(l, c)| (l.parts().to_vec(), c))
        .collect())
}

/// `(shapes, class_sizes, values)` with `values[i][j]` the character of shape `i` on class `j`.
#[pyfunction]
fn character_table(n: usize) -> (Vec<Vec<usize>>, Vec<u64>, Vec<Vec<i64>>) {
    let t = CharacterTable::new(n);
    let k = t.shapes().len();
    (
        t.shapes().iter().map(|s| s.parts().to_vec()).collect(),
        t.class_sizes().to_vec(),
        (0..k).map(|i| (0..k).map(|j| t.value(i, j)).collect()).collect(),
    )
}

#[pymodule]
#[pyo3(name = "permsyz")]
pub fn permsyz_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", permsyz::verify::VERSION)?;
    m.add("ResourceBoundError", m.py().get_type::<ResourceBoundError>())?;
    m.add_class::<PyBettiTable>()?;
    m.add_class::<PyVirtualRep>()?;
    m.add_class::<PyEquivariant>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(betti_table, m)?)?;
    m.add_function(wrap_pyfunction!(equivariant, m)?)?;
    m.add_function(wrap_pyfunction!(tor_dim, m)?)?;
    m.add_function(wrap_pyfunction!(tor_representation, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(hf_closed, m)?)?;
    m.add_function(wrap_pyfunction!(hf_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(hook_dim, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    Ok(())
}
