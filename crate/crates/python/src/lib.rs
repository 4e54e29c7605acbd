//! Python bindings: partitions and their statistics, exact character tables,
//! the cut/basic-set/Cartan verdicts, partition generating functions, and
//! the k-Schur verification harness.

use num_bigint::BigInt;
use pyo3::basic::CompareOp;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use symchar_core::basic_sets::{self, Cut};
use symchar_core::char_tables::{self, CharTable, PermTable};
use symchar_core::error::Error;
use symchar_core::kschur;
use symchar_core::linalg::IntMatrix;
use symchar_core::partitions::{self, PartSet, Partition};
use symchar_core::reg_sing;
use symchar_core::report::{CheckKind, CheckStatus, Report};
use symchar_core::series;

fn err(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Accepts a Partition object, a partition string ("1^2,3"), or a list of
/// parts.
fn extract_partition(obj: &Bound<'_, PyAny>) -> PyResult<Partition> {
    if let Ok(p) = obj.extract::<PyRef<PyPartition>>() {
        return Ok(p.inner.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    if let Ok(parts) = obj.extract::<Vec<u32>>() {
        return Ok(Partition::new(parts));
    }
    Err(PyValueError::new_err(
        "expected a Partition, a partition string, or a list of parts",
    ))
}

fn parse_set(set: &str) -> PyResult<PartSet> {
    set.parse().map_err(err)
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn label_strings(labels: &[Partition]) -> Vec<String> {
    labels.iter().map(|l| l.to_string()).collect()
}

fn report_to_dict<'py>(py: Python<'py>, r: &Report) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("subject", &r.subject)?;
    d.set_item("passed", r.passed())?;
    let checks = PyList::empty(py);
    for c in &r.checks {
        let cd = PyDict::new(py);
        cd.set_item("name", &c.name)?;
        cd.set_item(
            "kind",
            match c.kind {
                CheckKind::Proved => "proved",
                CheckKind::Observed => "observed",
            },
        )?;
        cd.set_item(
            "status",
            match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::NotApplicable => "not_applicable",
            },
        )?;
        let w = PyDict::new(py);
        for (k, v) in &c.witnesses {
            w.set_item(k, v)?;
        }
        cd.set_item("witnesses", w)?;
        checks.append(cd)?;
    }
    d.set_item("checks", checks)?;
    let notes = PyDict::new(py);
    for (k, v) in &r.notes {
        notes.set_item(k, v)?;
    }
    d.set_item("notes", notes)?;
    Ok(d)
}

/// An integer partition in canonical decreasing order.
#[pyclass(frozen, name = "Partition")]
struct PyPartition {
    inner: Partition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(spec: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyPartition {
            inner: extract_partition(spec)?,
        })
    }

    /// Parts in decreasing order.
    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    /// a = prod i^m_i.
    fn a(&self) -> BigInt {
        self.inner.stats().a
    }

    /// b = prod m_i!.
    fn b(&self) -> BigInt {
        self.inner.stats().b
    }

    /// z = a*b, the centralizer order of the cycle type.
    fn z(&self) -> BigInt {
        self.inner.stats().z
    }

    /// Map part size -> multiplicity.
    fn multiplicities<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (i, m) in self.inner.multiplicities() {
            d.set_item(i, m)?;
        }
        Ok(d)
    }

    fn is_k_bounded(&self, k: u32) -> bool {
        self.inner.is_k_bounded(k)
    }

    fn is_regular(&self, ell: u32) -> bool {
        self.inner.is_regular(ell)
    }

    fn is_class_regular(&self, ell: u32) -> bool {
        self.inner.is_class_regular(ell)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition(\"{}\")", self.inner)
    }

    fn __richcmp__(&self, other: PyRef<'_, PyPartition>, op: CompareOp) -> bool {
        op.matches(self.inner.cmp(&other.inner))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// All partitions of n with parts in the given set, in canonical order.
#[pyfunction]
#[pyo3(signature = (n, set="all"))]
fn enumerate_partitions(n: u32, set: &str) -> PyResult<Vec<PyPartition>> {
    let set = parse_set(set)?;
    Ok(partitions::enumerate(n, &set)
        .into_iter()
        .map(|inner| PyPartition { inner })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (n, set="all"))]
fn partition_count(n: u32, set: &str) -> PyResult<u64> {
    Ok(partitions::count(n, &parse_set(set)?))
}

/// chi^lambda on the class of cycle type mu.
#[pyfunction]
fn character_value(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    char_tables::character_value(&extract_partition(lam)?, &extract_partition(mu)?).map_err(err)
}

/// xi^lambda on the class of cycle type mu.
#[pyfunction]
fn permutation_value(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    char_tables::permutation_value(&extract_partition(lam)?, &extract_partition(mu)?).map_err(err)
}

/// The character table of S_n: (labels, rows).
#[pyfunction]
fn char_table(n: u32) -> PyResult<(Vec<String>, Vec<Vec<BigInt>>)> {
    let t = CharTable::build(n).map_err(err)?;
    Ok((label_strings(t.labels()), matrix_rows(t.values())))
}

/// The permutation character table of S_n: (labels, rows).
#[pyfunction]
fn perm_table(n: u32) -> PyResult<(Vec<String>, Vec<Vec<BigInt>>)> {
    let t = PermTable::build(n).map_err(err)?;
    Ok((label_strings(t.labels()), matrix_rows(t.values())))
}

#[pyfunction]
fn centralizer_orders(n: u32) -> PyResult<Vec<BigInt>> {
    let t = CharTable::build(n).map_err(err)?;
    Ok(t.centralizer_orders())
}

/// The four submatrices of the character table cut by alpha ("ALL" allowed).
#[pyfunction]
fn split_table<'py>(py: Python<'py>, n: u32, alpha: &str) -> PyResult<Bound<'py, PyDict>> {
    let t = CharTable::build(n).map_err(err)?;
    let cut = Cut::parse(alpha, n).map_err(err)?;
    let sp = basic_sets::split(&t, &cut).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("small_labels", label_strings(&sp.small_labels))?;
    d.set_item("large_labels", label_strings(&sp.large_labels))?;
    d.set_item("x_small", matrix_rows(&sp.x_small))?;
    d.set_item("x_large", matrix_rows(&sp.x_large))?;
    d.set_item("xbar_small", matrix_rows(&sp.xbar_small))?;
    d.set_item("xbar_large", matrix_rows(&sp.xbar_large))?;
    Ok(d)
}

/// Jacobi-minor identity check on the character table of S_n for the given
/// row/column selections.
#[pyfunction]
fn jacobi_check(n: u32, rows: Vec<usize>, cols: Vec<usize>) -> PyResult<bool> {
    let t = CharTable::build(n).map_err(err)?;
    let delta = t.centralizer_orders();
    basic_sets::jacobi_check(t.values(), &delta, &rows, &cols).map_err(err)
}

/// Determinant / SNF / basic-set / Cartan checks; one report per cut
/// (every cut plus ALL when alpha is omitted).
#[pyfunction]
#[pyo3(signature = (n, alpha=None))]
fn verify_cuts<'py>(py: Python<'py>, n: u32, alpha: Option<&str>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let t = CharTable::build(n).map_err(err)?;
    let cuts: Vec<Cut> = match alpha {
        Some(a) => vec![Cut::parse(a, n).map_err(err)?],
        None => {
            let mut cuts: Vec<Cut> = partitions::enumerate(n, &PartSet::All)
                .into_iter()
                .map(Cut::Alpha)
                .collect();
            cuts.push(Cut::Top);
            cuts
        }
    };
    let mut out = Vec::new();
    for cut in &cuts {
        let report = basic_sets::verify_theorems(&t, cut).map_err(err)?;
        out.push(report_to_dict(py, &report)?);
    }
    Ok(out)
}

/// Cartan matrices for one cut, with determinants and the predicted quotient.
#[pyfunction]
fn cartan<'py>(py: Python<'py>, n: u32, alpha: &str) -> PyResult<Bound<'py, PyDict>> {
    let t = CharTable::build(n).map_err(err)?;
    let cut = Cut::parse(alpha, n).map_err(err)?;
    let rep = basic_sets::cartan_report(&t, &cut).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("c_small", matrix_rows(&rep.c_small))?;
    d.set_item("c_large", matrix_rows(&rep.c_large))?;
    d.set_item("det_small", rep.det_small)?;
    d.set_item("det_large", rep.det_large)?;
    d.set_item("predicted_num", rep.predicted_num)?;
    d.set_item("predicted_den", rep.predicted_den)?;
    Ok(d)
}

/// Regular/singular table checks for modulus ell.
#[pyfunction]
fn verify_regular_singular<'py>(py: Python<'py>, n: u32, ell: u32) -> PyResult<Bound<'py, PyDict>> {
    let t = CharTable::build(n).map_err(err)?;
    let report = reg_sing::verify_section5(&t, ell).map_err(err)?;
    report_to_dict(py, &report)
}

/// Coefficients of P_S(q) up to the given order.
#[pyfunction]
fn partition_series(set: &str, order: u32) -> PyResult<Vec<BigInt>> {
    Ok(series::p_series(&parse_set(set)?, order).coeffs().to_vec())
}

/// Coefficients of T_S(q).
#[pyfunction]
fn divisor_series(set: &str, order: u32) -> PyResult<Vec<BigInt>> {
    Ok(series::t_series(&parse_set(set)?, order).coeffs().to_vec())
}

/// Coefficients of L_S(q) = P_S * T_S.
#[pyfunction]
fn part_count_series(set: &str, order: u32) -> PyResult<Vec<BigInt>> {
    Ok(series::l_series(&parse_set(set)?, order).coeffs().to_vec())
}

/// Coefficients of A_{S,p} and B_{S,p}: the p-exponents of a_{P(n,S)} and
/// b_{P(n,S)}.
#[pyfunction]
fn valuation_series(set: &str, p: u32, order: u32) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    let (a, b) = series::ab_series(&parse_set(set)?, p, order).map_err(err)?;
    Ok((a.coeffs().to_vec(), b.coeffs().to_vec()))
}

/// The identity/inequality report for one (S, p).
#[pyfunction]
#[pyo3(signature = (set, p, order=40, enum_cap=30))]
fn verify_series<'py>(
    py: Python<'py>,
    set: &str,
    p: u32,
    order: u32,
    enum_cap: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let report = series::verify_section4(&parse_set(set)?, p, order, enum_cap).map_err(err)?;
    report_to_dict(py, &report)
}

/// The trivial k >= n fixture as a JSON document string.
#[pyfunction]
fn kschur_fixture(n: u32, k: u32) -> PyResult<String> {
    Ok(kschur::make_trivial_fixture(n, k).map_err(err)?.to_json_string())
}

/// Write the trivial k >= n fixture to a file.
#[pyfunction]
fn kschur_fixture_file(n: u32, k: u32, path: &str) -> PyResult<()> {
    kschur::make_trivial_fixture(n, k)
        .map_err(err)?
        .save(std::path::Path::new(path))
        .map_err(err)
}

/// Verify a k-Schur transition table file; returns the two reports.
#[pyfunction]
fn kschur_verify_file<'py>(py: Python<'py>, path: &str) -> PyResult<Bound<'py, PyDict>> {
    let table = kschur::KTable::load(std::path::Path::new(path)).map_err(err)?;
    kschur_reports(py, &table)
}

/// Verify a k-Schur transition table passed as a JSON document string.
#[pyfunction]
fn kschur_verify_json<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let table = kschur::KTable::from_json_str(text).map_err(err)?;
    kschur_reports(py, &table)
}

fn kschur_reports<'py>(py: Python<'py>, table: &kschur::KTable) -> PyResult<Bound<'py, PyDict>> {
    let thm = kschur::verify_thm61(table).map_err(err)?;
    let obs = kschur::verify_observations(table).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("theorem", report_to_dict(py, &thm)?)?;
    d.set_item("observations", report_to_dict(py, &obs)?)?;
    d.set_item("passed", thm.passed() && obs.passed())?;
    Ok(d)
}

#[pymodule]
fn symchar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(partition_count, m)?)?;
    m.add_function(wrap_pyfunction!(character_value, m)?)?;
    m.add_function(wrap_pyfunction!(permutation_value, m)?)?;
    m.add_function(wrap_pyfunction!(char_table, m)?)?;
    m.add_function(wrap_pyfunction!(perm_table, m)?)?;
    m.add_function(wrap_pyfunction!(centralizer_orders, m)?)?;
    m.add_function(wrap_pyfunction!(split_table, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cuts, m)?)?;
    m.add_function(wrap_pyfunction!(cartan, m)?)?;
    m.add_function(wrap_pyfunction!(verify_regular_singular, m)?)?;
    m.add_function(wrap_pyfunction!(partition_series, m)?)?;
    m.add_function(wrap_pyfunction!(divisor_series, m)?)?;
    m.add_function(wrap_pyfunction!(part_count_series, m)?)?;
    m.add_function(wrap_pyfunction!(valuation_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify_series, m)?)?;
    m.add_function(wrap_pyfunction!(kschur_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(kschur_fixture_file, m)?)?;
    m.add_function(wrap_pyfunction!(kschur_verify_file, m)?)?;
    m.add_function(wrap_pyfunction!(kschur_verify_json, m)?)?;
    Ok(())
}
