//! Python bindings: Laurent polynomials, Clifford operator expressions, the
//! embeddings, partition helpers and the command-line reports.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qskew::cli::report_for_args;
use qskew::duality::{self, Partition};
use qskew::embeddings;
use qskew::qclifford::{CliffordGen, Flavor, OperatorExpr, DEFAULT_CAP};
use qskew::qgroup::QGroupGen;
use qskew::qscalar::{exact_div, parse_rational, QLaurent};
use qskew::{BasisState, GridShape};

fn err(e: qskew::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn shape(n: usize, m: usize) -> PyResult<GridShape> {
    GridShape::new(n, m).map_err(err)
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// A Laurent polynomial in `q` with rational coefficients.
#[pyclass(name = "Laurent", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLaurent(QLaurent);

#[pymethods]
impl PyLaurent {
    /// Builds `sum c q^k` from `(k, c)` pairs; `c` is an int or a `"num/den"` string.
    #[new]
    #[pyo3(signature = (terms = Vec::new()))]
    fn new(terms: Vec<(i64, String)>) -> PyResult<Self> {
        let terms = terms
            .into_iter()
            .map(|(k, c)| Ok((k, parse_rational(&c).map_err(err)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Self(QLaurent::from_terms(terms)))
    }

    #[staticmethod]
    fn q_pow(k: i64) -> Self {
        Self(QLaurent::q_pow(k))
    }

    fn __add__(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    fn __sub__(&self, rhs: &Self) -> Self {
        Self(&self.0 - &rhs.0)
    }

    fn __mul__(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    /// Exact quotient; raises if the division leaves a remainder.
    fn exact_div(&self, rhs: &Self) -> PyResult<Self> {
        exact_div(&self.0, &rhs.0).map(Self).map_err(err)
    }

    /// Value at `q = value`, as a string such as `"5/2"` or `"3"`.
    fn specialize(&self, value: &str) -> PyResult<String> {
        let v = parse_rational(value).map_err(err)?;
        self.0.specialize(&v).map(|r| r.to_string()).map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent({})", self.0)
    }
}

/// A linear combination of Clifford words acting on `2^len` basis states.
#[pyclass(name = "Operator", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOperator(OperatorExpr);

#[pymethods]
impl PyOperator {
    #[getter]
    fn len(&self) -> usize {
        self.0.len()
    }

    /// Image of a basis state given as a bitstring, as `(coefficient, state)` pairs.
    fn apply(&self, state: &str) -> PyResult<Vec<(String, String)>> {
        let s = BasisState::parse(state).map_err(err)?;
        if s.len() != self.0.len() {
            return Err(err(qskew::Error::LengthMismatch { expected: self.0.len(), found: s.len() }));
        }
        Ok(self.0.apply_state(s).iter().map(|(t, c)| (c.to_string(), t.to_string())).collect())
    }

    /// True when both operators have the same matrix.
    fn same_action(&self, other: &Self) -> PyResult<bool> {
        Ok(self.0.to_matrix().map_err(err)? == other.0.to_matrix().map_err(err)?)
    }

    /// True when the matrix vanishes.
    fn is_zero_operator(&self) -> PyResult<bool> {
        Ok(self.0.to_matrix().map_err(err)?.is_zero())
    }

    fn __add__(&self, rhs: &Self) -> Self {
        Self(self.0.add(&rhs.0))
    }

    fn __sub__(&self, rhs: &Self) -> Self {
        Self(self.0.sub(&rhs.0))
    }

    fn __mul__(&self, rhs: &Self) -> Self {
        Self(self.0.mul(&rhs.0))
    }

    fn scale(&self, c: &PyLaurent) -> Self {
        Self(self.0.scale(&c.0))
    }

    fn commutator(&self, rhs: &Self) -> Self {
        Self(self.0.commutator(&rhs.0))
    }

    /// `self rhs - q^k rhs self`.
    fn q_commutator(&self, rhs: &Self, k: i64) -> Self {
        Self(self.0.q_commutator(&rhs.0, k))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Operator[{}]({})", self.0.len(), self.0)
    }
}

fn clifford(len: usize, g: CliffordGen) -> PyResult<PyOperator> {
    if g.index == 0 || g.index > len {
        return Err(PyValueError::new_err(format!("position {} outside 1..={len}", g.index)));
    }
    OperatorExpr::gen(len, Flavor::Quantum, g).map(PyOperator).map_err(err)
}

#[pyfunction]
fn psi(k: usize, len: usize) -> PyResult<PyOperator> {
    clifford(len, CliffordGen::psi(k))
}

#[pyfunction]
fn psid(k: usize, len: usize) -> PyResult<PyOperator> {
    clifford(len, CliffordGen::psid(k))
}

#[pyfunction]
fn omega(k: usize, len: usize) -> PyResult<PyOperator> {
    clifford(len, CliffordGen::omega(k))
}

#[pyfunction]
fn omega_inv(k: usize, len: usize) -> PyResult<PyOperator> {
    clifford(len, CliffordGen::omega_inv(k))
}

fn generator(g: &str) -> PyResult<QGroupGen> {
    QGroupGen::parse(g).map_err(err)
}

/// `Phi_{q,p}` of a generator such as `"E1"`, `"F2"`, `"K1^-1"` or `"L3"`.
#[pyfunction]
fn phi_q(p: usize, gen: &str) -> PyResult<PyOperator> {
    embeddings::phi_q(p, generator(gen)?).map(PyOperator).map_err(err)
}

#[pyfunction]
fn lambda_q(n: usize, m: usize, gen: &str) -> PyResult<PyOperator> {
    embeddings::lambda_q(shape(n, m)?, generator(gen)?).map(PyOperator).map_err(err)
}

#[pyfunction]
fn rho_q(n: usize, m: usize, gen: &str) -> PyResult<PyOperator> {
    embeddings::rho_q(shape(n, m)?, generator(gen)?).map(PyOperator).map_err(err)
}

#[pyfunction]
fn classical_lambda(n: usize, m: usize, gen: &str) -> PyResult<PyOperator> {
    embeddings::classical_lambda(shape(n, m)?, generator(gen)?).map(PyOperator).map_err(err)
}

#[pyfunction]
fn classical_rho(n: usize, m: usize, gen: &str) -> PyResult<PyOperator> {
    embeddings::classical_rho(shape(n, m)?, generator(gen)?).map(PyOperator).map_err(err)
}

#[pyfunction]
fn partitions_in_box(n: usize, m: usize) -> Vec<Vec<usize>> {
    duality::partitions_in_box(n, m).iter().map(|p| p.parts().to_vec()).collect()
}

#[pyfunction]
fn conjugate(parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

#[pyfunction]
fn weyl_dim(parts: Vec<usize>, p: usize) -> PyResult<u64> {
    duality::weyl_dim(&partition(parts)?, p).map_err(err)
}

/// Bitstring of the highest weight state of a partition in the `n x m` grid.
#[pyfunction]
fn hwv_state(parts: Vec<usize>, n: usize, m: usize) -> PyResult<String> {
    Ok(partition(parts)?.diagram_state(shape(n, m)?).map_err(err)?.to_string())
}

#[pyfunction]
fn row_col_weights(n: usize, m: usize, state: &str) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let s = BasisState::parse(state).map_err(err)?;
    shape(n, m)?.row_col_weights(&s).map_err(err)
}

#[pyfunction]
fn diagram(n: usize, m: usize, state: &str) -> PyResult<String> {
    let s = BasisState::parse(state).map_err(err)?;
    let g = shape(n, m)?;
    if s.len() != g.size() {
        return Err(err(qskew::Error::LengthMismatch { expected: g.size(), found: s.len() }));
    }
    Ok(g.diagram(&s))
}

#[pyfunction]
fn dual_cauchy_check(n: usize, m: usize) -> PyResult<bool> {
    Ok(duality::dual_cauchy_check(n, m).map_err(err)?.status == qskew::qgroup::Status::Pass)
}

/// Runs a command-line report such as `"verify commutant"` or `"decompose"`
/// and returns the parsed JSON report.
#[pyfunction]
#[pyo3(signature = (command, n = 2, m = 2, spec_q = None, cap = DEFAULT_CAP, seed = 0))]
fn run<'py>(
    py: Python<'py>,
    command: &str,
    n: usize,
    m: usize,
    spec_q: Option<Vec<String>>,
    cap: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let mut args: Vec<String> = vec!["qskew".into()];
    args.extend(command.split_whitespace().map(String::from));
    for (flag, value) in [("--n", n.to_string()), ("--m", m.to_string()), ("--cap", cap.to_string()), ("--seed", seed.to_string())] {
        args.push(flag.into());
        args.push(value);
    }
    for v in spec_q.unwrap_or_default() {
        args.push("--spec-q".into());
        args.push(v);
    }
    args.push("--json".into());
    let report = py.detach(|| report_for_args(&args)).map_err(PyValueError::new_err)?;
    py.import("json")?.call_method1("loads", (report.to_json(),))
}

#[pymodule]
#[pyo3(name = "qskew")]
fn qskew_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyOperator>()?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(psid, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(omega_inv, m)?)?;
    m.add_function(wrap_pyfunction!(phi_q, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_q, m)?)?;
    m.add_function(wrap_pyfunction!(rho_q, m)?)?;
    m.add_function(wrap_pyfunction!(classical_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(classical_rho, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_in_box, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(hwv_state, m)?)?;
    m.add_function(wrap_pyfunction!(row_col_weights, m)?)?;
    m.add_function(wrap_pyfunction!(diagram, m)?)?;
    m.add_function(wrap_pyfunction!(dual_cauchy_check, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
