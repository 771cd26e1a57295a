//! Python bindings: partitions, the counting engines, ρ tables and hook
//! characters. Partitions may be passed as `Partition` objects, lists of
//! positive ints, or literals such as `"3,1,1"` / `"[1^2 3]"`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use fullcycle::characters;
use fullcycle::cli::parse_partition;
use fullcycle::engines::{self, Engine, FactorizationProblem};
use fullcycle::oracle::{self, DEFAULT_BUDGET};
use fullcycle::partitions::make_partition;
use fullcycle::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Internal(_) | Error::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An integer partition, i.e. a cycle type.
#[pyclass(name = "Partition", module = "pyfullcycle", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition {
    inner: fullcycle::Partition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<i64>) -> PyResult<Self> {
        Ok(Self { inner: make_partition(&parts).map_err(to_py)? })
    }

    /// Parses `"3,1,1"` or `"[1^2 3]"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_partition(text).map_err(to_py)? })
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    fn z(&self) -> BigInt {
        self.inner.z()
    }

    /// `aut λ = ∏ m_i!`
    fn aut(&self) -> BigInt {
        self.inner.aut()
    }

    fn class_size(&self) -> BigInt {
        self.inner.class_size()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }
}

#[derive(FromPyObject)]
enum PartitionArg {
    Object(PyPartition),
    Text(String),
    Parts(Vec<i64>),
}

impl PartitionArg {
    fn resolve(self) -> PyResult<fullcycle::Partition> {
        match self {
            PartitionArg::Object(p) => Ok(p.inner),
            PartitionArg::Text(s) => parse_partition(&s).map_err(to_py),
            PartitionArg::Parts(v) => make_partition(&v).map_err(to_py),
        }
    }
}

fn problem_from(alphas: Vec<PartitionArg>) -> PyResult<FactorizationProblem> {
    let alphas = alphas.into_iter().map(PartitionArg::resolve).collect::<PyResult<Vec<_>>>()?;
    FactorizationProblem::new(alphas).map_err(to_py)
}

fn engine_from(name: &str) -> PyResult<Engine> {
    name.parse().map_err(to_py)
}

/// Number of ordered factorizations of `(1 2 … n)` into factors of the given cycle types.
#[pyfunction]
#[pyo3(signature = (alphas, engine = "auto", oracle_budget = DEFAULT_BUDGET))]
fn count(alphas: Vec<PartitionArg>, engine: &str, oracle_budget: u64) -> PyResult<BigInt> {
    let problem = problem_from(alphas)?;
    engines::count_with_budget(&problem, engine_from(engine)?, oracle_budget).map_err(to_py)
}

/// Runs every applicable engine; returns `{engine name: count}`. The oracle
/// is left out when it exceeds its budget.
#[pyfunction]
#[pyo3(signature = (alphas, oracle_budget = DEFAULT_BUDGET))]
fn check(alphas: Vec<PartitionArg>, oracle_budget: u64) -> PyResult<BTreeMap<String, BigInt>> {
    let problem = problem_from(alphas)?;
    let mut engines_to_run = vec![Engine::Ps, Engine::Theorem1, Engine::Characters, Engine::Oracle];
    if engines::genus_of(&problem).genus == Some(0) {
        engines_to_run.push(Engine::Genus0);
    }
    let mut out = BTreeMap::new();
    for e in engines_to_run {
        match engines::count_with_budget(&problem, e, oracle_budget) {
            Ok(v) => {
                out.insert(e.to_string(), v);
            }
            Err(Error::BudgetExceeded { .. }) => {}
            Err(err) => return Err(to_py(err)),
        }
    }
    Ok(out)
}

/// `(r, g2, genus)` with `genus = None` when `g2` is odd or negative.
#[pyfunction]
fn genus(alphas: Vec<PartitionArg>) -> PyResult<(Vec<usize>, i64, Option<usize>)> {
    let g = engines::genus_of(&problem_from(alphas)?);
    Ok((g.r, g.g2, g.genus))
}

/// `{(j, k): ρ_{j,k}}` for the given partition, zero entries included.
#[pyfunction]
fn rho_table(gamma: PartitionArg) -> PyResult<BTreeMap<(usize, usize), BigInt>> {
    let table = engines::rho_table(&gamma.resolve()?).map_err(to_py)?;
    Ok(table.iter().map(|(j, k, v)| ((j, k), v.clone())).collect())
}

/// `{(a, b): χ^{(a|b)}_γ}` over all hooks of size `|γ|`.
#[pyfunction]
fn hook_characters(gamma: PartitionArg) -> PyResult<BTreeMap<(usize, usize), BigInt>> {
    let series = characters::hook_series(&gamma.resolve()?).map_err(to_py)?;
    Ok(series.iter().map(|(h, v)| ((h.a, h.b), v.clone())).collect())
}

/// `χ^β_μ` by the border-strip rule.
#[pyfunction]
fn character(beta: PartitionArg, mu: PartitionArg) -> PyResult<BigInt> {
    characters::mn_character(&beta.resolve()?, &mu.resolve()?).map_err(to_py)
}

/// Connection coefficient for an arbitrary target class, via the full character sum.
#[pyfunction]
fn count_via_characters(target: PartitionArg, alphas: Vec<PartitionArg>) -> PyResult<BigInt> {
    let alphas = alphas.into_iter().map(PartitionArg::resolve).collect::<PyResult<Vec<_>>>()?;
    characters::count_via_characters(&target.resolve()?, &alphas).map_err(to_py)
}

/// Brute-force count for an arbitrary target class.
#[pyfunction]
#[pyo3(signature = (target, alphas, budget = DEFAULT_BUDGET))]
fn count_bruteforce(target: PartitionArg, alphas: Vec<PartitionArg>, budget: u64) -> PyResult<BigInt> {
    let alphas = alphas.into_iter().map(PartitionArg::resolve).collect::<PyResult<Vec<_>>>()?;
    oracle::count_bruteforce(&target.resolve()?, &alphas, budget).map_err(to_py)
}

#[pymodule]
fn pyfullcycle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(rho_table, m)?)?;
    m.add_function(wrap_pyfunction!(hook_characters, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(count_via_characters, m)?)?;
    m.add_function(wrap_pyfunction!(count_bruteforce, m)?)?;
    Ok(())
}
