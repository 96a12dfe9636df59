//! Python bindings for `golay-core`.
//!
//! Bit vectors cross the boundary as strings of `0`/`1`, matrices as lists
//! of such strings. Library errors are raised as `ValueError`.

use std::collections::BTreeMap;
use std::str::FromStr;

use golay_core::codec::{build_trellis, decode_ml, decode_trellis, encode, simulate_bsc, Trellis};
use golay_core::golay::build_variant;
use golay_core::{BitMatrix, BitVector, G78Choices, ParitySubmatrix};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: FromStr>(s: &str) -> PyResult<T>
where
    T::Err: ToString,
{
    s.parse().map_err(value_err)
}

fn parity_or_example(p: Option<&str>) -> PyResult<ParitySubmatrix> {
    p.map_or_else(|| Ok(ParitySubmatrix::example()), parse)
}

fn choices_or_example(g78: Option<&str>) -> PyResult<G78Choices> {
    g78.map_or_else(|| Ok(G78Choices::example()), parse)
}

fn matrix(rows: Vec<String>) -> PyResult<BitMatrix> {
    BitMatrix::from_rows(&rows).map_err(value_err)
}

// `Vec<u8>` would convert to `bytes`.
fn widen(values: &[u8]) -> Vec<u32> {
    values.iter().map(|&v| v as u32).collect()
}

fn rows_of(m: &BitMatrix) -> Vec<String> {
    m.rows().iter().map(BitVector::to_string).collect()
}

/// One of the eight (24,12,8) codes built from a seed and companion C'(variant).
#[pyclass(name = "GolayCode", module = "golay_array", frozen)]
struct PyGolayCode {
    code: golay_core::GolayCode,
    trellis: Trellis,
    parity: ParitySubmatrix,
    variant: usize,
}

#[pymethods]
impl PyGolayCode {
    #[new]
    #[pyo3(signature = (p=None, variant=1, g78=None))]
    fn new(p: Option<&str>, variant: usize, g78: Option<&str>) -> PyResult<Self> {
        let parity = parity_or_example(p)?;
        let code = build_variant(&parity, variant, &choices_or_example(g78)?).map_err(value_err)?;
        let trellis = build_trellis(&code);
        Ok(Self {
            code,
            trellis,
            parity,
            variant,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        golay_core::golay::N
    }

    #[getter]
    fn k(&self) -> usize {
        golay_core::golay::K
    }

    #[getter]
    fn variant(&self) -> usize {
        self.variant
    }

    fn generator(&self) -> Vec<String> {
        rows_of(self.code.generator())
    }

    fn weight_distribution(&self) -> BTreeMap<usize, usize> {
        self.code.weight_distribution()
    }

    fn contains(&self, word: &str) -> PyResult<bool> {
        Ok(self.code.contains(&parse(word)?))
    }

    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = golay_core::verify_golay(&self.code);
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("k", r.k)?;
        d.set_item("d", r.d)?;
        d.set_item("weight_distribution", r.weight_dist.clone())?;
        d.set_item("self_dual", r.self_dual)?;
        d.set_item("doubly_even", r.doubly_even)?;
        d.set_item("disjoint", r.disjoint)?;
        d.set_item("weight4_distinct", r.weight4_distinct)?;
        d.set_item("is_golay", r.is_golay())?;
        Ok(d)
    }

    fn encode(&self, message: &str) -> PyResult<String> {
        let c = encode(&parse(message)?, &self.code).map_err(value_err)?;
        Ok(c.to_string())
    }

    /// Returns `(codeword, message, distance, tie)`.
    #[pyo3(signature = (received, decoder="trellis"))]
    fn decode(&self, received: &str, decoder: &str) -> PyResult<(String, String, usize, bool)> {
        let r: BitVector = parse(received)?;
        let out = match decoder {
            "ml" => decode_ml(&r, &self.code),
            "trellis" => decode_trellis(&r, &self.trellis),
            other => return Err(value_err(format!("unknown decoder {other:?}"))),
        }
        .map_err(value_err)?;
        Ok((
            out.codeword.to_string(),
            out.message.to_string(),
            out.distance,
            out.tie,
        ))
    }

    fn trellis_profile(&self) -> Vec<usize> {
        self.trellis.boundary_profile().to_vec()
    }

    #[pyo3(signature = (p_flip, trials=10_000, seed=0))]
    fn simulate<'py>(
        &self,
        py: Python<'py>,
        p_flip: f64,
        trials: u64,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let s = py
            .detach(|| simulate_bsc(&self.code, p_flip, trials, seed))
            .map_err(value_err)?;
        let d = PyDict::new(py);
        d.set_item("p", s.p)?;
        d.set_item("trials", s.trials)?;
        d.set_item("seed", s.seed)?;
        d.set_item("word_errors", s.word_errors)?;
        d.set_item("wer", s.wer)?;
        d.set_item("channel_ber", s.channel_ber)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "GolayCode(p={:?}, variant={})",
            self.parity.to_string(),
            self.variant
        )
    }
}

/// Generator rows of the systematic (8,4,4) seed.
#[pyfunction]
#[pyo3(signature = (p=None))]
fn build_systematic(p: Option<&str>) -> PyResult<Vec<String>> {
    let c = golay_core::build_systematic(&parity_or_example(p)?);
    Ok(rows_of(c.generator()))
}

/// The six index permutations that yield valid companions, as 1-based lists.
#[pyfunction]
fn enumerate_valid_permutations() -> Vec<Vec<u32>> {
    golay_core::enumerate_valid_permutations()
        .iter()
        .map(|l| widen(&l.mapping()))
        .collect()
}

/// Weight-4 codewords of the seed and eight companions as `(label, values)`.
#[pyfunction]
#[pyo3(signature = (p=None, g78=None))]
fn table1(p: Option<&str>, g78: Option<&str>) -> PyResult<Vec<(String, Vec<u32>)>> {
    let t =
        golay_core::table1(&parity_or_example(p)?, &choices_or_example(g78)?).map_err(value_err)?;
    Ok(t.rows
        .into_iter()
        .map(|r| (r.label.to_string(), widen(&r.values)))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (p=None, g78=None))]
fn verify_properties<'py>(
    py: Python<'py>,
    p: Option<&str>,
    g78: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let t =
        golay_core::table1(&parity_or_example(p)?, &choices_or_example(g78)?).map_err(value_err)?;
    let r = golay_core::verify_properties(&t);
    let d = PyDict::new(py);
    d.set_item("sizes_ok", r.sizes_ok)?;
    d.set_item("seed_disjoint", r.seed_disjoint)?;
    d.set_item("pairwise_two", r.pairwise_two)?;
    d.set_item("pairs_complementary", r.pairs_complementary)?;
    d.set_item("companion_union", r.companion_union)?;
    d.set_item("total_union", r.total_union)?;
    d.set_item("all_ok", r.all_ok())?;
    Ok(d)
}

/// The 8x56 incidence matrix: `{"rows", "columns", "params"}` where
/// `params` is `(v, b, r, k, lambda)`.
#[pyfunction]
#[pyo3(signature = (p=None, g78=None))]
fn incidence_matrix<'py>(
    py: Python<'py>,
    p: Option<&str>,
    g78: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let t =
        golay_core::table1(&parity_or_example(p)?, &choices_or_example(g78)?).map_err(value_err)?;
    let q = golay_core::incidence_matrix(&t).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("rows", rows_of(&q.entries))?;
    d.set_item("columns", widen(&q.columns))?;
    d.set_item("params", q.params.map(|p| (p.v, p.b, p.r, p.k, p.lambda)))?;
    Ok(d)
}

#[pyfunction]
fn to_decimal(bits: &str) -> PyResult<u8> {
    golay_core::to_decimal(&parse(bits)?).map_err(value_err)
}

#[pyfunction]
fn rank(rows: Vec<String>) -> PyResult<usize> {
    Ok(matrix(rows)?.rank())
}

#[pyfunction]
fn kronecker(a: Vec<String>, b: Vec<String>) -> PyResult<Vec<String>> {
    Ok(rows_of(&matrix(a)?.kronecker(&matrix(b)?)))
}

#[pyfunction]
fn row_space_equal(a: Vec<String>, b: Vec<String>) -> PyResult<bool> {
    matrix(a)?.row_space_equal(&matrix(b)?).map_err(value_err)
}

#[pyfunction]
fn check_turyn_equivalence() -> bool {
    golay_core::check_turyn_equivalence()
}

#[pyfunction]
fn check_forney_equivalence() -> bool {
    golay_core::check_forney_equivalence()
}

#[pymodule]
pub fn golay_array(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGolayCode>()?;
    m.add_function(wrap_pyfunction!(build_systematic, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_valid_permutations, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(verify_properties, m)?)?;
    m.add_function(wrap_pyfunction!(incidence_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(to_decimal, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(row_space_equal, m)?)?;
    m.add_function(wrap_pyfunction!(check_turyn_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(check_forney_equivalence, m)?)?;
    Ok(())
}
