//! Python bindings: thin wrappers over the core types with bit vectors
//! passed as 0/1 strings and reports as dicts.

use geoldpc::codes::CodeOrigin;
use geoldpc::{
    bitflip_decode, run_bsc_sim, run_css_sim, BitMatrix, BitVec, CssCode, FieldSpec, FlipPolicy,
    LdpcCode, SimReport,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: geoldpc::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.category()))
}

fn policy(rule: &str, max_iter: usize) -> PyResult<FlipPolicy> {
    Ok(FlipPolicy {
        rule: rule.parse().map_err(err)?,
        max_iter,
    })
}

fn matrix_rows(m: &BitMatrix) -> Vec<String> {
    (0..m.rows()).map(|r| m.row(r).to_string()).collect()
}

fn report_dict<'py>(py: Python<'py>, r: &SimReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("trials", r.trials)?;
    d.set_item("block_length", r.block_length)?;
    d.set_item("seed", r.seed)?;
    d.set_item("bit_errors", r.bit_errors)?;
    d.set_item("word_failures", r.word_failures)?;
    d.set_item("x_failures", r.x_failures)?;
    d.set_item("z_failures", r.z_failures)?;
    d.set_item("decode_calls", r.decode_calls)?;
    d.set_item("total_iterations", r.total_iterations)?;
    d.set_item("ber", r.ber())?;
    d.set_item("fer", r.fer())?;
    d.set_item("mean_iterations", r.mean_iterations())?;
    Ok(d)
}

/// A binary LDPC code given by its parity-check matrix.
#[pyclass(name = "LdpcCode", frozen)]
struct PyLdpcCode {
    inner: LdpcCode,
}

#[pymethods]
impl PyLdpcCode {
    /// Euclidean-plane code of order s.
    #[staticmethod]
    #[pyo3(signature = (s, primpoly=None, base=None))]
    fn eg(s: u32, primpoly: Option<u64>, base: Option<(usize, usize)>) -> PyResult<Self> {
        let spec = primpoly
            .map(|p| FieldSpec::new(2 * s, p))
            .transpose()
            .map_err(err)?;
        Ok(Self {
            inner: LdpcCode::eg_with(s, spec, base).map_err(err)?,
        })
    }

    /// Projective-plane code of order s.
    #[staticmethod]
    #[pyo3(signature = (s, primpoly=None, base=None))]
    fn pg(s: u32, primpoly: Option<u64>, base: Option<(usize, usize)>) -> PyResult<Self> {
        let spec = primpoly
            .map(|p| FieldSpec::new(3 * s, p))
            .transpose()
            .map_err(err)?;
        Ok(Self {
            inner: LdpcCode::pg_with(s, spec, base).map_err(err)?,
        })
    }

    /// Build from explicit parity-check rows given as 0/1 strings.
    #[staticmethod]
    fn from_check_rows(rows: Vec<String>) -> PyResult<Self> {
        let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
        let h = BitMatrix::from_bit_strings(&refs).map_err(err)?;
        Ok(Self {
            inner: LdpcCode::from_parity_check(h, CodeOrigin::Explicit),
        })
    }

    /// Parse an alist-format matrix.
    #[staticmethod]
    fn from_alist(text: &str) -> PyResult<Self> {
        let h = geoldpc::alist::read_alist(text).map_err(err)?;
        Ok(Self {
            inner: LdpcCode::from_parity_check(h, CodeOrigin::Explicit),
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    /// Distinct row weights.
    #[getter]
    fn rho(&self) -> Vec<usize> {
        self.inner.params().rho.iter().copied().collect()
    }

    /// Distinct column weights.
    #[getter]
    fn gamma(&self) -> Vec<usize> {
        self.inner.params().gamma.iter().copied().collect()
    }

    /// Largest overlap between two columns.
    #[getter]
    fn lambda_max(&self) -> usize {
        self.inner.params().lambda
    }

    #[getter]
    fn density(&self) -> f64 {
        self.inner.params().density
    }

    /// Known minimum distance, if any, with its provenance.
    #[getter]
    fn d_known(&self) -> Option<usize> {
        self.inner.params().d_known.map(|d| d.value)
    }

    fn check_rows(&self) -> Vec<String> {
        matrix_rows(self.inner.h())
    }

    /// Exhaustive minimum distance; refuses dimensions above `cap`.
    #[pyo3(signature = (cap=22))]
    fn min_distance(&self, cap: usize) -> PyResult<usize> {
        self.inner.min_distance_bruteforce(cap).map_err(err)
    }

    /// Exponents of the generator polynomial when the code is cyclic.
    fn generator_poly(&self) -> Option<Vec<usize>> {
        self.inner.cyclic_structure().map(|c| c.g.coeffs())
    }

    /// Exponents of the check polynomial when the code is cyclic.
    fn check_poly(&self) -> Option<Vec<usize>> {
        self.inner.cyclic_structure().map(|c| c.h.coeffs())
    }

    fn encode(&self, msg: &str) -> PyResult<String> {
        let m = BitVec::parse(msg).map_err(err)?;
        Ok(self.inner.encode(&m).map_err(err)?.to_string())
    }

    /// Bit-flip decode; returns (success, iterations, word).
    #[pyo3(signature = (word, rule="max", max_iter=50))]
    fn decode(&self, word: &str, rule: &str, max_iter: usize) -> PyResult<(bool, usize, String)> {
        let w = BitVec::parse(word).map_err(err)?;
        let res = bitflip_decode(self.inner.h(), &w, policy(rule, max_iter)?).map_err(err)?;
        Ok((res.success, res.iterations, res.word.to_string()))
    }

    fn dual(&self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.dual().map_err(err)?,
        })
    }

    fn split_rows(&self, q: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.split_rows(q).map_err(err)?,
        })
    }

    fn split_columns(&self, q: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.split_columns(q).map_err(err)?,
        })
    }

    fn puncture(&self, row: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.puncture_row(row).map_err(err)?,
        })
    }

    fn to_alist(&self) -> String {
        geoldpc::alist::write_alist(self.inner.h())
    }

    #[pyo3(signature = (p, trials, seed, rule="max", max_iter=50))]
    fn simulate_bsc<'py>(
        &self,
        py: Python<'py>,
        p: f64,
        trials: u64,
        seed: u64,
        rule: &str,
        max_iter: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = run_bsc_sim(&self.inner, policy(rule, max_iter)?, p, trials, seed).map_err(err)?;
        report_dict(py, &r)
    }

    fn __repr__(&self) -> String {
        format!(
            "LdpcCode(n={}, k={}, origin={})",
            self.inner.n(),
            self.inner.k(),
            self.inner.origin()
        )
    }
}

/// A CSS pair built from nested classical codes.
#[pyclass(name = "CssCode", frozen)]
struct PyCssCode {
    inner: CssCode,
}

#[pymethods]
impl PyCssCode {
    /// Row-split a cyclic code by q and pair it with the original.
    #[staticmethod]
    fn from_row_split(code: &PyLdpcCode, q: usize) -> PyResult<Self> {
        Ok(Self {
            inner: CssCode::from_row_split(&code.inner, q).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k_quantum(&self) -> usize {
        self.inner.k_quantum()
    }

    fn h_x_rows(&self) -> Vec<String> {
        matrix_rows(self.inner.h_x())
    }

    fn h_z_rows(&self) -> Vec<String> {
        matrix_rows(self.inner.h_z())
    }

    /// Upper bound on the distance from both component codes.
    #[pyo3(signature = (cap=22))]
    fn distance_bound(&self, cap: usize) -> PyResult<usize> {
        self.inner.distance_bound(cap).map_err(err)
    }

    #[pyo3(signature = (px, pz, trials, seed, rule="max", max_iter=50))]
    #[allow(clippy::too_many_arguments)]
    fn simulate<'py>(
        &self,
        py: Python<'py>,
        px: f64,
        pz: f64,
        trials: u64,
        seed: u64,
        rule: &str,
        max_iter: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r =
            run_css_sim(&self.inner, policy(rule, max_iter)?, px, pz, trials, seed).map_err(err)?;
        report_dict(py, &r)
    }

    fn __repr__(&self) -> String {
        format!(
            "CssCode([[{}, {}]])",
            self.inner.n(),
            self.inner.k_quantum()
        )
    }
}

#[pymodule]
fn _geoldpc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLdpcCode>()?;
    m.add_class::<PyCssCode>()?;
    Ok(())
}
