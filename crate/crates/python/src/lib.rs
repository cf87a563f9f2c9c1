//! Python bindings: a thin class around the core framework type plus the
//! random generator. Interpretations cross the boundary in their text
//! form (`t(a) f(b) u(c)`), the same syntax the command line uses.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use adf_core::meta::GenConfig;
use adf_core::parse::{parse_adf, parse_interp};
use adf_core::print::{instance_text, interp_text};
use adf_core::{meta, oracle, semantics, Caps, Semantics};

fn value_error(messages: impl IntoIterator<Item = String>) -> PyErr {
    PyValueError::new_err(messages.into_iter().collect::<Vec<_>>().join("\n"))
}

fn semantics_arg(code: &str) -> PyResult<Semantics> {
    Semantics::from_code(code).ok_or_else(|| {
        PyValueError::new_err(format!(
            "unknown semantics `{code}`; use mod, stb, adm, com, prf or grd"
        ))
    })
}

/// A validated dialectical framework.
#[pyclass(name = "Adf", frozen)]
struct PyAdf {
    inner: adf_core::Adf,
    caps: Caps,
}

#[pymethods]
impl PyAdf {
    /// Parse an instance in the fact format (`s(a). ac(a, c(v)). ...`).
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let adf =
            parse_adf(text).map_err(|ds| value_error(ds.iter().map(|d| d.to_string())))?;
        Ok(PyAdf {
            inner: adf,
            caps: Caps::default(),
        })
    }

    /// Statement names in declaration order.
    fn statements(&self) -> Vec<String> {
        self.inner.vocab().names().map(str::to_owned).collect()
    }

    /// All interpretations under a semantics, one `t/f/u` string each.
    #[pyo3(signature = (sem, oracle = false))]
    fn solve(&self, sem: &str, oracle: bool) -> PyResult<Vec<String>> {
        let sem = semantics_arg(sem)?;
        let found = if oracle {
            oracle::enumerate_bruteforce(&self.inner, sem, &self.caps)
        } else {
            semantics::enumerate(&self.inner, sem, &self.caps)
        }
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(found
            .iter()
            .map(|v| interp_text(v, self.inner.vocab()))
            .collect())
    }

    /// Decide one interpretation under one semantics.
    fn check(&self, sem: &str, interp: &str) -> PyResult<bool> {
        let sem = semantics_arg(sem)?;
        let v = parse_interp(interp, self.inner.vocab())
            .map_err(|ds| value_error(ds.iter().map(|d| d.to_string())))?;
        let caps = &self.caps;
        let fail = |e: adf_core::Error| PyValueError::new_err(e.to_string());
        let verdict = match sem {
            Semantics::Model => match v.to_two_valued() {
                Some(w) => semantics::is_model(&self.inner, &w),
                None => false,
            },
            Semantics::Stable => match v.to_two_valued() {
                Some(w) => semantics::is_stable(&self.inner, &w, caps).map_err(fail)?,
                None => false,
            },
            Semantics::Admissible => semantics::is_admissible(&self.inner, &v, caps).map_err(fail)?,
            Semantics::Complete => semantics::is_complete(&self.inner, &v, caps).map_err(fail)?,
            Semantics::Preferred => semantics::is_preferred(&self.inner, &v, caps).map_err(fail)?,
            Semantics::Grounded => semantics::is_grounded(&self.inner, &v, caps).map_err(fail)?,
        };
        Ok(verdict)
    }

    /// The grounded interpretation as a `t/f/u` string.
    fn grounded(&self) -> PyResult<String> {
        let g = semantics::grounded(&self.inner, &self.caps)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(interp_text(&g, self.inner.vocab()))
    }

    /// The reduct under a two-valued model, as a new framework.
    fn reduct(&self, interp: &str) -> PyResult<PyAdf> {
        let v = parse_interp(interp, self.inner.vocab())
            .map_err(|ds| value_error(ds.iter().map(|d| d.to_string())))?;
        let w = v
            .to_two_valued()
            .ok_or_else(|| PyValueError::new_err("the reduct needs a two-valued model"))?;
        let reduced = semantics::reduct(&self.inner, &w)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyAdf {
            inner: reduced,
            caps: self.caps.clone(),
        })
    }

    /// The instance text; parsing it yields this framework back.
    fn to_text(&self) -> String {
        instance_text(&self.inner)
    }

    /// Truth table of one statement: (parent names, rows), where row `i`
    /// gives the condition's value with exactly the parents of bitmask
    /// `i` accepted.
    fn truth_table(&self, statement: &str) -> PyResult<(Vec<String>, Vec<bool>)> {
        let s = self
            .inner
            .vocab()
            .index_of(statement)
            .ok_or_else(|| PyValueError::new_err(format!("unknown statement `{statement}`")))?;
        let table = self
            .inner
            .truth_table(s, &self.caps)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        let parents = table
            .parents
            .iter()
            .map(|&p| self.inner.vocab().name(p).to_owned())
            .collect();
        Ok((parents, table.rows))
    }

    fn __repr__(&self) -> String {
        format!("Adf({} statements)", self.inner.statement_count())
    }
}

/// A random instance, reproducible from the seed.
#[pyfunction]
#[pyo3(signature = (n, seed, af = false))]
fn generate(n: usize, seed: u64, af: bool) -> PyResult<PyAdf> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    let cfg = GenConfig {
        n_statements: n,
        seed,
        ..GenConfig::default()
    };
    let adf = if af {
        meta::gen_random_af(&cfg)
    } else {
        meta::gen_random_adf(&cfg)
    };
    Ok(PyAdf {
        inner: adf,
        caps: Caps::default(),
    })
}

#[pymodule]
fn adfpy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAdf>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
